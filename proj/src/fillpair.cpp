#include "cuspiso/fillpair.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <numeric>

#include "cuspiso/cusp.hpp"
#include "cuspiso/math_util.hpp"

namespace cuspiso {

namespace {

int curve_dart_count(const CombinatorialMap& m, Curve c) {
    int n = 0;
    for (Curve l : m.label)
        if (l == c) ++n;
    return n;
}

// Continuation of a curve: cross the edge, then take the opposite dart at the
// far vertex.
int next_curve_dart(const CombinatorialMap& m, int d) {
    return m.rotation[static_cast<std::size_t>(
        m.rotation[static_cast<std::size_t>(m.involution[static_cast<std::size_t>(d)])])];
}

int count_curve_orbits(const CombinatorialMap& m, Curve c) {
    std::vector<char> seen(static_cast<std::size_t>(m.darts), 0);
    int orbits = 0;
    for (int d = 0; d < m.darts; ++d) {
        if (m.label[static_cast<std::size_t>(d)] != c || seen[static_cast<std::size_t>(d)])
            continue;
        ++orbits;
        int x = d;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            x = next_curve_dart(m, x);
        }
    }
    return orbits;
}

struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

}  // namespace

CombinatorialMap make_map(int darts, const std::vector<std::vector<int>>& rotation_cycles,
                          const std::vector<std::pair<int, int>>& involution_pairs,
                          const std::vector<Curve>& labels, int punctured_face) {
    if (darts <= 0 || darts % 4 != 0)
        throw MapFormatError("map: dart count must be a positive multiple of 4");
    if (static_cast<int>(labels.size()) != darts)
        throw MapFormatError("map: need one curve label per dart");

    CombinatorialMap m;
    m.darts = darts;
    m.label = labels;
    m.rotation.assign(static_cast<std::size_t>(darts), -1);
    m.vertex_of.assign(static_cast<std::size_t>(darts), -1);
    m.involution.assign(static_cast<std::size_t>(darts), -1);

    int vertex = 0;
    for (const auto& cycle : rotation_cycles) {
        if (cycle.size() != 4)
            throw MapFormatError("map: vertex rotation cycle of length " +
                                 std::to_string(cycle.size()) + " (the graph must be 4-valent)");
        for (std::size_t k = 0; k < 4; ++k) {
            const int d = cycle[k];
            if (d < 0 || d >= darts)
                throw MapFormatError("map: dart index " + std::to_string(d) + " out of range");
            if (m.rotation[static_cast<std::size_t>(d)] != -1 ||
                m.vertex_of[static_cast<std::size_t>(d)] != -1)
                throw MapFormatError("map: dart " + std::to_string(d) +
                                     " appears twice in the vertex rotation");
            m.rotation[static_cast<std::size_t>(d)] = cycle[(k + 1) % 4];
            m.vertex_of[static_cast<std::size_t>(d)] = vertex;
        }
        ++vertex;
    }
    m.num_vertices = vertex;
    for (int d = 0; d < darts; ++d)
        if (m.rotation[static_cast<std::size_t>(d)] == -1)
            throw MapFormatError("map: dart " + std::to_string(d) +
                                 " missing from the vertex rotation");

    for (const auto& [a, b] : involution_pairs) {
        if (a < 0 || a >= darts || b < 0 || b >= darts)
            throw MapFormatError("map: involution pair (" + std::to_string(a) + ", " +
                                 std::to_string(b) + ") out of range");
        if (a == b)
            throw MapFormatError("map: dart " + std::to_string(a) +
                                 " fixed by the edge involution");
        if (m.involution[static_cast<std::size_t>(a)] != -1 ||
            m.involution[static_cast<std::size_t>(b)] != -1)
            throw MapFormatError("map: dart " + std::to_string(std::min(a, b)) +
                                 " appears in two involution pairs");
        m.involution[static_cast<std::size_t>(a)] = b;
        m.involution[static_cast<std::size_t>(b)] = a;
    }
    for (int d = 0; d < darts; ++d)
        if (m.involution[static_cast<std::size_t>(d)] == -1)
            throw MapFormatError("map: dart " + std::to_string(d) +
                                 " missing from the edge involution");

    for (int d = 0; d < darts; ++d) {
        if (m.label[static_cast<std::size_t>(d)] !=
            m.label[static_cast<std::size_t>(m.involution[static_cast<std::size_t>(d)])])
            throw MapFormatError("map: involution does not preserve the curve label at dart " +
                                 std::to_string(d));
        if (m.label[static_cast<std::size_t>(d)] ==
            m.label[static_cast<std::size_t>(m.rotation[static_cast<std::size_t>(d)])])
            throw MapFormatError("map: curve labels do not alternate around the vertex at dart " +
                                 std::to_string(d));
    }

    for (Curve c : {Curve::Alpha, Curve::Beta}) {
        if (curve_dart_count(m, c) != darts / 2)
            throw MapFormatError("map: the two curves must each own half of the darts");
        const int orbits = count_curve_orbits(m, c);
        if (orbits != 2)
            throw MapFormatError(std::string("map: curve ") +
                                 (c == Curve::Alpha ? "alpha" : "beta") + " has " +
                                 std::to_string(orbits) +
                                 " traversal orbits; a single closed curve has exactly 2");
    }

    Dsu dsu(m.num_vertices);
    for (int d = 0; d < darts; ++d)
        dsu.merge(m.vertex_of[static_cast<std::size_t>(d)],
                  m.vertex_of[static_cast<std::size_t>(m.involution[static_cast<std::size_t>(d)])]);
    int comps = 0;
    for (int v = 0; v < m.num_vertices; ++v)
        if (dsu.find(v) == v) ++comps;
    if (comps != 1) throw MapFormatError("map: underlying graph is disconnected");

    // Face count is needed to range-check the marked face.
    m.punctured_face = 0;
    const int faces = static_cast<int>(compute_faces(m).faces.size());
    if (punctured_face < 0 || punctured_face >= faces)
        throw MapFormatError("map: punctured_face " + std::to_string(punctured_face) +
                             " out of range (the map has " + std::to_string(faces) + " faces)");
    m.punctured_face = punctured_face;
    return m;
}

CombinatorialMap load_map(const nlohmann::json& doc) {
    if (!doc.is_object()) throw MapFormatError("map document: expected a JSON object");
    for (const char* key : {"darts", "vertex_rotation", "edge_involution", "labels"})
        if (!doc.contains(key))
            throw MapFormatError(std::string("map document: missing field '") + key + "'");
    int darts;
    try {
        darts = doc.at("darts").get<int>();
    } catch (const nlohmann::json::exception&) {
        throw MapFormatError("map document: 'darts' must be an integer");
    }

    std::vector<std::vector<int>> cycles;
    std::vector<std::pair<int, int>> pairs;
    try {
        cycles = doc.at("vertex_rotation").get<std::vector<std::vector<int>>>();
        for (const auto& pr : doc.at("edge_involution")) {
            if (!pr.is_array() || pr.size() != 2)
                throw MapFormatError("map document: involution entries must be dart pairs");
            pairs.emplace_back(pr[0].get<int>(), pr[1].get<int>());
        }
    } catch (const nlohmann::json::exception&) {
        throw MapFormatError("map document: malformed rotation or involution arrays");
    }

    std::vector<Curve> labels(static_cast<std::size_t>(std::max(darts, 0)), Curve::Alpha);
    std::vector<char> label_seen(labels.size(), 0);
    if (!doc.at("labels").is_object())
        throw MapFormatError("map document: 'labels' must map dart ids to \"A\" or \"B\"");
    for (const auto& [key, val] : doc.at("labels").items()) {
        int d;
        try {
            d = std::stoi(key);
        } catch (...) {
            throw MapFormatError("map document: label key '" + key + "' is not a dart id");
        }
        if (d < 0 || d >= darts)
            throw MapFormatError("map document: label for out-of-range dart " + key);
        const std::string s = val.is_string() ? val.get<std::string>() : std::string();
        if (s == "A")
            labels[static_cast<std::size_t>(d)] = Curve::Alpha;
        else if (s == "B")
            labels[static_cast<std::size_t>(d)] = Curve::Beta;
        else
            throw MapFormatError("map document: label of dart " + key + " must be \"A\" or \"B\"");
        label_seen[static_cast<std::size_t>(d)] = 1;
    }
    for (int d = 0; d < darts; ++d)
        if (!label_seen[static_cast<std::size_t>(d)])
            throw MapFormatError("map document: missing label for dart " + std::to_string(d));

    const int punctured = doc.value("punctured_face", 0);
    return make_map(darts, cycles, pairs, labels, punctured);
}

FaceStructure compute_faces(const CombinatorialMap& m) {
    FaceStructure f;
    f.face_of.assign(static_cast<std::size_t>(m.darts), -1);
    for (int d = 0; d < m.darts; ++d) {
        if (f.face_of[static_cast<std::size_t>(d)] != -1) continue;
        std::vector<int> cycle;
        int x = d;
        while (f.face_of[static_cast<std::size_t>(x)] == -1) {
            f.face_of[static_cast<std::size_t>(x)] = static_cast<int>(f.faces.size());
            cycle.push_back(x);
            x = m.rotation[static_cast<std::size_t>(
                m.involution[static_cast<std::size_t>(x)])];
        }
        f.sides.push_back(static_cast<int>(cycle.size()));
        f.faces.push_back(std::move(cycle));
    }
    f.punctured_face = m.punctured_face;
    return f;
}

GenusData genus_of(const CombinatorialMap& m, const FaceStructure& f) {
    GenusData gd;
    gd.i = m.darts / 4;
    gd.r = static_cast<int>(f.faces.size());
    const long twog = gd.i - gd.r + 2;
    if (twog < 2 || twog % 2 != 0)
        throw InvariantError("genus_of: Euler count i - r + 2 = " + std::to_string(twog) +
                             " is not twice a positive genus; the map is not a filling pair "
                             "cell decomposition");
    gd.g = static_cast<int>(twog / 2);
    return gd;
}

DualGraph dual_graph(const CombinatorialMap& m, const FaceStructure& f) {
    DualGraph d;
    d.num_vertices = static_cast<int>(f.faces.size());

    std::vector<int> edge_of_dart(static_cast<std::size_t>(m.darts), -1);
    for (int dart = 0; dart < m.darts; ++dart) {
        const int other = m.involution[static_cast<std::size_t>(dart)];
        if (dart > other) continue;
        const int id = static_cast<int>(d.edges.size());
        edge_of_dart[static_cast<std::size_t>(dart)] = id;
        edge_of_dart[static_cast<std::size_t>(other)] = id;
        d.edges.push_back({f.face_of[static_cast<std::size_t>(dart)],
                           f.face_of[static_cast<std::size_t>(other)], dart});
    }

    d.rotation.resize(static_cast<std::size_t>(d.num_vertices));
    for (int face = 0; face < d.num_vertices; ++face) {
        const auto& cycle = f.faces[static_cast<std::size_t>(face)];
        auto& rot = d.rotation[static_cast<std::size_t>(face)];
        rot.reserve(cycle.size());
        for (int dart : cycle) rot.push_back(edge_of_dart[static_cast<std::size_t>(dart)]);
    }
    return d;
}

namespace {

// Backtracking state for the spread-forest search.
struct SpreadSearch {
    const DualGraph& d;
    int target_edges;
    int target_components;
    std::vector<std::vector<std::pair<int, int>>> slots;  // per edge: (vertex, rotation position)
    std::vector<std::vector<char>> occupied;              // per vertex: chosen incidence positions
    std::vector<int> chosen;
    Dsu dsu;
    int components;
    std::vector<int>* out;

    SpreadSearch(const DualGraph& dg, int tc)
        : d(dg),
          target_edges(dg.num_vertices - tc),
          target_components(tc),
          dsu(dg.num_vertices),
          components(dg.num_vertices),
          out(nullptr) {
        slots.resize(d.edges.size());
        for (int v = 0; v < d.num_vertices; ++v) {
            const auto& rot = d.rotation[static_cast<std::size_t>(v)];
            occupied.emplace_back(rot.size(), 0);
            for (std::size_t q = 0; q < rot.size(); ++q)
                slots[static_cast<std::size_t>(rot[q])].emplace_back(v, static_cast<int>(q));
        }
    }

    bool spread_ok(int e) const {
        for (const auto& [v, q] : slots[static_cast<std::size_t>(e)]) {
            const auto& occ = occupied[static_cast<std::size_t>(v)];
            const int n = static_cast<int>(occ.size());
            if (n <= 1) continue;
            if (occ[static_cast<std::size_t>((q + 1) % n)] ||
                occ[static_cast<std::size_t>((q + n - 1) % n)])
                return false;
        }
        return true;
    }

    void mark(int e, char value) {
        for (const auto& [v, q] : slots[static_cast<std::size_t>(e)])
            occupied[static_cast<std::size_t>(v)][static_cast<std::size_t>(q)] = value;
    }

    bool search(int from) {
        if (static_cast<int>(chosen.size()) == target_edges) {
            if (components != target_components) return false;
            *out = chosen;
            return true;
        }
        const int remaining = target_edges - static_cast<int>(chosen.size());
        for (int e = from; e <= static_cast<int>(d.edges.size()) - remaining; ++e) {
            const auto& edge = d.edges[static_cast<std::size_t>(e)];
            if (edge.u == edge.v) continue;  // loops never enter a forest
            if (dsu.find(edge.u) == dsu.find(edge.v)) continue;
            if (!spread_ok(e)) continue;
            const Dsu saved = dsu;
            dsu.merge(edge.u, edge.v);
            --components;
            mark(e, 1);
            chosen.push_back(e);
            if (search(e + 1)) return true;
            chosen.pop_back();
            mark(e, 0);
            ++components;
            dsu = saved;
        }
        return false;
    }
};

}  // namespace

SpreadForest find_spread_forest(const DualGraph& d, int components) {
    if (components != 1 && components != 2)
        throw std::invalid_argument("find_spread_forest: components must be 1 or 2");
    if (d.num_vertices < components)
        throw std::invalid_argument("find_spread_forest: too few dual vertices");

    SpreadForest result;
    if (d.num_vertices == components) {
        // Nothing to glue: the empty forest is trivially spread.
        result.found = true;
    } else {
        SpreadSearch search(d, components);
        std::vector<int> edges;
        search.out = &edges;
        result.found = search.search(0);
        result.edges = std::move(edges);
    }
    if (result.found) {
        Dsu dsu(d.num_vertices);
        for (int e : result.edges)
            dsu.merge(d.edges[static_cast<std::size_t>(e)].u,
                      d.edges[static_cast<std::size_t>(e)].v);
        std::vector<std::vector<int>> groups(static_cast<std::size_t>(d.num_vertices));
        for (int v = 0; v < d.num_vertices; ++v)
            groups[static_cast<std::size_t>(dsu.find(v))].push_back(v);
        for (auto& grp : groups)
            if (!grp.empty()) result.components.push_back(std::move(grp));
    }
    return result;
}

std::vector<GluedPolygon> glue_along_forest(const CombinatorialMap& m, const FaceStructure& f,
                                            const SpreadForest& t) {
    if (!t.found) throw InvariantError("glue_along_forest: no forest to glue along");
    const DualGraph d = dual_graph(m, f);

    Dsu dsu(d.num_vertices);
    for (int e : t.edges) {
        const auto& edge = d.edges[static_cast<std::size_t>(e)];
        if (edge.u == edge.v || !dsu.merge(edge.u, edge.v))
            throw InvariantError("glue_along_forest: edge set is not a forest");
    }
    {
        int comps = 0;
        for (int v = 0; v < d.num_vertices; ++v)
            if (dsu.find(v) == v) ++comps;
        if (comps != static_cast<int>(t.components.size()))
            throw InvariantError("glue_along_forest: forest does not span the dual graph");
    }

    // The straight-angle condition at every new vertex: tree incidences are
    // never rotation-adjacent (spread).
    std::vector<char> in_tree(d.edges.size(), 0);
    for (int e : t.edges) in_tree[static_cast<std::size_t>(e)] = 1;
    for (int v = 0; v < d.num_vertices; ++v) {
        const auto& rot = d.rotation[static_cast<std::size_t>(v)];
        const int n = static_cast<int>(rot.size());
        for (int q = 0; q < n; ++q) {
            const int e = rot[static_cast<std::size_t>(q)];
            const int e2 = rot[static_cast<std::size_t>((q + 1) % n)];
            if (n > 1 && in_tree[static_cast<std::size_t>(e)] &&
                in_tree[static_cast<std::size_t>(e2)] && e != e2)
                throw InvariantError("glue_along_forest: forest is not spread at dual vertex " +
                                     std::to_string(v));
        }
    }

    // Merge boundary cycles. Each face starts as its own cycle; gluing along
    // the darts of a tree edge splices the two cycles and drops those darts.
    std::vector<std::list<int>> cycles;
    std::vector<int> cycle_of(static_cast<std::size_t>(d.num_vertices));
    for (int face = 0; face < d.num_vertices; ++face) {
        cycle_of[static_cast<std::size_t>(face)] = face;
        cycles.emplace_back(f.faces[static_cast<std::size_t>(face)].begin(),
                            f.faces[static_cast<std::size_t>(face)].end());
    }
    std::vector<std::vector<int>> comp_faces(cycles.size());
    std::vector<std::vector<int>> comp_edges(cycles.size());
    for (int face = 0; face < d.num_vertices; ++face)
        comp_faces[static_cast<std::size_t>(face)] = {face};

    auto rotate_past = [](std::list<int>& cyc, int dart) {
        auto it = std::find(cyc.begin(), cyc.end(), dart);
        if (it == cyc.end())
            throw InvariantError("glue_along_forest: dart missing from its boundary cycle");
        cyc.splice(cyc.end(), cyc, cyc.begin(), it);  // dart now first
        cyc.pop_front();
    };

    for (int e : t.edges) {
        const int dart = d.edges[static_cast<std::size_t>(e)].dart;
        const int other = m.involution[static_cast<std::size_t>(dart)];
        const int ca = cycle_of[static_cast<std::size_t>(
            f.face_of[static_cast<std::size_t>(dart)])];
        const int cb = cycle_of[static_cast<std::size_t>(
            f.face_of[static_cast<std::size_t>(other)])];
        if (ca == cb) throw InvariantError("glue_along_forest: edge set is not a forest");
        rotate_past(cycles[static_cast<std::size_t>(ca)], dart);
        rotate_past(cycles[static_cast<std::size_t>(cb)], other);
        cycles[static_cast<std::size_t>(ca)].splice(cycles[static_cast<std::size_t>(ca)].end(),
                                                    cycles[static_cast<std::size_t>(cb)]);
        for (int face : comp_faces[static_cast<std::size_t>(cb)])
            cycle_of[static_cast<std::size_t>(face)] = ca;
        auto& fa = comp_faces[static_cast<std::size_t>(ca)];
        auto& fb = comp_faces[static_cast<std::size_t>(cb)];
        fa.insert(fa.end(), fb.begin(), fb.end());
        fb.clear();
        auto& ea = comp_edges[static_cast<std::size_t>(ca)];
        auto& eb = comp_edges[static_cast<std::size_t>(cb)];
        ea.insert(ea.end(), eb.begin(), eb.end());
        eb.clear();
        ea.push_back(e);
    }

    std::vector<GluedPolygon> out;
    for (int face = 0; face < d.num_vertices; ++face) {
        if (comp_faces[static_cast<std::size_t>(face)].empty()) continue;
        GluedPolygon poly;
        poly.faces = comp_faces[static_cast<std::size_t>(face)];
        std::sort(poly.faces.begin(), poly.faces.end());
        poly.tree_edges = comp_edges[static_cast<std::size_t>(face)];
        std::sort(poly.tree_edges.begin(), poly.tree_edges.end());
        poly.boundary.assign(cycles[static_cast<std::size_t>(face)].begin(),
                             cycles[static_cast<std::size_t>(face)].end());
        int side_sum = 0;
        for (int fc : poly.faces) side_sum += f.sides[static_cast<std::size_t>(fc)];
        poly.sides = side_sum - 4 * static_cast<int>(poly.tree_edges.size());
        if (static_cast<int>(poly.boundary.size()) !=
            side_sum - 2 * static_cast<int>(poly.tree_edges.size()))
            throw InvariantError("glue_along_forest: merged boundary length mismatch");
        poly.contains_puncture =
            std::binary_search(poly.faces.begin(), poly.faces.end(), f.punctured_face);
        out.push_back(std::move(poly));
    }
    return out;
}

std::vector<int> complement_components(const CombinatorialMap& m, const FaceStructure& f,
                                       Curve c) {
    Dsu dsu(static_cast<int>(f.faces.size()));
    for (int dart = 0; dart < m.darts; ++dart) {
        if (m.label[static_cast<std::size_t>(dart)] == c) continue;
        dsu.merge(f.face_of[static_cast<std::size_t>(dart)],
                  f.face_of[static_cast<std::size_t>(m.involution[static_cast<std::size_t>(dart)])]);
    }
    std::vector<int> id(f.faces.size(), -1);
    int next = 0;
    for (int v = 0; v < static_cast<int>(f.faces.size()); ++v) {
        const int root = dsu.find(v);
        if (id[static_cast<std::size_t>(root)] == -1) id[static_cast<std::size_t>(root)] = next++;
        id[static_cast<std::size_t>(v)] = id[static_cast<std::size_t>(root)];
    }
    return id;
}

bool curve_separating(const CombinatorialMap& m, const FaceStructure& f, Curve c) {
    const std::vector<int> id = complement_components(m, f, c);
    for (int v : id)
        if (v > 0) return true;
    return false;
}

double length_lower_bound(int g) {
    if (g < 1) throw std::invalid_argument("length_lower_bound: need genus >= 1");
    return static_cast<double>(8 * g - 4) * std::log(std::sqrt(2.0) + 1.0);
}

PipelineReport verify_bound_pipeline(const CombinatorialMap& m) {
    PipelineReport rep;
    const FaceStructure f = compute_faces(m);
    rep.face_sides = f.sides;
    rep.punctured_face = f.punctured_face;
    rep.genus = genus_of(m, f);

    rep.alpha_separating = curve_separating(m, f, Curve::Alpha);
    rep.beta_separating = curve_separating(m, f, Curve::Beta);
    if (rep.alpha_separating && rep.beta_separating) {
        rep.diagnostic =
            "both curves are separating; the one-component surgery does not apply";
        return rep;
    }

    const DualGraph d = dual_graph(m, f);
    rep.tree = find_spread_forest(d, 1);
    if (!rep.tree.found) {
        rep.diagnostic = "no spread spanning tree exists in the dual graph";
        return rep;
    }

    const auto glued = glue_along_forest(m, f, rep.tree);
    if (glued.size() != 1) {
        rep.diagnostic = "gluing did not produce a single polygon";
        return rep;
    }
    rep.glued_sides = glued.front().sides;
    rep.sides_identity_ok = rep.glued_sides == 8 * rep.genus.g - 4;

    rep.cusp_area = 2.0 * kPi * static_cast<double>(2 * rep.genus.g - 1);
    const RegularCusp reference =
        regular_cusp_from_area(8 * rep.genus.g - 4, rep.cusp_area);
    rep.regular_angle = reference.theta;
    rep.regular_side = reference.l;
    rep.reference_perimeter = perimeter(reference);
    rep.bound = length_lower_bound(rep.genus.g);
    rep.ok = rep.sides_identity_ok;
    if (!rep.ok) rep.diagnostic = "glued side count does not match 8g - 4";
    return rep;
}

}  // namespace cuspiso
