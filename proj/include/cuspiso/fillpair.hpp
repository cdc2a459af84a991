#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cuspiso {

/// Structural problem in an input map document (wrong valence, broken
/// involution, bad labels, ...): the document does not describe a filling
/// pair at all.
struct MapFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A well-formed map that fails a mathematical invariant downstream
/// (non-integer genus, no spread forest, ...).
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Curve { Alpha, Beta };

/// Darts with a vertex rotation and edge involution, encoding the 4-valent
/// graph of a filling pair on an oriented surface. Valid instances have:
/// rotation cycles of length exactly 4, labels alternating Alpha/Beta around
/// every vertex, a fixed-point-free label-preserving involution, each curve a
/// single closed curve, and a connected underlying graph.
struct CombinatorialMap {
    int darts = 0;
    std::vector<int> rotation;    // next dart counterclockwise at the vertex
    std::vector<int> involution;  // other dart of the same edge
    std::vector<Curve> label;
    std::vector<int> vertex_of;   // rotation-orbit index per dart
    int num_vertices = 0;
    int punctured_face = 0;       // marked face carrying the puncture
};

CombinatorialMap make_map(int darts, const std::vector<std::vector<int>>& rotation_cycles,
                          const std::vector<std::pair<int, int>>& involution_pairs,
                          const std::vector<Curve>& labels, int punctured_face);

/// Parses and validates the JSON document format:
/// { "darts": N, "vertex_rotation": [[...], ...], "edge_involution": [[a,b], ...],
///   "labels": {"0": "A", ...}, "punctured_face": k }
CombinatorialMap load_map(const nlohmann::json& doc);

/// Complementary faces. Face traversal convention: the dart following d along
/// its face boundary is rotation[involution[d]]; faces are indexed by their
/// smallest dart, in increasing order.
struct FaceStructure {
    std::vector<std::vector<int>> faces;  // dart cycles
    std::vector<int> sides;               // per-face side count n(P_k)
    std::vector<int> face_of;             // face index per dart
    int punctured_face = 0;
};

FaceStructure compute_faces(const CombinatorialMap& m);

struct GenusData {
    int g = 0;
    int r = 0;
    long i = 0;  // intersection number
};

/// Genus from the compactified Euler characteristic i - 2i + r = 2 - 2g.
/// Throws InvariantError when that does not give an integer g >= 1.
GenusData genus_of(const CombinatorialMap& m, const FaceStructure& f);

/// One dual vertex per face, one dual edge per primal edge; the rotation at a
/// dual vertex lists edge incidences in the face's boundary order.
struct DualGraph {
    struct Edge {
        int u = 0;
        int v = 0;
        int dart = 0;  // smaller dart of the primal edge
    };
    int num_vertices = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rotation;  // per dual vertex: edge ids in cyclic order
};

DualGraph dual_graph(const CombinatorialMap& m, const FaceStructure& f);

/// A spanning forest of the dual graph in which no two forest edges are
/// cyclically consecutive in the rotation at any dual vertex.
struct SpreadForest {
    bool found = false;
    std::vector<int> edges;                       // dual edge ids, increasing
    std::vector<std::vector<int>> components;     // dual vertex partition
};

/// Exhaustive backtracking search for a spread spanning forest with the
/// requested number of components (1 or 2). Returns the lexicographically
/// least solution, or found == false after exhausting the search space.
SpreadForest find_spread_forest(const DualGraph& d, int components);

struct GluedPolygon {
    std::vector<int> faces;       // faces merged into this polygon
    std::vector<int> tree_edges;  // dual edges glued along
    int sides = 0;                // n(Q) after forgetting the flat vertices
    std::vector<int> boundary;    // merged boundary dart cycle
    bool contains_puncture = false;
};

/// Joins the faces of each forest component along the darts dual to its tree
/// edges, dropping the four corners identified at each new vertex:
/// n(Q) = sum n(P_k) - 4 * (edges in the component).
std::vector<GluedPolygon> glue_along_forest(const CombinatorialMap& m, const FaceStructure& f,
                                            const SpreadForest& t);

/// Component id per face after cutting the surface along the given curve:
/// faces stay glued across the other curve's edges. The number of distinct
/// ids is the number of complementary pieces.
std::vector<int> complement_components(const CombinatorialMap& m, const FaceStructure& f,
                                       Curve c);

/// True when cutting the surface along the given curve disconnects it.
bool curve_separating(const CombinatorialMap& m, const FaceStructure& f, Curve c);

/// The filling-pair length bound (8g - 4) ln(sqrt(2) + 1).
double length_lower_bound(int g);

struct PipelineReport {
    GenusData genus;
    std::vector<int> face_sides;
    int punctured_face = 0;
    bool alpha_separating = false;
    bool beta_separating = false;
    SpreadForest tree;
    int glued_sides = 0;          // n(Q)
    bool sides_identity_ok = false;  // n(Q) == 8g - 4
    double cusp_area = 0.0;          // 2 pi (2g - 1)
    double regular_angle = 0.0;      // pi / 2
    double regular_side = 0.0;       // 2 ln(sqrt(2) + 1)
    double reference_perimeter = 0.0;
    double bound = 0.0;
    bool ok = false;
    std::string diagnostic;
};

/// Full chain on a validated map with at least one non-separating curve:
/// faces -> genus -> dual graph -> spread tree -> gluing, then the
/// regular-cusp reference data for area 2 pi (2g - 1).
PipelineReport verify_bound_pipeline(const CombinatorialMap& m);

}  // namespace cuspiso
