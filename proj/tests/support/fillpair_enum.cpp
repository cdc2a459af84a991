#include "fillpair_enum.hpp"

#include <algorithm>

namespace cuspiso::testsupport {

namespace {

void all_matchings(std::vector<int>& pool, std::vector<std::pair<int, int>>& acc,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
    if (pool.empty()) {
        out.push_back(acc);
        return;
    }
    const int first = pool.front();
    for (std::size_t j = 1; j < pool.size(); ++j) {
        const int partner = pool[j];
        std::vector<int> rest;
        rest.reserve(pool.size() - 2);
        for (std::size_t k = 1; k < pool.size(); ++k)
            if (k != j) rest.push_back(pool[k]);
        acc.emplace_back(first, partner);
        all_matchings(rest, acc, out);
        acc.pop_back();
    }
}

// Single-closed-curve test on the beta darts for a candidate matching,
// before paying for full map construction.
bool beta_single_curve(int i, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> partner(static_cast<std::size_t>(4 * i), -1);
    for (const auto& [a, b] : pairs) {
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
    }
    auto opposite = [](int d) { return 4 * (d / 4) + (d % 4 + 2) % 4; };
    std::vector<char> seen(static_cast<std::size_t>(4 * i), 0);
    int orbits = 0;
    for (int d = 1; d < 4 * i; d += 2) {
        if (seen[static_cast<std::size_t>(d)]) continue;
        ++orbits;
        int x = d;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            x = opposite(partner[static_cast<std::size_t>(x)]);
        }
    }
    return orbits == 2;
}

}  // namespace

std::vector<CombinatorialMap> enumerate_filling_pair_maps(int i) {
    std::vector<std::vector<int>> cycles;
    for (int v = 0; v < i; ++v) cycles.push_back({4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3});

    std::vector<std::pair<int, int>> alpha_pairs;
    for (int k = 0; k < i; ++k) alpha_pairs.emplace_back(4 * k + 2, 4 * ((k + 1) % i));

    std::vector<Curve> labels(static_cast<std::size_t>(4 * i));
    for (int d = 0; d < 4 * i; ++d)
        labels[static_cast<std::size_t>(d)] = d % 2 == 0 ? Curve::Alpha : Curve::Beta;

    std::vector<int> beta_darts;
    for (int d = 1; d < 4 * i; d += 2) beta_darts.push_back(d);
    std::vector<std::vector<std::pair<int, int>>> beta_matchings;
    {
        std::vector<std::pair<int, int>> acc;
        all_matchings(beta_darts, acc, beta_matchings);
    }

    std::vector<CombinatorialMap> maps;
    for (const auto& beta_pairs : beta_matchings) {
        if (!beta_single_curve(i, beta_pairs)) continue;
        std::vector<std::pair<int, int>> pairs = alpha_pairs;
        pairs.insert(pairs.end(), beta_pairs.begin(), beta_pairs.end());
        CombinatorialMap m = make_map(4 * i, cycles, pairs, labels, 0);
        const FaceStructure f = compute_faces(m);
        const long twog = static_cast<long>(i) - static_cast<long>(f.faces.size()) + 2;
        if (twog < 2 || twog % 2 != 0) continue;  // a sphere map is not a filling pair
        maps.push_back(std::move(m));
    }
    return maps;
}

}  // namespace cuspiso::testsupport
