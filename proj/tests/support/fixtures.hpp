#pragma once

#include "grundy/generate.hpp"
#include "grundy/graph.hpp"

#include <cstdint>

namespace fixtures {

// Six-vertex graph with labels a..f mapped to ids 0..5 (the path
// b-d-a-e-f-c). Peeling all simplicial vertices per round gives the waves
// {b,c} < {d,f} < {a,e}, and first-fit along the id-tie-break PEO uses
// exactly three colors.
inline grundy::Graph wave_example() {
    return grundy::Graph::from_edges(6, {{1, 3}, {0, 3}, {0, 4}, {4, 5}, {2, 5}});
}

inline grundy::Graph random_gnp(int n, double p, std::uint64_t seed) {
    grundy::Rng rng(seed);
    return grundy::gnp(n, p, rng);
}

inline grundy::Graph random_ktree(int n, int k, std::uint64_t seed) {
    grundy::Rng rng(seed);
    return grundy::k_tree(n, k, rng);
}

} // namespace fixtures
