#pragma once

#include "grr/cayley_graph.hpp"
#include "grr/perm.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace grr {

/**
 * Options for the vertex-stabilizer backtracking search. Refinement
 * (degree, then neighbor-color multiset rounds) only prunes; every
 * reported permutation is re-verified against the edge set.
 */
struct AutSearchOptions {
    // When set, images must respect this partition as a block system
    // (same block <=> same image block).
    const std::vector<int>* blocks = nullptr;
    // Stronger: every block must be fixed setwise.
    bool blocks_fixed_setwise = false;
    // Stop at the first non-identity automorphism accepted by leaf_filter.
    bool first_nontrivial_only = false;
    // Extra acceptance predicate applied at leaves (e.g. normalizes N_reg).
    std::function<bool(const Permutation&)> leaf_filter;
    uint64_t node_budget = 50'000'000;
    size_t element_cap = size_t(1) << 21;
    int refine_rounds = 2;
};

// All automorphisms fixing vertex 0 (the identity element) that satisfy the
// options; includes the identity unless first_nontrivial_only is set, in
// which case the result has at most one element.
std::vector<Permutation> stabilizer_automorphisms(const std::vector<Bitset>& adj,
                                                  const AutSearchOptions& opts = {});
std::vector<Permutation> stabilizer_automorphisms(const CayleyGraph& graph,
                                                  const AutSearchOptions& opts = {});

/**
 * The full automorphism group of a Cayley graph: the vertex-0 stabilizer
 * from the backtracking search times the right-regular translations.
 */
PermGroup graph_automorphisms(const CayleyGraph& graph, int max_vertices = 40);

// Aut(Gamma(G,S)) = G exactly; short-circuits as soon as any non-identity
// automorphism fixing the identity vertex is found.
bool is_grr(const FiniteGroup& g, const Bitset& s, int max_vertices = 40);

}  // namespace grr
