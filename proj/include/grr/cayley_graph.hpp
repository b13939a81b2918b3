#pragma once

#include "grr/group.hpp"
#include "grr/perm.hpp"

#include <vector>

namespace grr {

/**
 * The Cayley graph of (group, connection): vertices are group elements,
 * {r,t} is an edge iff t r^{-1} is in the connection set. A connection set
 * containing the identity is accepted; the loop it would create is dropped
 * and loop_dropped records that this happened.
 */
struct CayleyGraph {
    const FiniteGroup* group = nullptr;
    Bitset connection;
    std::vector<Bitset> adj;
    bool loop_dropped = false;

    int order() const { return group ? group->n : 0; }
    int degree() const { return adj.empty() ? 0 : adj[0].count(); }
};

CayleyGraph build_graph(const FiniteGroup& g, const Bitset& s);

// The right translation r -> r*g, always a graph automorphism.
Permutation right_translation(const FiniteGroup& g, int elem);

}  // namespace grr
