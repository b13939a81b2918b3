#include "grr/cayley_graph.hpp"

namespace grr {

CayleyGraph build_graph(const FiniteGroup& g, const Bitset& s) {
    if (s.size() != g.n) throw std::invalid_argument("connection set size does not match group order");
    if (!is_inverse_closed(g, s))
        throw std::invalid_argument("connection set is not inverse-closed");
    CayleyGraph out;
    out.group = &g;
    out.connection = s;
    out.loop_dropped = s.test(0);
    out.adj.assign(g.n, Bitset(g.n));
    for (int r = 0; r < g.n; ++r)
        for (int e = s.find_first(); e >= 0; e = s.find_next(e))
            if (e != 0) out.adj[r].set(g.mul(e, r));  // t = s*r, so t r^{-1} = s
    return out;
}

Permutation right_translation(const FiniteGroup& g, int elem) {
    if (elem < 0 || elem >= g.n) throw std::out_of_range("group element index out of range");
    Permutation p;
    p.img.resize(g.n);
    for (int r = 0; r < g.n; ++r) p.img[r] = g.mul(r, elem);
    return p;
}

}  // namespace grr
