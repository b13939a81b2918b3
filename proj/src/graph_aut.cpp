#include "grr/graph_aut.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace grr {

namespace {

// Iterated neighbor-color multiset refinement with vertex 0 individualized.
std::vector<int> refine_colors(const std::vector<Bitset>& adj, int rounds) {
    int n = int(adj.size());
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = (v == 0) ? 0 : 1 + adj[v].count();
    for (int round = 0; round < rounds; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> neigh;
            for (int u = adj[v].find_first(); u >= 0; u = adj[v].find_next(u))
                neigh.push_back(color[u]);
            std::sort(neigh.begin(), neigh.end());
            sig[v].insert(sig[v].end(), neigh.begin(), neigh.end());
        }
        std::map<std::vector<int>, int> index;
        for (int v = 0; v < n; ++v) index.emplace(sig[v], 0);
        int next = 0;
        for (auto& [k, idx] : index) idx = next++;
        for (int v = 0; v < n; ++v) color[v] = index[sig[v]];
    }
    return color;
}

struct Search {
    const std::vector<Bitset>& adj;
    const AutSearchOptions& opts;
    int n;
    std::vector<int> color;
    std::vector<int> order;      // assignment order, order[0] == 0
    std::vector<int> img, pre;   // partial map and its inverse (-1 = unset)
    std::vector<int> block_img;  // image block per block (-1 = unset)
    std::vector<int> block_taken;
    uint64_t nodes = 0;
    std::vector<Permutation> out;
    bool done = false;

    Search(const std::vector<Bitset>& a, const AutSearchOptions& o) : adj(a), opts(o), n(int(a.size())) {
        color = refine_colors(adj, opts.refine_rounds);
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> freq(n + 1, 0);
        for (int v = 0; v < n; ++v) ++freq[color[v]];
        std::stable_sort(order.begin() + 1, order.end(),
                         [&](int a_, int b_) { return freq[color[a_]] < freq[color[b_]]; });
        img.assign(n, -1);
        pre.assign(n, -1);
        if (opts.blocks) {
            int nb = 1 + *std::max_element(opts.blocks->begin(), opts.blocks->end());
            block_img.assign(nb, -1);
            block_taken.assign(nb, 0);
        }
    }

    bool is_automorphism(const Permutation& p) const {
        for (int v = 0; v < n; ++v) {
            const Bitset& row = adj[v];
            for (int u = 0; u < n; ++u)
                if (row.test(u) != adj[p.img[v]].test(p.img[u])) return false;
        }
        return true;
    }

    void leaf() {
        Permutation p;
        p.img = img;
        if (!is_automorphism(p)) return;  // refinement never vouches; verify
        if (opts.first_nontrivial_only && p.is_identity()) return;
        if (opts.leaf_filter && !opts.leaf_filter(p)) return;
        out.push_back(std::move(p));
        if (opts.first_nontrivial_only) {
            done = true;
        } else if (out.size() > opts.element_cap) {
            throw budget_error("stabilizer enumeration exceeded element cap");
        }
    }

    void run(int depth) {
        if (done) return;
        if (++nodes > opts.node_budget)
            throw budget_error("automorphism search exceeded node budget");
        if (depth == n) {
            leaf();
            return;
        }
        int v = order[depth];
        int wmax = (depth == 0) ? 1 : n;  // vertex 0 is pinned to itself
        for (int w = 0; w < wmax; ++w) {
            if (pre[w] >= 0 || color[w] != color[v]) continue;
            bool ok = true;
            int bv = -1, bw = -1, prev_block_img = -2;
            if (opts.blocks) {
                bv = (*opts.blocks)[v];
                bw = (*opts.blocks)[w];
                if (opts.blocks_fixed_setwise) {
                    if (bv != bw) continue;
                } else if (block_img[bv] >= 0) {
                    if (block_img[bv] != bw) continue;
                } else if (block_taken[bw]) {
                    continue;
                }
            }
            for (int d = 0; d < depth && ok; ++d) {
                int u = order[d];
                if (adj[v].test(u) != adj[w].test(img[u])) ok = false;
            }
            if (!ok) continue;
            img[v] = w;
            pre[w] = v;
            if (opts.blocks && !opts.blocks_fixed_setwise && block_img[bv] < 0) {
                prev_block_img = -1;
                block_img[bv] = bw;
                block_taken[bw] = 1;
            }
            run(depth + 1);
            img[v] = -1;
            pre[w] = -1;
            if (prev_block_img == -1) {
                block_img[bv] = -1;
                block_taken[bw] = 0;
            }
            if (done) return;
        }
    }
};

}  // namespace

std::vector<Permutation> stabilizer_automorphisms(const std::vector<Bitset>& adj,
                                                  const AutSearchOptions& opts) {
    if (adj.empty()) return {};
    if (opts.blocks && opts.blocks->size() != adj.size())
        throw std::invalid_argument("block vector size does not match vertex count");
    Search s(adj, opts);
    s.run(0);
    std::sort(s.out.begin(), s.out.end());
    return std::move(s.out);
}

std::vector<Permutation> stabilizer_automorphisms(const CayleyGraph& graph,
                                                  const AutSearchOptions& opts) {
    return stabilizer_automorphisms(graph.adj, opts);
}

PermGroup graph_automorphisms(const CayleyGraph& graph, int max_vertices) {
    int n = graph.order();
    if (n > max_vertices)
        throw budget_error("graph_automorphisms: " + std::to_string(n) + " vertices exceeds budget " +
                           std::to_string(max_vertices));
    std::vector<Permutation> stab = stabilizer_automorphisms(graph);
    std::vector<Permutation> elems;
    elems.reserve(stab.size() * size_t(n));
    for (int g = 0; g < n; ++g) {
        Permutation rho = right_translation(*graph.group, g);
        // every automorphism factors uniquely as (0-stabilizer) * translation
        for (const auto& h : stab) elems.push_back(compose(h, rho));
    }
    std::vector<Permutation> gens = std::move(stab);
    for (int g = 1; g < n; ++g) gens.push_back(right_translation(*graph.group, g));
    PermGroup out = perm_group_from_elements(n, std::move(elems));
    out.generators = std::move(gens);
    return out;
}

bool is_grr(const FiniteGroup& g, const Bitset& s, int max_vertices) {
    if (g.n > max_vertices)
        throw budget_error("is_grr: " + std::to_string(g.n) + " vertices exceeds budget " +
                           std::to_string(max_vertices));
    CayleyGraph graph = build_graph(g, s);
    AutSearchOptions opts;
    opts.first_nontrivial_only = true;
    return stabilizer_automorphisms(graph, opts).empty();
}

}  // namespace grr
