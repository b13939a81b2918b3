#include "grr/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace grr {

int FiniteGroup::power(int g, long long k) const {
    if (g < 0 || g >= n) throw std::out_of_range("group element index out of range");
    int e = elem_order[g];
    long long r = k % e;
    if (r < 0) r += e;
    int acc = 0;
    for (long long i = 0; i < r; ++i) acc = table[size_t(acc) * n + g];
    return acc;
}

bool FiniteGroup::is_abelian() const {
    for (int g = 0; g < n; ++g)
        for (int h = g + 1; h < n; ++h)
            if (table[size_t(g) * n + h] != table[size_t(h) * n + g]) return false;
    return true;
}

int FiniteGroup::exponent() const {
    long long e = 1;
    for (int g = 0; g < n; ++g) e = std::lcm(e, (long long)elem_order[g]);
    return int(e);
}

GroupAutomorphism compose(const GroupAutomorphism& first, const GroupAutomorphism& then) {
    GroupAutomorphism out;
    out.images.resize(first.images.size());
    for (size_t i = 0; i < first.images.size(); ++i) out.images[i] = then.images[first.images[i]];
    return out;
}

GroupAutomorphism identity_automorphism(const FiniteGroup& g) {
    GroupAutomorphism a;
    a.images.resize(g.n);
    std::iota(a.images.begin(), a.images.end(), 0);
    return a;
}

GroupAutomorphism inversion_automorphism(const FiniteGroup& g) {
    if (!g.is_abelian()) throw std::invalid_argument("inversion is an automorphism only of abelian groups");
    GroupAutomorphism a;
    a.images = g.inv;
    return a;
}

bool is_automorphism(const FiniteGroup& g, const std::vector<int>& images) {
    if (int(images.size()) != g.n) return false;
    std::vector<char> seen(g.n, 0);
    for (int v : images) {
        if (v < 0 || v >= g.n || seen[v]) return false;
        seen[v] = 1;
    }
    if (images[0] != 0) return false;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (images[g.table[size_t(a) * g.n + b]] != g.table[size_t(images[a]) * g.n + images[b]])
                return false;
    return true;
}

FiniteGroup group_from_table(int n, std::vector<int> table, std::string label) {
    if (n < 1) throw std::invalid_argument("group order must be positive");
    if (int(table.size()) != n * n) throw std::invalid_argument("multiplication table has wrong size");
    for (int v : table)
        if (v < 0 || v >= n) throw std::invalid_argument("multiplication table entry out of range");

    FiniteGroup g;
    g.n = n;
    g.table = std::move(table);
    g.label = std::move(label);

    for (int a = 0; a < n; ++a)
        if (g.table[size_t(0) * n + a] != a || g.table[size_t(a) * n + 0] != a)
            throw std::invalid_argument("index 0 is not a two-sided identity");

    g.inv.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (g.table[size_t(a) * n + b] == 0) {
                if (g.table[size_t(b) * n + a] != 0)
                    throw std::invalid_argument("one-sided inverse found; not a group");
                g.inv[a] = b;
                break;
            }
        }
        if (g.inv[a] < 0) throw std::invalid_argument("element without inverse; not a group");
    }

    auto assoc = [&](int a, int b, int c) {
        return g.table[size_t(g.table[size_t(a) * n + b]) * n + c] ==
               g.table[size_t(a) * n + g.table[size_t(b) * n + c]];
    };
    if (n <= 16) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!assoc(a, b, c)) throw std::invalid_argument("multiplication table is not associative");
    } else {
        std::mt19937_64 rng(0x5eed5eedULL);
        std::uniform_int_distribution<int> d(0, n - 1);
        for (int i = 0; i < 10000; ++i)
            if (!assoc(d(rng), d(rng), d(rng)))
                throw std::invalid_argument("multiplication table is not associative");
    }

    g.elem_order.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        int acc = a, k = 1;
        while (acc != 0) {
            acc = g.table[size_t(acc) * n + a];
            ++k;
            if (k > n + 1) throw std::invalid_argument("element order exceeds group order; not a group");
        }
        g.elem_order[a] = k;
    }
    return g;
}

FiniteGroup cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    std::vector<int> t(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[size_t(a) * n + b] = (a + b) % n;
    return group_from_table(n, std::move(t), "C" + std::to_string(n));
}

FiniteGroup dihedral(int n) {
    if (n < 3) throw std::invalid_argument("dihedral(n) requires n >= 3");
    int m = 2 * n;
    std::vector<int> t(size_t(m) * m);
    auto idx = [&](int rot, bool refl) { return rot + (refl ? n : 0); };
    for (int a = 0; a < m; ++a) {
        int ra = a % n;
        bool fa = a >= n;
        for (int b = 0; b < m; ++b) {
            int rb = b % n;
            bool fb = b >= n;
            // (r^i s^e)(r^j s^f) = r^{i + j or i - j} s^{e xor f}
            int rot = fa ? (ra - rb % n + n) % n : (ra + rb) % n;
            t[size_t(a) * m + b] = idx(rot, fa != fb);
        }
    }
    return group_from_table(m, std::move(t), "D" + std::to_string(n));
}

FiniteGroup elementary_abelian(int k) {
    if (k < 1 || k > 20) throw std::invalid_argument("elementary_abelian(k) requires 1 <= k <= 20");
    int n = 1 << k;
    std::vector<int> t(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[size_t(a) * n + b] = a ^ b;
    return group_from_table(n, std::move(t), "EA" + std::to_string(k));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    int n = g.n * h.n;
    std::vector<int> t(size_t(n) * n);
    for (int a = 0; a < n; ++a) {
        int ag = a / h.n, ah = a % h.n;
        for (int b = 0; b < n; ++b) {
            int bg = b / h.n, bh = b % h.n;
            t[size_t(a) * n + b] = g.table[size_t(ag) * g.n + bg] * h.n + h.table[size_t(ah) * h.n + bh];
        }
    }
    return group_from_table(n, std::move(t), g.label + "x" + h.label);
}

FiniteGroup quaternion() {
    auto [q, dec] = dic(cyclic(4), 2);
    q.label = "Q8";
    return q;
}

FiniteGroup c4_semidirect_c4() {
    int n = 16;
    std::vector<int> t(size_t(n) * n);
    auto idx = [](int i, int j) { return 4 * ((i % 4 + 4) % 4) + ((j % 4 + 4) % 4); };
    for (int i1 = 0; i1 < 4; ++i1)
        for (int j1 = 0; j1 < 4; ++j1)
            for (int i2 = 0; i2 < 4; ++i2)
                for (int j2 = 0; j2 < 4; ++j2)
                    t[size_t(idx(i1, j1)) * n + idx(i2, j2)] =
                        idx(i1 + ((j1 % 2) ? -i2 : i2), j1 + j2);
    return group_from_table(n, std::move(t), "C4:C4");
}

static std::vector<int> involution_list(const FiniteGroup& g) {
    std::vector<int> out;
    for (int a = 1; a < g.n; ++a)
        if (g.elem_order[a] == 2) out.push_back(a);
    return out;
}

std::pair<FiniteGroup, DicDecomposition> dic(const FiniteGroup& a, int y) {
    if (!a.is_abelian()) throw std::invalid_argument("dic: base group is not abelian");
    if (a.n % 2 != 0) throw std::invalid_argument("dic: base group has odd order");
    if (a.exponent() <= 2) throw std::invalid_argument("dic: base group has exponent <= 2");
    if (y < 0 || y >= a.n || a.elem_order[y] != 2)
        throw std::invalid_argument("dic: y is not an involution of the base group");

    int n = 2 * a.n;
    std::vector<int> t(size_t(n) * n);
    // index 2u   = element u of A
    // index 2u+1 = u*x, with x^2 = y and x^{-1} u x = u^{-1}
    for (int u = 0; u < a.n; ++u) {
        for (int v = 0; v < a.n; ++v) {
            int uv = a.table[size_t(u) * a.n + v];
            int uvinv = a.table[size_t(u) * a.n + a.inv[v]];
            t[size_t(2 * u) * n + 2 * v] = 2 * uv;                                    // u * v
            t[size_t(2 * u) * n + 2 * v + 1] = 2 * uv + 1;                            // u * (vx)
            t[size_t(2 * u + 1) * n + 2 * v] = 2 * uvinv + 1;                         // (ux) * v
            t[size_t(2 * u + 1) * n + 2 * v + 1] = 2 * a.table[size_t(uvinv) * a.n + y];  // (ux)(vx)
        }
    }
    std::string label = "Dic(" + a.label + ")";
    if (involution_list(a).size() != 1) label = "Dic(" + a.label + ";y=" + std::to_string(y) + ")";
    FiniteGroup d = group_from_table(n, std::move(t), label);

    DicDecomposition dec;
    dec.a_carrier = Bitset(n);
    for (int u = 0; u < a.n; ++u) dec.a_carrier.set(2 * u);
    dec.y = 2 * y;
    dec.x = 1;
    return {std::move(d), std::move(dec)};
}

std::pair<FiniteGroup, DicDecomposition> dic(const FiniteGroup& a) {
    auto invs = involution_list(a);
    if (invs.size() != 1)
        throw std::invalid_argument("dic: base group has no unique involution; pass y explicitly");
    return dic(a, invs[0]);
}

Bitset involution_part(const FiniteGroup& g, const Bitset& x) {
    Bitset out(g.n);
    for (int e = x.find_first(); e >= 0; e = x.find_next(e))
        if (g.elem_order[e] <= 2) out.set(e);
    return out;
}

bool is_inverse_closed(const FiniteGroup& g, const Bitset& x) {
    for (int e = x.find_first(); e >= 0; e = x.find_next(e))
        if (!x.test(g.inv[e])) return false;
    return true;
}

int c_value(const FiniteGroup& g, const Bitset& x) {
    if (!is_inverse_closed(g, x))
        throw std::invalid_argument("c_value requires an inverse-closed set");
    return (x.count() + involution_part(g, x).count()) / 2;
}

bool is_abelian_exp_gt2(const FiniteGroup& g) {
    return g.is_abelian() && g.exponent() > 2;
}

GroupAutomorphism bar_iota(const FiniteGroup& d, const DicDecomposition& dec) {
    GroupAutomorphism a;
    a.images.resize(d.n);
    for (int m = 0; m < d.n; ++m)
        a.images[m] = dec.a_carrier.test(m) ? m : d.mul(m, dec.y);
    if (!is_automorphism(d, a.images))
        throw std::invalid_argument("bar_iota: decomposition witness does not yield an automorphism");
    return a;
}

Bitset subgroup_closure(const FiniteGroup& g, const Bitset& seed) {
    Bitset h(g.n);
    h.set(0);
    std::vector<int> elems = {0};
    std::vector<int> work;
    for (int e = seed.find_first(); e >= 0; e = seed.find_next(e))
        if (!h.test(e)) { h.set(e); elems.push_back(e); work.push_back(e); }
    while (!work.empty()) {
        int e = work.back();
        work.pop_back();
        size_t fixed = elems.size();
        for (size_t i = 0; i < fixed; ++i) {
            for (int p : {g.mul(elems[i], e), g.mul(e, elems[i])}) {
                if (!h.test(p)) { h.set(p); elems.push_back(p); work.push_back(p); }
            }
        }
    }
    return h;
}

bool is_subgroup(const FiniteGroup& g, const Bitset& h) {
    if (!h.test(0)) return false;
    for (int a = h.find_first(); a >= 0; a = h.find_next(a))
        for (int b = h.find_first(); b >= 0; b = h.find_next(b))
            if (!h.test(g.mul(a, b))) return false;
    return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const Bitset& h) {
    if (!is_subgroup(g, h)) return false;
    for (int a = h.find_first(); a >= 0; a = h.find_next(a))
        for (int r = 0; r < g.n; ++r)
            if (!h.test(g.conj(a, r))) return false;
    return true;
}

std::vector<Bitset> conjugacy_classes(const FiniteGroup& g) {
    std::vector<Bitset> classes;
    Bitset seen(g.n);
    for (int a = 0; a < g.n; ++a) {
        if (seen.test(a)) continue;
        Bitset cls(g.n);
        for (int r = 0; r < g.n; ++r) cls.set(g.conj(a, r));
        seen |= cls;
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<Bitset> normal_subgroups(const FiniteGroup& g, int max_order) {
    if (g.n > max_order)
        throw budget_error("normal_subgroups: order " + std::to_string(g.n) + " exceeds budget " +
                           std::to_string(max_order));
    auto classes = conjugacy_classes(g);
    std::set<Bitset> known;
    Bitset trivial(g.n);
    trivial.set(0);
    known.insert(trivial);
    std::vector<Bitset> queue = {trivial};
    while (!queue.empty()) {
        Bitset h = queue.back();
        queue.pop_back();
        for (const Bitset& cls : classes) {
            if (cls.subset_of(h)) continue;
            Bitset k = subgroup_closure(g, h | cls);
            if (known.insert(k).second) queue.push_back(k);
        }
    }
    std::vector<Bitset> out(known.begin(), known.end());
    std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    return out;
}

std::vector<DicDecomposition> generalized_dicyclic_decompositions(const FiniteGroup& g) {
    std::vector<DicDecomposition> out;
    if (g.n % 4 != 0) return out;  // |A| even and index 2 forces 4 | |G|
    for (const Bitset& h : normal_subgroups(g)) {
        if (h.count() * 2 != g.n) continue;
        SubgroupView sub = subgroup_as_group(g, h);
        if (!sub.group.is_abelian() || sub.group.exponent() <= 2) continue;
        for (int x = 0; x < g.n; ++x) {
            if (h.test(x)) continue;
            int y = g.mul(x, x);
            if (g.elem_order[y] != 2 || !h.test(y)) continue;
            bool inverts = true;
            for (int a = h.find_first(); a >= 0 && inverts; a = h.find_next(a))
                if (g.conj(a, x) != g.inv[a]) inverts = false;
            if (inverts) {
                out.push_back(DicDecomposition{h, y, x});
                break;  // one witness per subgroup A
            }
        }
    }
    return out;
}

SubgroupView subgroup_as_group(const FiniteGroup& g, const Bitset& carrier) {
    if (!is_subgroup(g, carrier))
        throw std::invalid_argument("subgroup_as_group: carrier is not a subgroup");
    SubgroupView v;
    v.to_parent = carrier.to_list();
    v.from_parent.assign(g.n, -1);
    for (size_t i = 0; i < v.to_parent.size(); ++i) v.from_parent[v.to_parent[i]] = int(i);
    int m = int(v.to_parent.size());
    std::vector<int> t(size_t(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            t[size_t(a) * m + b] = v.from_parent[g.mul(v.to_parent[a], v.to_parent[b])];
    v.group = group_from_table(m, std::move(t), g.label + "<sub" + std::to_string(m) + ">");
    return v;
}

Quotient quotient_group(const FiniteGroup& g, const Bitset& n) {
    if (!is_normal_subgroup(g, n))
        throw std::invalid_argument("quotient_group: subgroup is not normal");
    Quotient q;
    q.coset_of.assign(g.n, -1);
    for (int e = 0; e < g.n; ++e) {
        if (q.coset_of[e] >= 0) continue;
        int idx = int(q.reps.size());
        q.reps.push_back(e);  // ascending scan makes the rep minimal
        for (int m = n.find_first(); m >= 0; m = n.find_next(m)) q.coset_of[g.mul(e, m)] = idx;
    }
    int b = int(q.reps.size());
    std::vector<int> t(size_t(b) * b);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j)
            t[size_t(i) * b + j] = q.coset_of[g.mul(q.reps[i], q.reps[j])];
    q.group = group_from_table(b, std::move(t), g.label + "/" + n.to_hex());
    return q;
}

namespace {

// Generators chosen greedily along a subgroup chain, so at most log2 n.
std::vector<int> generating_chain(const FiniteGroup& g) {
    std::vector<int> gens;
    Bitset h(g.n);
    h.set(0);
    while (h.count() < g.n) {
        int pick = -1;
        for (int e = 1; e < g.n; ++e)
            if (!h.test(e)) { pick = e; break; }
        gens.push_back(pick);
        h = subgroup_closure(g, h | singleton(g.n, pick));
    }
    return gens;
}

// Extends a partial homomorphism (img defined on the subgroup generated by
// previously fixed generators) by one generator image; returns the trail of
// newly defined points, or nullopt on conflict.
std::optional<std::vector<int>> extend_partial_hom(const FiniteGroup& g, const FiniteGroup& target,
                                                   std::vector<int>& img, std::vector<int>& defined,
                                                   int gen, int image) {
    std::vector<int> trail;
    auto define = [&](int e, int ie) -> bool {
        if (img[e] >= 0) return img[e] == ie;
        img[e] = ie;
        defined.push_back(e);
        trail.push_back(e);
        return true;
    };
    size_t start = defined.size();
    if (!define(gen, image)) {
        for (int e : trail) img[e] = -1;
        defined.resize(start);
        return std::nullopt;
    }
    size_t next = start;
    while (next < defined.size()) {
        int e = defined[next++];
        for (size_t i = 0; i < defined.size(); ++i) {
            int d = defined[i];
            if (!define(g.mul(d, e), target.mul(img[d], img[e])) ||
                !define(g.mul(e, d), target.mul(img[e], img[d]))) {
                for (int x : trail) img[x] = -1;
                defined.resize(start);
                return std::nullopt;
            }
        }
    }
    return trail;
}

bool is_bijective(int n, const std::vector<int>& img) {
    std::vector<char> seen(n, 0);
    for (int v : img) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

void map_search(const FiniteGroup& g, const FiniteGroup& target, const std::vector<int>& gens,
                size_t level, std::vector<int>& img, std::vector<int>& defined,
                const std::vector<std::vector<int>>& candidates, bool stop_at_first,
                std::vector<std::vector<int>>& out, size_t cap) {
    if (stop_at_first && !out.empty()) return;
    if (level == gens.size()) {
        if (is_bijective(target.n, img)) {
            out.push_back(img);
            if (out.size() > cap) throw budget_error("automorphism search exceeded element cap");
        }
        return;
    }
    for (int c : candidates[level]) {
        auto trail = extend_partial_hom(g, target, img, defined, gens[level], c);
        if (!trail) continue;
        map_search(g, target, gens, level + 1, img, defined, candidates, stop_at_first, out, cap);
        for (int x : *trail) img[x] = -1;
        defined.resize(defined.size() - trail->size());
        if (stop_at_first && !out.empty()) return;
    }
}

// All bijective homomorphisms g -> target extending identity on 0.
std::vector<std::vector<int>> iso_images(const FiniteGroup& g, const FiniteGroup& target,
                                         bool stop_at_first, size_t cap) {
    std::vector<int> gens = generating_chain(g);
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i)
        for (int c = 0; c < target.n; ++c)
            if (target.elem_order[c] == g.elem_order[gens[i]]) candidates[i].push_back(c);
    std::vector<int> img(g.n, -1), defined;
    img[0] = 0;
    defined.push_back(0);
    std::vector<std::vector<int>> out;
    map_search(g, target, gens, 0, img, defined, candidates, stop_at_first, out, cap);
    return out;
}

}  // namespace

std::vector<GroupAutomorphism> automorphism_group(const FiniteGroup& g, int max_order) {
    if (g.n > max_order)
        throw budget_error("automorphism_group: order " + std::to_string(g.n) + " exceeds budget " +
                           std::to_string(max_order));
    auto maps = iso_images(g, g, false, size_t(4) << 20);
    std::vector<GroupAutomorphism> out;
    out.reserve(maps.size());
    for (auto& m : maps) out.push_back(GroupAutomorphism{std::move(m)});
    std::sort(out.begin(), out.end());
    double log2n = std::log2(double(g.n));
    if (double(out.size()) > std::pow(2.0, log2n * log2n) + 0.5)
        throw std::logic_error("automorphism count exceeds the 2^{(log2 n)^2} ceiling");
    return out;
}

bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
    if (g.n != h.n) return false;
    auto profile = [](const FiniteGroup& x) {
        std::vector<int> p = x.elem_order;
        std::sort(p.begin(), p.end());
        return p;
    };
    if (profile(g) != profile(h)) return false;
    if (g.is_abelian() != h.is_abelian()) return false;
    auto sizes = [](const FiniteGroup& x) {
        std::vector<int> s;
        for (auto& c : conjugacy_classes(x)) s.push_back(c.count());
        std::sort(s.begin(), s.end());
        return s;
    };
    if (sizes(g) != sizes(h)) return false;
    return !iso_images(g, h, true, size_t(1) << 22).empty();
}

}  // namespace grr
