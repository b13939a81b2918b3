#include "grr/perm.hpp"

#include <algorithm>
#include <set>

namespace grr {

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out;
    out.img.resize(a.img.size());
    for (size_t i = 0; i < a.img.size(); ++i) out.img[i] = b.img[a.img[i]];
    return out;
}

bool PermGroup::contains(const Permutation& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

PermGroup perm_group_from_generators(int degree, std::vector<Permutation> gens, size_t element_cap) {
    for (const auto& g : gens)
        if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    std::set<Permutation> elems;
    std::vector<Permutation> work;
    Permutation id = Permutation::identity(degree);
    elems.insert(id);
    work.push_back(id);
    while (!work.empty()) {
        Permutation p = std::move(work.back());
        work.pop_back();
        for (const auto& g : gens) {
            Permutation q = compose(p, g);
            if (elems.insert(q).second) {
                if (elems.size() > element_cap)
                    throw budget_error("permutation group closure exceeded element cap");
                work.push_back(std::move(q));
            }
        }
    }
    PermGroup out;
    out.degree = degree;
    out.generators = std::move(gens);
    out.elements.assign(elems.begin(), elems.end());
    return out;
}

PermGroup perm_group_from_elements(int degree, std::vector<Permutation> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    PermGroup out;
    out.degree = degree;
    out.generators = elems;
    out.elements = std::move(elems);
    return out;
}

PermGroup point_stabilizer(const PermGroup& p, int v) {
    if (v < 0 || v >= p.degree) throw std::out_of_range("stabilized point out of range");
    std::vector<Permutation> kept;
    for (const auto& e : p.elements)
        if (e.img[v] == v) kept.push_back(e);
    return perm_group_from_elements(p.degree, std::move(kept));
}

PermGroup normalizer_of_regular_subgroup(const PermGroup& p, const PermGroup& h) {
    if (h.degree != p.degree) throw std::invalid_argument("degree mismatch");
    for (const auto& e : h.elements)
        if (!p.contains(e)) throw std::invalid_argument("H is not a subgroup of P");
    std::vector<Permutation> kept;
    for (const auto& g : p.elements) {
        Permutation ginv = g.inverse();
        bool normalizes = true;
        for (const auto& e : h.elements) {
            if (!h.contains(compose(compose(ginv, e), g))) {
                normalizes = false;
                break;
            }
        }
        if (normalizes) kept.push_back(g);
    }
    return perm_group_from_elements(p.degree, std::move(kept));
}

PermGroup orbit_fixing_subgroup(const PermGroup& p, const std::vector<Bitset>& orbits) {
    std::vector<int> orbit_of(p.degree, -1);
    for (size_t i = 0; i < orbits.size(); ++i) {
        for (int v = orbits[i].find_first(); v >= 0; v = orbits[i].find_next(v)) {
            if (v >= p.degree || orbit_of[v] >= 0)
                throw std::invalid_argument("orbits do not partition the domain");
            orbit_of[v] = int(i);
        }
    }
    for (int v = 0; v < p.degree; ++v)
        if (orbit_of[v] < 0) throw std::invalid_argument("orbits do not partition the domain");
    std::vector<Permutation> kept;
    for (const auto& g : p.elements) {
        bool fixes = true;
        for (int v = 0; v < p.degree && fixes; ++v)
            if (orbit_of[g.img[v]] != orbit_of[v]) fixes = false;
        if (fixes) kept.push_back(g);
    }
    return perm_group_from_elements(p.degree, std::move(kept));
}

PermGroup regular_representation(const FiniteGroup& g) {
    std::vector<Permutation> elems;
    elems.reserve(g.n);
    for (int e = 0; e < g.n; ++e) {
        Permutation p;
        p.img.resize(g.n);
        for (int r = 0; r < g.n; ++r) p.img[r] = g.mul(r, e);
        elems.push_back(std::move(p));
    }
    return perm_group_from_elements(g.n, std::move(elems));
}

std::vector<Permutation> regular_perms_of_subset(const FiniteGroup& g, const Bitset& carrier) {
    std::vector<Permutation> out;
    for (int e = carrier.find_first(); e >= 0; e = carrier.find_next(e)) {
        Permutation p;
        p.img.resize(g.n);
        for (int r = 0; r < g.n; ++r) p.img[r] = g.mul(r, e);
        out.push_back(std::move(p));
    }
    return out;
}

std::optional<GroupAutomorphism> conjugation_action_on_n(const Permutation& f, const FiniteGroup& g,
                                                         const Bitset& n_carrier) {
    if (f.degree() != g.n) throw std::invalid_argument("permutation degree does not match group order");
    Permutation finv = f.inverse();
    GroupAutomorphism iota = identity_automorphism(g);
    for (int n = n_carrier.find_first(); n >= 0; n = n_carrier.find_next(n)) {
        // candidate: rho_m = f^{-1} rho_n f, pinned down at the identity vertex
        int m = f.img[g.mul(finv.img[0], n)];
        if (!n_carrier.test(m)) return std::nullopt;
        for (int r = 0; r < g.n; ++r)
            if (f.img[g.mul(finv.img[r], n)] != g.mul(r, m)) return std::nullopt;
        iota.images[n] = m;
    }
    // re-verify the homomorphism property on N
    for (int a = n_carrier.find_first(); a >= 0; a = n_carrier.find_next(a))
        for (int b = n_carrier.find_first(); b >= 0; b = n_carrier.find_next(b))
            if (iota.images[g.mul(a, b)] != g.mul(iota.images[a], iota.images[b]))
                return std::nullopt;
    return iota;
}

}  // namespace grr
