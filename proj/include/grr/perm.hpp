#pragma once

#include "grr/bits.hpp"
#include "grr/group.hpp"

#include <optional>
#include <vector>

namespace grr {

struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img(std::move(images)) {}

    int degree() const { return int(img.size()); }
    int operator[](int v) const { return img[v]; }

    static Permutation identity(int n) {
        Permutation p;
        p.img.resize(n);
        for (int i = 0; i < n; ++i) p.img[i] = i;
        return p;
    }
    bool is_identity() const {
        for (size_t i = 0; i < img.size(); ++i)
            if (img[i] != int(i)) return false;
        return true;
    }
    Permutation inverse() const {
        Permutation p;
        p.img.resize(img.size());
        for (size_t i = 0; i < img.size(); ++i) p.img[img[i]] = int(i);
        return p;
    }

    bool operator==(const Permutation& o) const { return img == o.img; }
    bool operator!=(const Permutation& o) const { return img != o.img; }
    bool operator<(const Permutation& o) const { return img < o.img; }
};

// v^(a*b) = (v^a)^b: apply a, then b.
Permutation compose(const Permutation& a, const Permutation& b);

/**
 * A permutation group at desk scale: the full element list is materialized
 * (sorted), so membership, stabilizers and normalizers are exact filters.
 */
struct PermGroup {
    int degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;  // sorted, includes the identity

    uint64_t order() const { return elements.size(); }
    bool contains(const Permutation& p) const;
};

PermGroup perm_group_from_generators(int degree, std::vector<Permutation> gens,
                                     size_t element_cap = size_t(1) << 21);
// elements must already form a group; generators default to the elements.
PermGroup perm_group_from_elements(int degree, std::vector<Permutation> elems);

PermGroup point_stabilizer(const PermGroup& p, int v);

// { p in P : p^{-1} H p = H }; H must be a subgroup of P.
PermGroup normalizer_of_regular_subgroup(const PermGroup& p, const PermGroup& h);

// Largest subgroup of P leaving every orbit setwise invariant; the orbits
// must partition the domain.
PermGroup orbit_fixing_subgroup(const PermGroup& p, const std::vector<Bitset>& orbits);

// The right regular representation {rho_g : g in G}, rho_g(r) = r*g.
PermGroup regular_representation(const FiniteGroup& g);
// rho_n for n in the carrier, in increasing element order.
std::vector<Permutation> regular_perms_of_subset(const FiniteGroup& g, const Bitset& carrier);

/**
 * If f normalizes the right-regular embedding of N, the conjugation map
 * n -> m with rho_m = f^{-1} rho_n f is an automorphism of N; it is
 * returned as a full-length image table fixing everything outside N and is
 * re-verified to be a homomorphism on N. Returns nullopt when f does not
 * normalize N_reg.
 */
std::optional<GroupAutomorphism> conjugation_action_on_n(const Permutation& f, const FiniteGroup& g,
                                                         const Bitset& n_carrier);

}  // namespace grr
