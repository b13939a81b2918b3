#pragma once

#include "grr/bits.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace grr {

/**
 * A finite group given by its complete multiplication table.
 *
 * Elements are dense indices 0..n-1 and index 0 is always the identity.
 * Every constructor documents its element ordering so labels are
 * reproducible across runs.
 */
struct FiniteGroup {
    int n = 0;
    std::vector<int> table;       // row-major, table[g*n + h] = g*h
    std::vector<int> inv;         // inv[g]*g = g*inv[g] = 0
    std::vector<int> elem_order;  // least k >= 1 with g^k = 0
    std::string label;

    int mul(int g, int h) const {
        if (g < 0 || g >= n || h < 0 || h >= n)
            throw std::out_of_range("group element index out of range");
        return table[size_t(g) * n + h];
    }
    int inverse(int g) const {
        if (g < 0 || g >= n) throw std::out_of_range("group element index out of range");
        return inv[g];
    }
    int order_of(int g) const {
        if (g < 0 || g >= n) throw std::out_of_range("group element index out of range");
        return elem_order[g];
    }
    int power(int g, long long k) const;
    int conj(int g, int by) const { return mul(mul(inverse(by), g), by); }  // g^by

    bool is_abelian() const;
    int exponent() const;
};

// Witness that a group D is generalised dicyclic: an abelian index-2
// subgroup A of exponent > 2, an involution y in A and x outside A with
// x^2 = y and a^x = a^{-1} for all a in A. Carrier bits index into D.
struct DicDecomposition {
    Bitset a_carrier;
    int y = -1;
    int x = -1;
};

// A group automorphism as an image table; images[0] == 0 always.
struct GroupAutomorphism {
    std::vector<int> images;

    bool operator==(const GroupAutomorphism& o) const { return images == o.images; }
    bool operator<(const GroupAutomorphism& o) const { return images < o.images; }
    bool is_identity() const {
        for (size_t i = 0; i < images.size(); ++i)
            if (images[i] != int(i)) return false;
        return true;
    }
};

GroupAutomorphism compose(const GroupAutomorphism& first, const GroupAutomorphism& then);
GroupAutomorphism identity_automorphism(const FiniteGroup& g);
GroupAutomorphism inversion_automorphism(const FiniteGroup& g);  // requires abelian
bool is_automorphism(const FiniteGroup& g, const std::vector<int>& images);

/**
 * Validates the group axioms (associativity exhaustively up to order 16,
 * on 10^4 seeded random triples beyond) and fills in the inverse and
 * element-order tables.
 */
FiniteGroup group_from_table(int n, std::vector<int> table, std::string label);

// cyclic(n): element i is g^i.
FiniteGroup cyclic(int n);
// dihedral(n), order 2n, n >= 3: indices 0..n-1 are rotations r^i,
// n+i is the reflection r^i s, with s r s = r^{-1}.
FiniteGroup dihedral(int n);
// elementary_abelian(k): order 2^k, element index is the coordinate
// bitmask, product is XOR.
FiniteGroup elementary_abelian(int k);
// direct_product: index g*|H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
// The quaternion group, as Dic(C4) relabelled.
FiniteGroup quaternion();
// C4 semidirect C4 (b^-1 a b = a^-1); index 4*i+j is a^i b^j. This is the
// order-16 group satisfying x^4 = y^4 = (xy)^4 = 1, x^2 = y^2.
FiniteGroup c4_semidirect_c4();

/**
 * Builds Dic(A, y, x) of order 2|A|. A is embedded as the even indices
 * (parent element a at index 2a) and x is index 1; index 2a+1 is a*x.
 * Rejects A non-abelian, of odd order, of exponent <= 2, and y not an
 * involution, each with a distinct diagnostic.
 */
std::pair<FiniteGroup, DicDecomposition> dic(const FiniteGroup& a, int y);
// Convenience: y defaults to the unique involution of A (error if not unique).
std::pair<FiniteGroup, DicDecomposition> dic(const FiniteGroup& a);

// I(X): the elements of X of order at most 2.
Bitset involution_part(const FiniteGroup& g, const Bitset& x);
bool is_inverse_closed(const FiniteGroup& g, const Bitset& x);
// c(X) = (|X| + |I(X)|)/2; X must be inverse-closed.
int c_value(const FiniteGroup& g, const Bitset& x);

bool is_abelian_exp_gt2(const FiniteGroup& g);

// The automorphism fixing A pointwise and sending ax to ax^{-1}
// (equivalently m to m*y outside A); verified to be a homomorphism.
GroupAutomorphism bar_iota(const FiniteGroup& d, const DicDecomposition& dec);

// All generalised dicyclic decompositions, one witness per abelian
// subgroup A; empty when the group is not generalised dicyclic.
std::vector<DicDecomposition> generalized_dicyclic_decompositions(const FiniteGroup& g);
inline bool is_generalized_dicyclic(const FiniteGroup& g) {
    return !generalized_dicyclic_decompositions(g).empty();
}

// Subgroup machinery (desk scale).
Bitset subgroup_closure(const FiniteGroup& g, const Bitset& seed);
bool is_subgroup(const FiniteGroup& g, const Bitset& h);
bool is_normal_subgroup(const FiniteGroup& g, const Bitset& h);
std::vector<Bitset> conjugacy_classes(const FiniteGroup& g);

// Every normal subgroup including {0} and G, found as multiplicative
// closures of unions of conjugacy classes. Sorted by (size, carrier).
std::vector<Bitset> normal_subgroups(const FiniteGroup& g, int max_order = 64);

// The full automorphism group via generator-image backtracking along a
// maximal subgroup chain; |result| <= 2^{(log2 n)^2} is asserted.
std::vector<GroupAutomorphism> automorphism_group(const FiniteGroup& g, int max_order = 64);

struct Quotient {
    FiniteGroup group;          // on coset indices, identity coset = 0
    std::vector<int> coset_of;  // parent element -> coset index
    std::vector<int> reps;      // minimal element per coset, reps[0] = 0
};
Quotient quotient_group(const FiniteGroup& g, const Bitset& n);

struct SubgroupView {
    FiniteGroup group;            // the subgroup as a standalone group
    std::vector<int> to_parent;   // subgroup index -> parent element
    std::vector<int> from_parent; // parent element -> subgroup index or -1
};
SubgroupView subgroup_as_group(const FiniteGroup& g, const Bitset& carrier);

// Exhaustive generator-image search; used to recognise Q8 x C2^l and the
// exceptional shapes in the counting lemmas.
bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace grr
