#pragma once

#include "grr/cayley_graph.hpp"
#include "grr/connection_set.hpp"
#include "grr/group.hpp"
#include "grr/perm.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace grr {

/**
 * Outcome of one counting-lemma instance. Rational bounds (the 3|N|/4
 * family) are compared exactly via bound_num/bound_den; the 2^{c - ...}
 * family is compared in the log2 domain. `holds` reports whether the
 * instance lands in one of the lemma's stated conclusions.
 */
struct TrichotomyOutcome {
    enum Tag { BOUND_HOLDS, EXCEPTIONAL } tag = BOUND_HOLDS;
    long long exact_count = 0;
    bool rational_bound = false;
    long long bound_num = 0, bound_den = 1;   // valid when rational_bound
    double bound_log2 = 0.0;                  // otherwise
    double alt_bound_log2 = 0.0;              // second exponent reading, when one exists
    bool has_alt_bound = false;
    bool alt_holds = false;
    bool holds = false;
    std::string clause;  // which conclusion fired, plus witnesses
};

// |{n in N : n * n^alpha = t}| vs 3|N|/4; exceptional exactly when N is
// abelian, t = 1 and alpha is inversion.
TrichotomyOutcome icecream_count(const FiniteGroup& n, const GroupAutomorphism& alpha, int t);

// |{n in N : n * (n^alpha)^{-1} = t}| vs 3|N|/4; exceptional exactly when
// t = 1 and alpha is the identity.
TrichotomyOutcome gelato_count(const FiniteGroup& n, const GroupAutomorphism& alpha, int t);

/**
 * Invariant-set counts for the three index-2 coset permutations. Each takes
 * the permuted action on the nontrivial coset from the lemma and leaves the
 * action on N as an explicit parameter (any permutation of the carrier).
 * Counting is exhaustive over the 2^{c(T)} inverse-closed subsets.
 */
// (gamma n)^alpha = gamma t n
TrichotomyOutcome alpha_invariant_count_aux1(const FiniteGroup& t_grp, const Bitset& n_carrier,
                                             int gamma, int t, const std::vector<int>& n_images,
                                             int max_c = 24);
// (gamma n)^alpha = gamma t n^{-1}; requires N abelian of exponent > 2 and
// the side condition (o(gamma) = 2, or alpha fixes the involutions of
// gamma N), which is rejected as a precondition failure when violated.
TrichotomyOutcome alpha_invariant_count_aux2(const FiniteGroup& t_grp, const Bitset& n_carrier,
                                             int gamma, int t, const std::vector<int>& n_images,
                                             int max_c = 24);
// (gamma n)^alpha = gamma t n^{bar-iota_A}; N = Dic(A,y,x) of index 2, and
// the restriction must preserve A and xA setwise. Reports both exponent
// readings of the stated bound (base c(T) and base c(gamma N)).
TrichotomyOutcome alpha_invariant_count_aux3(const FiniteGroup& t_grp, const Bitset& n_carrier,
                                             const DicDecomposition& dic_n, int gamma, int t,
                                             const std::vector<int>& n_images, int max_c = 24);

/**
 * |{S subset X : |S cap S^f| = |S cap S^g|}| over all 2^|X| subsets, vs
 * (3/4) 2^|X|. Exceptional iff F - G is antisymmetric with zero diagonal;
 * the returned clause names the invariant split I (rows where f = g).
 */
TrichotomyOutcome intersection_trichotomy(int x_size, const Permutation& f, const Permutation& g,
                                          int max_size = 24);

/**
 * Coset bookkeeping for the sigma / Psi machinery: orbits O_i = gamma_i N
 * with gamma_1 the identity and minimal-element representatives.
 */
struct SigmaContext {
    const FiniteGroup* group = nullptr;
    Bitset n_carrier;
    std::vector<int> coset_of;
    std::vector<int> reps;
    std::vector<Bitset> orbits;
    FiniteGroup quotient;

    int b() const { return int(reps.size()); }
};
SigmaContext make_sigma_context(const FiniteGroup& g, const Bitset& n);

/**
 * sigma(S,u,j) = S_j cap S_{j i^{-1}}^{gamma_i k_u}: the common neighbours
 * of the identity vertex and u inside O_j. Computed from the formula and
 * asserted equal to the direct common-neighbourhood computation.
 * Preconditions: u in O_i with i != identity coset, j not in {1, i}.
 */
Bitset sigma(const SigmaContext& ctx, const Bitset& s, int u, int j);

struct PsiOutcome {
    uint64_t count = 0;
    double bound_log2 = 0.0;
    bool bound_asserted = false;  // false for the recorded-only case
    bool holds = false;
    std::string clause;
};

/**
 * |Psi({u,v},j)| (or the triple version) by exhaustion over all
 * inverse-closed S. With j given, checks the five-case conclusion list;
 * case o(j) = o(j i^{-1}) = 2 is recorded without a bound. Without j,
 * computes the intersection over all j and checks the 0.02 |R|/|N| bound
 * under its preconditions (o(i) odd for pairs; R/N not elementary abelian
 * 2-group for triples).
 */
PsiOutcome psi_count(const SigmaContext& ctx, const std::vector<int>& verts, std::optional<int> j,
                     int max_c = 24);

}  // namespace grr
