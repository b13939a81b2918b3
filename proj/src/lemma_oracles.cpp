#include "grr/lemma_oracles.hpp"

#include <algorithm>
#include <cmath>

namespace grr {

namespace {

bool rational_bound_ok(long long count, long long num, long long den) {
    return count * den <= num;  // count <= num/den with num already scaled
}

TrichotomyOutcome rational_outcome(long long count, long long num3, long long den4, bool exceptional,
                                   long long group_order, const std::string& clause) {
    TrichotomyOutcome out;
    out.exact_count = count;
    out.rational_bound = true;
    out.bound_num = num3;
    out.bound_den = den4;
    if (exceptional) {
        out.tag = TrichotomyOutcome::EXCEPTIONAL;
        out.clause = clause;
        out.holds = (count == group_order);  // the exceptional shapes are total
    } else {
        out.tag = TrichotomyOutcome::BOUND_HOLDS;
        out.clause = "bound";
        out.holds = rational_bound_ok(count, num3, den4);
    }
    return out;
}

}  // namespace

TrichotomyOutcome icecream_count(const FiniteGroup& n, const GroupAutomorphism& alpha, int t) {
    if (!is_automorphism(n, alpha.images))
        throw std::invalid_argument("icecream_count: alpha is not an automorphism");
    long long count = 0;
    for (int e = 0; e < n.n; ++e)
        if (n.mul(e, alpha.images[e]) == t) ++count;
    bool exceptional = n.is_abelian() && t == 0 && alpha.images == n.inv;
    return rational_outcome(count, 3LL * n.n, 4, exceptional, n.n,
                            "abelian, t=1, alpha is inversion");
}

TrichotomyOutcome gelato_count(const FiniteGroup& n, const GroupAutomorphism& alpha, int t) {
    if (!is_automorphism(n, alpha.images))
        throw std::invalid_argument("gelato_count: alpha is not an automorphism");
    long long count = 0;
    for (int e = 0; e < n.n; ++e)
        if (n.mul(e, n.inv[alpha.images[e]]) == t) ++count;
    bool exceptional = (t == 0) && alpha.is_identity();
    return rational_outcome(count, 3LL * n.n, 4, exceptional, n.n, "t=1, alpha is identity");
}

namespace {

// Builds the full alpha_t permutation of T from the restriction to N and the
// prescribed action on the nontrivial coset; validates the restriction.
std::vector<int> assemble_alpha(const FiniteGroup& t_grp, const Bitset& n_carrier, int gamma,
                                const std::vector<int>& n_images,
                                const std::vector<int>& coset_action) {
    int n = t_grp.n;
    if (2 * n_carrier.count() != n || !is_subgroup(t_grp, n_carrier))
        throw std::invalid_argument("N must be an index-2 subgroup of T");
    if (n_carrier.test(gamma)) throw std::invalid_argument("gamma must lie outside N");
    if (int(n_images.size()) != n) throw std::invalid_argument("restriction table has wrong size");
    Bitset hit(n);
    for (int e = n_carrier.find_first(); e >= 0; e = n_carrier.find_next(e)) {
        int im = n_images[e];
        if (im < 0 || im >= n || !n_carrier.test(im) || hit.test(im))
            throw std::invalid_argument("restriction is not a permutation of N");
        hit.set(im);
    }
    std::vector<int> alpha(n, -1);
    int gamma_inv = t_grp.inv[gamma];
    for (int e = 0; e < n; ++e)
        alpha[e] = n_carrier.test(e) ? n_images[e] : coset_action[t_grp.mul(gamma_inv, e)];
    return alpha;
}

long long count_invariant_inverse_closed(const FiniteGroup& t_grp, const std::vector<int>& alpha,
                                         int max_c) {
    ConnectionSetEnumerator en(t_grp, max_c);
    uint64_t total = en.count();
    long long count = 0;
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t x = en.decode_mask(idx);
        uint64_t rest = x;
        bool inv = true;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (!((x >> alpha[v]) & 1)) {
                inv = false;
                break;
            }
        }
        if (inv) ++count;
    }
    return count;
}

bool fix_or_invert_on(const FiniteGroup& g, const std::vector<int>& map, const Bitset& dom) {
    for (int e = dom.find_first(); e >= 0; e = dom.find_next(e))
        if (map[e] != e && map[e] != g.inv[e]) return false;
    return true;
}

// The lemmas promise: in their exceptional parts, a restriction that only
// fixes or inverts N extends to fixing or inverting all of T.
bool exceptional_cross_check(const FiniteGroup& t_grp, const Bitset& n_carrier,
                             const std::vector<int>& alpha) {
    if (!fix_or_invert_on(t_grp, alpha, n_carrier)) return true;  // premise empty
    return fix_or_invert_on(t_grp, alpha, full_set(t_grp.n));
}

bool log_bound_holds(long long count, double exponent) {
    if (count == 0) return true;
    return std::log2(double(count)) <= exponent + 1e-9;
}

// The lemmas are disjunctions: an instance is fine when the counting bound
// holds, and otherwise must land in a detected exceptional shape whose
// extension addendum checks out. A failure names the fix-or-invert
// structure when present, since that is what makes every set invariant.
void settle_aux_outcome(TrichotomyOutcome& out, bool shape, const std::string& shape_clause,
                        bool addendum_ok, const std::string& bound_clause,
                        bool alpha_fix_or_invert) {
    bool bound_ok = log_bound_holds(out.exact_count, out.bound_log2);
    if (bound_ok) {
        out.tag = TrichotomyOutcome::BOUND_HOLDS;
        out.clause = shape ? bound_clause + "; shape also present: " + shape_clause : bound_clause;
        out.holds = true;
    } else if (shape) {
        out.tag = TrichotomyOutcome::EXCEPTIONAL;
        out.clause = shape_clause;
        out.holds = addendum_ok;
    } else {
        out.tag = TrichotomyOutcome::BOUND_HOLDS;
        out.clause = alpha_fix_or_invert
                         ? "bound exceeded, no stated shape matches; alpha only fixes or inverts"
                         : "bound exceeded and no exceptional shape matches";
        out.holds = false;
    }
}

}  // namespace

TrichotomyOutcome alpha_invariant_count_aux1(const FiniteGroup& t_grp, const Bitset& n_carrier,
                                             int gamma, int t, const std::vector<int>& n_images,
                                             int max_c) {
    if (!n_carrier.test(t)) throw std::invalid_argument("t must lie in N");
    std::vector<int> coset_action(t_grp.n);
    for (int e = n_carrier.find_first(); e >= 0; e = n_carrier.find_next(e))
        coset_action[e] = t_grp.mul(gamma, t_grp.mul(t, e));  // gamma n -> gamma t n
    std::vector<int> alpha = assemble_alpha(t_grp, n_carrier, gamma, n_images, coset_action);

    TrichotomyOutcome out;
    out.exact_count = count_invariant_inverse_closed(t_grp, alpha, max_c);
    out.bound_log2 = double(c_value(t_grp, full_set(t_grp.n))) - double(n_carrier.count()) / 16.0;

    SubgroupView sub = subgroup_as_group(t_grp, n_carrier);
    int gamma2 = t_grp.mul(gamma, gamma);
    bool shape = false;
    std::string shape_clause;
    if (t == 0) {
        shape = true;
        shape_clause = "t=1";
    }
    if (!shape && t_grp.order_of(t) == 2 && t == gamma2 && sub.group.is_abelian() &&
        sub.group.exponent() > 2) {
        bool inverts = true;
        for (int a = n_carrier.find_first(); a >= 0 && inverts; a = n_carrier.find_next(a))
            if (t_grp.conj(a, gamma) != t_grp.inv[a]) inverts = false;
        if (inverts) {
            shape = true;
            shape_clause = "o(t)=2, t=gamma^2, T=Dic(N,gamma^2,gamma)";
        }
    }
    if (!shape && sub.group.exponent() <= 2) {
        bool t_unique_square = t != 0;
        bool some_t_square = false;
        for (int g = 0; g < t_grp.n && t_unique_square; ++g) {
            int sq = t_grp.mul(g, g);
            if (sq != 0 && sq != t) t_unique_square = false;
            if (sq == t) some_t_square = true;
        }
        if (t_unique_square && some_t_square) {
            int ell = 0;
            while ((4 << ell) < t_grp.n) ++ell;
            FiniteGroup ref = cyclic(4);
            for (int i = 0; i < ell; ++i) ref = direct_product(ref, cyclic(2));
            if ((4 << ell) == t_grp.n && are_isomorphic(t_grp, ref)) {
                shape = true;
                shape_clause = "T=C4xC2^l, t the only non-identity square, N elementary abelian";
            }
        }
    }
    settle_aux_outcome(out, shape, shape_clause, exceptional_cross_check(t_grp, n_carrier, alpha),
                       "bound c(T)-|N|/16", fix_or_invert_on(t_grp, alpha, full_set(t_grp.n)));
    return out;
}

TrichotomyOutcome alpha_invariant_count_aux2(const FiniteGroup& t_grp, const Bitset& n_carrier,
                                             int gamma, int t, const std::vector<int>& n_images,
                                             int max_c) {
    if (!n_carrier.test(t)) throw std::invalid_argument("t must lie in N");
    SubgroupView sub = subgroup_as_group(t_grp, n_carrier);
    if (!sub.group.is_abelian() || sub.group.exponent() <= 2)
        throw std::invalid_argument("aux2 requires N abelian of exponent > 2");
    if (t_grp.order_of(gamma) != 2) {
        // side condition: alpha_t must fix the involutions of gamma N, i.e.
        // o(gamma n) = 2 forces t = n^2
        for (int e = n_carrier.find_first(); e >= 0; e = n_carrier.find_next(e)) {
            int gn = t_grp.mul(gamma, e);
            if (t_grp.order_of(gn) == 2 && t != t_grp.mul(e, e))
                throw std::invalid_argument("aux2 side condition violated for this (gamma, t)");
        }
    }
    std::vector<int> coset_action(t_grp.n);
    for (int e = n_carrier.find_first(); e >= 0; e = n_carrier.find_next(e))
        coset_action[e] = t_grp.mul(gamma, t_grp.mul(t, t_grp.inv[e]));  // gamma n -> gamma t n^{-1}
    std::vector<int> alpha = assemble_alpha(t_grp, n_carrier, gamma, n_images, coset_action);

    TrichotomyOutcome out;
    out.exact_count = count_invariant_inverse_closed(t_grp, alpha, max_c);
    out.bound_log2 = double(c_value(t_grp, full_set(t_grp.n))) - double(n_carrier.count()) / 24.0;

    int gamma2 = t_grp.mul(gamma, gamma);
    bool shape = false;
    std::string shape_clause;
    if (t_grp.is_abelian() && t == t_grp.inv[gamma2]) {
        shape = true;
        shape_clause = "T abelian, t=gamma^{-2}";
    }
    if (!shape && (t_grp.n & (t_grp.n - 1)) == 0 && t_grp.n >= 8) {
        int ell = 0;
        while ((8 << ell) < t_grp.n) ++ell;
        if ((8 << ell) == t_grp.n) {
            FiniteGroup q8ref = quaternion();
            FiniteGroup c4ref = cyclic(4);
            for (int i = 0; i < ell; ++i) {
                q8ref = direct_product(q8ref, cyclic(2));
                c4ref = direct_product(c4ref, cyclic(2));
            }
            if (are_isomorphic(t_grp, q8ref) && are_isomorphic(sub.group, c4ref)) {
                shape = true;
                shape_clause = "T=Q8xC2^l, N=C4xC2^l";
            }
        }
        if (!shape && t == gamma2 && t_grp.n >= 16 && (16 << std::max(0, ell - 1)) == t_grp.n) {
            int ell16 = ell - 1;  // |T| = 16 * 2^{ell16}
            FiniteGroup p16ref = c4_semidirect_c4();
            FiniteGroup nref = direct_product(cyclic(4), cyclic(2));
            for (int i = 0; i < ell16; ++i) {
                p16ref = direct_product(p16ref, cyclic(2));
                nref = direct_product(nref, cyclic(2));
            }
            if (are_isomorphic(t_grp, p16ref) && are_isomorphic(sub.group, nref)) {
                shape = true;
                shape_clause = "t=gamma^2, T=<x,y|x4=y4=(xy)4,x2=y2>xC2^l, N=C4xC2^{l+1}";
            }
        }
    }
    settle_aux_outcome(out, shape, shape_clause, exceptional_cross_check(t_grp, n_carrier, alpha),
                       "bound c(T)-|N|/24", fix_or_invert_on(t_grp, alpha, full_set(t_grp.n)));
    return out;
}

TrichotomyOutcome alpha_invariant_count_aux3(const FiniteGroup& t_grp, const Bitset& n_carrier,
                                             const DicDecomposition& dic_n, int gamma, int t,
                                             const std::vector<int>& n_images, int max_c) {
    if (!n_carrier.test(t)) throw std::invalid_argument("t must lie in N");
    if (!dic_n.a_carrier.subset_of(n_carrier) || !n_carrier.test(dic_n.x) ||
        !n_carrier.test(dic_n.y))
        throw std::invalid_argument("dic decomposition does not live inside N");
    if (int(n_images.size()) != t_grp.n)
        throw std::invalid_argument("restriction table has wrong size");
    // restriction must preserve A and xA = N \ A setwise
    for (int e = n_carrier.find_first(); e >= 0; e = n_carrier.find_next(e))
        if (dic_n.a_carrier.test(e) != dic_n.a_carrier.test(n_images[e]))
            throw std::invalid_argument("restriction must preserve A and xA setwise");

    auto bar_iota_n = [&](int e) {  // on N: fixes A, multiplies by y outside
        return dic_n.a_carrier.test(e) ? e : t_grp.mul(e, dic_n.y);
    };
    std::vector<int> coset_action(t_grp.n);
    for (int e = n_carrier.find_first(); e >= 0; e = n_carrier.find_next(e))
        coset_action[e] = t_grp.mul(gamma, t_grp.mul(t, bar_iota_n(e)));
    std::vector<int> alpha = assemble_alpha(t_grp, n_carrier, gamma, n_images, coset_action);

    TrichotomyOutcome out;
    out.exact_count = count_invariant_inverse_closed(t_grp, alpha, max_c);
    int n_size = n_carrier.count();
    int c_t = c_value(t_grp, full_set(t_grp.n));
    int invs_outside = 0;
    for (int e = 0; e < t_grp.n; ++e)
        if (!n_carrier.test(e) && t_grp.order_of(e) <= 2) ++invs_outside;
    double c_gamma_n = (double(n_size) + invs_outside) / 2.0;
    out.bound_log2 = double(c_t) - double(n_size) / 24.0;        // c(T) reading
    out.alt_bound_log2 = c_gamma_n - double(n_size) / 24.0;      // stated c(gamma N) reading
    out.has_alt_bound = true;
    out.alt_holds = log_bound_holds(out.exact_count, out.alt_bound_log2);

    int gamma2 = t_grp.mul(gamma, gamma);
    bool shape = false;
    std::string shape_clause;
    if (gamma2 == dic_n.y && dic_n.y == t) {
        bool inverts_a = true;
        for (int a = dic_n.a_carrier.find_first(); a >= 0 && inverts_a;
             a = dic_n.a_carrier.find_next(a))
            if (t_grp.conj(a, gamma) != t_grp.inv[a]) inverts_a = false;
        if (inverts_a) {
            shape = true;
            shape_clause = "gamma^2=y=t, a^gamma=a^{-1}";
        }
    }
    if (!shape && t == 0) {
        Bitset h = subgroup_closure(t_grp, dic_n.a_carrier | singleton(t_grp.n, gamma));
        if (2 * h.count() == t_grp.n && !h.test(dic_n.x)) {
            SubgroupView hv = subgroup_as_group(t_grp, h);
            bool inverts = true;
            for (int a = h.find_first(); a >= 0 && inverts; a = h.find_next(a))
                if (t_grp.conj(a, dic_n.x) != t_grp.inv[a]) inverts = false;
            if (hv.group.is_abelian() && hv.group.exponent() > 2 && inverts &&
                t_grp.mul(dic_n.x, dic_n.x) == dic_n.y) {
                shape = true;
                shape_clause = "t=1, <gamma,A> abelian, T=Dic(<gamma,A>,y,x)";
            }
        }
    }
    settle_aux_outcome(out, shape, shape_clause, exceptional_cross_check(t_grp, n_carrier, alpha),
                       "bound c(T)-|N|/24 (alt reading c(gammaN)-|N|/24 reported)",
                       fix_or_invert_on(t_grp, alpha, full_set(t_grp.n)));
    return out;
}

TrichotomyOutcome intersection_trichotomy(int x_size, const Permutation& f, const Permutation& g,
                                          int max_size) {
    if (x_size < 1 || f.degree() != x_size || g.degree() != x_size)
        throw std::invalid_argument("permutation degrees must equal the ground-set size");
    if (x_size > max_size)
        throw budget_error("intersection_trichotomy: ground set of " + std::to_string(x_size) +
                           " exceeds budget " + std::to_string(max_size));

    uint64_t total = uint64_t(1) << x_size;
    long long count = 0;
    for (uint64_t mask = 0; mask < total; ++mask) {
        uint64_t im_f = 0, im_g = 0;
        uint64_t m = mask;
        while (m) {
            int x = std::countr_zero(m);
            m &= m - 1;
            im_f |= uint64_t(1) << f.img[x];
            im_g |= uint64_t(1) << g.img[x];
        }
        if (std::popcount(mask & im_f) == std::popcount(mask & im_g)) ++count;
    }

    // F - G is antisymmetric with zero diagonal?
    bool antisym = true;
    for (int x = 0; x < x_size && antisym; ++x)
        if ((f.img[x] == x) != (g.img[x] == x)) antisym = false;
    for (int i = 0; i < x_size && antisym; ++i)
        for (int j = 0; j < x_size && antisym; ++j) {
            if (i == j) continue;
            int a_ij = (f.img[i] == j) - (g.img[i] == j);
            int a_ji = (f.img[j] == i) - (g.img[j] == i);
            if (a_ij + a_ji != 0) antisym = false;
        }

    TrichotomyOutcome out;
    out.exact_count = count;
    out.rational_bound = true;
    out.bound_num = 3 * (long long)total;
    out.bound_den = 4;
    if (antisym) {
        out.tag = TrichotomyOutcome::EXCEPTIONAL;
        // structural witness: I = zero rows of F - G
        Bitset i_set(x_size);
        for (int x = 0; x < x_size; ++x)
            if (f.img[x] == g.img[x]) i_set.set(x);
        bool witness_ok = true;
        for (int x = 0; x < x_size && witness_ok; ++x) {
            if (i_set.test(x)) {
                if (!i_set.test(f.img[x]) || !i_set.test(g.img[x])) witness_ok = false;
            } else {
                if (i_set.test(f.img[x]) || f.img[x] != g.inverse().img[x]) witness_ok = false;
            }
        }
        out.clause = "antisymmetric: f=g on I (|I|=" + std::to_string(i_set.count()) +
                     "), f=g^{-1} off I";
        out.holds = witness_ok && (count == (long long)total);
    } else {
        out.tag = TrichotomyOutcome::BOUND_HOLDS;
        out.clause = "bound (3/4)2^|X|";
        out.holds = rational_bound_ok(count, out.bound_num, out.bound_den);
    }
    return out;
}

SigmaContext make_sigma_context(const FiniteGroup& g, const Bitset& n) {
    Quotient q = quotient_group(g, n);
    SigmaContext ctx;
    ctx.group = &g;
    ctx.n_carrier = n;
    ctx.coset_of = q.coset_of;
    ctx.reps = q.reps;
    ctx.quotient = std::move(q.group);
    ctx.orbits.assign(ctx.reps.size(), Bitset(g.n));
    for (int e = 0; e < g.n; ++e) ctx.orbits[ctx.coset_of[e]].set(e);
    return ctx;
}

namespace {

Bitset sigma_direct(const SigmaContext& ctx, const Bitset& s, int u, int j) {
    const FiniteGroup& g = *ctx.group;
    Bitset out(g.n);
    int uinv = g.inv[u];
    for (int w = ctx.orbits[j].find_first(); w >= 0; w = ctx.orbits[j].find_next(w))
        if (s.test(w) && s.test(g.mul(w, uinv))) out.set(w);
    return out;
}

}  // namespace

Bitset sigma(const SigmaContext& ctx, const Bitset& s, int u, int j) {
    const FiniteGroup& g = *ctx.group;
    if (!is_inverse_closed(g, s)) throw std::invalid_argument("sigma requires an inverse-closed S");
    if (u < 0 || u >= g.n) throw std::out_of_range("sigma: vertex out of range");
    int i = ctx.coset_of[u];
    if (i == 0) throw std::invalid_argument("sigma: u must lie outside the identity coset");
    if (j <= 0 || j >= ctx.b() || j == i)
        throw std::invalid_argument("sigma: j must avoid the identity coset and the coset of u");

    int ji_inv = ctx.quotient.mul(j, ctx.quotient.inv[i]);
    Bitset s_j = s & ctx.orbits[j];
    Bitset s_ji = s & ctx.orbits[ji_inv];
    Bitset translated(g.n);
    for (int e = s_ji.find_first(); e >= 0; e = s_ji.find_next(e))
        translated.set(g.mul(e, u));  // right translation by g_u = gamma_i k_u = u
    Bitset formula = s_j & translated;

    if (formula != sigma_direct(ctx, s, u, j))
        throw std::logic_error("sigma formula disagrees with the direct neighbourhood computation");
    return formula;
}

PsiOutcome psi_count(const SigmaContext& ctx, const std::vector<int>& verts, std::optional<int> j,
                     int max_c) {
    const FiniteGroup& g = *ctx.group;
    if (verts.size() != 2 && verts.size() != 3)
        throw std::invalid_argument("psi_count takes two or three vertices");
    int i = ctx.coset_of[verts[0]];
    if (i == 0) throw std::invalid_argument("psi_count: vertices must lie outside the identity coset");
    for (size_t a = 0; a < verts.size(); ++a) {
        if (ctx.coset_of[verts[a]] != i)
            throw std::invalid_argument("psi_count: vertices must share one N-orbit");
        for (size_t b = a + 1; b < verts.size(); ++b)
            if (verts[a] == verts[b]) throw std::invalid_argument("psi_count: vertices must be distinct");
    }
    std::vector<int> js;
    if (j) {
        if (*j <= 0 || *j >= ctx.b() || *j == i)
            throw std::invalid_argument("psi_count: j must avoid the identity coset and O_i");
        js.push_back(*j);
    } else {
        for (int cand = 1; cand < ctx.b(); ++cand)
            if (cand != i) js.push_back(cand);
    }

    ConnectionSetEnumerator en(g, max_c);
    uint64_t total = en.count();
    uint64_t count = 0;
    for (uint64_t idx = 0; idx < total; ++idx) {
        Bitset s = en.decode(idx);
        bool all_equal = true;
        for (int jj : js) {
            int first = sigma_direct(ctx, s, verts[0], jj).count();
            for (size_t a = 1; a < verts.size() && all_equal; ++a)
                if (sigma_direct(ctx, s, verts[a], jj).count() != first) all_equal = false;
            if (!all_equal) break;
        }
        if (all_equal) ++count;
    }

    PsiOutcome out;
    out.count = count;

    if (j) {
        int o_j = ctx.quotient.order_of(*j);
        int o_ji = ctx.quotient.order_of(ctx.quotient.mul(*j, ctx.quotient.inv[i]));
        if (o_j == 2 && o_ji == 2) {
            out.bound_asserted = false;
            out.holds = true;
            out.clause = "case o(j)=o(ji^{-1})=2 (recorded, no bound)";
            return out;
        }
        out.bound_asserted = true;
        out.bound_log2 = std::log2(3.0) - 2.0 + double(en.c());
        bool bound_ok = 4 * count <= 3 * total;
        if (bound_ok) {
            out.holds = true;
            out.clause = "bound (3/4)2^{c(R)}";
            return out;
        }
        if (verts.size() == 3) {
            out.holds = false;
            out.clause = "triple exceeded the bound outside the recorded case";
            return out;
        }
        // structural cases of the pair count's conclusion list
        int u = verts[0], v = verts[1];
        int gamma_i = ctx.reps[i], gamma_j = ctx.reps[*j];
        int k_u = g.mul(g.inv[gamma_i], u), k_v = g.mul(g.inv[gamma_i], v);
        auto centralizes_n = [&](int e) {
            for (int m = ctx.n_carrier.find_first(); m >= 0; m = ctx.n_carrier.find_next(m))
                if (g.mul(e, m) != g.mul(m, e)) return false;
            return true;
        };
        if (ctx.quotient.mul(*j, *j) == i) {
            int ybar = g.mul(g.inv[g.mul(gamma_j, gamma_j)], gamma_i);
            int lhs_u = g.mul(g.mul(g.mul(g.inv[ybar], g.inv[gamma_j]), g.mul(ybar, k_v)), gamma_j);
            int lhs_v = g.mul(g.mul(g.mul(g.inv[ybar], g.inv[gamma_j]), g.mul(ybar, k_u)), gamma_j);
            if (ctx.n_carrier.test(ybar) && lhs_u == k_u && lhs_v == k_v && centralizes_n(u) &&
                centralizes_n(v)) {
                out.holds = true;
                out.clause = "case j^2=i with centralizing gamma_i k_u, gamma_i k_v";
                return out;
            }
        }
        auto inversion_case = [&](int w) {  // w = gamma_j or gamma_{ji^{-1}}
            int z = g.mul(g.inv[k_v], k_u);
            if (g.order_of(w) != 4) return false;
            if (g.mul(w, w) != z || z != g.mul(g.inv[k_u], k_v)) return false;
            SubgroupView nv = subgroup_as_group(g, ctx.n_carrier);
            if (!nv.group.is_abelian()) return false;
            for (int m = ctx.n_carrier.find_first(); m >= 0; m = ctx.n_carrier.find_next(m))
                if (g.conj(m, w) != g.inv[m]) return false;
            return true;
        };
        int ji_inv = ctx.quotient.mul(*j, ctx.quotient.inv[i]);
        bool even_i = ctx.quotient.order_of(i) % 2 == 0;
        if (o_ji > 2 && o_j == 2 && inversion_case(gamma_j)) {
            if (even_i) {
                out.holds = true;
                out.clause = "case o(j)=2: gamma_j inverts abelian N, gamma_j^2=k_v^{-1}k_u";
            } else {
                // the full order-2 inversion shape is present, only the
                // stated o(i)-even clause fails; flagged as a violation of
                // the conclusion list as written
                out.holds = false;
                out.clause = "bound exceeded; o(j)=2 inversion shape holds but o(i) is odd";
            }
            return out;
        }
        if (o_ji == 2 && o_j > 2 && inversion_case(ctx.reps[ji_inv])) {
            if (even_i) {
                out.holds = true;
                out.clause = "case o(ji^{-1})=2: gamma_{ji^{-1}} inverts abelian N";
            } else {
                out.holds = false;
                out.clause = "bound exceeded; o(ji^{-1})=2 inversion shape holds but o(i) is odd";
            }
            return out;
        }
        out.holds = false;
        out.clause = "pair exceeded the bound and matches no structural case";
        return out;
    }

    // intersection over all j: the 0.02 |R|/|N| bound under its preconditions
    int o_i = ctx.quotient.order_of(i);
    if (verts.size() == 2) {
        if (o_i % 2 == 0)
            throw std::invalid_argument("psi_count intersection for pairs requires o(i) odd");
    } else {
        if (ctx.quotient.is_abelian() && ctx.quotient.exponent() <= 2)
            throw std::invalid_argument(
                "psi_count intersection for triples requires R/N not elementary abelian 2-group");
    }
    out.bound_asserted = true;
    out.bound_log2 =
        double(en.c()) - 0.02 * double(g.n) / double(ctx.n_carrier.count());
    out.holds = (count == 0) || (std::log2(double(count)) <= out.bound_log2 + 1e-9);
    out.clause = "intersection bound c(R)-0.02|R|/|N|";
    return out;
}

}  // namespace grr
