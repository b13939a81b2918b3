#pragma once

#include "grr/cayley_graph.hpp"
#include "grr/connection_set.hpp"
#include "grr/graph_aut.hpp"
#include "grr/group.hpp"
#include "grr/perm.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace grr {

/**
 * Per-(R,N) census totals over all 2^{c(R)} inverse-closed connection sets.
 * The strata partition S_N: s_n = s_n1 + t_n + u_n, and t_n (the sets with
 * an identity-fixing N-normalizing automorphism moving some x outside
 * {x, x^{-1}}) equals t_n1 + ... + t_n4; both identities are asserted.
 */
struct StratumCounts {
    uint64_t total_sets = 0;
    uint64_t grr_count = 0;
    uint64_t s_n = 0;
    uint64_t s_n1 = 0;
    uint64_t t_n = 0;
    uint64_t t_n1 = 0, t_n2 = 0, t_n3 = 0, t_n4 = 0;
    uint64_t u_n = 0;
    // S admitting some nontrivial f in P1 fixing each N-orbit setwise,
    // plus the variant gated on R = N_Aut(R_reg).
    uint64_t fixes_orbits_count = 0;
    uint64_t fixes_orbits_gated_count = 0;
    // S with R < N_Aut(Gamma)(R_reg); the group-automorphism count.
    uint64_t n_aut_bigger_count = 0;
    // up to witness_cap smallest enumeration indices per stratum
    std::map<std::string, std::vector<uint64_t>> witness_indices;

    void merge(const StratumCounts& other, int witness_cap);
    void assert_partition_identities() const;
};

enum class Stratum { NONE, S_N1, T_N1, T_N2, T_N3, T_N4, U_N };
const char* stratum_name(Stratum s);

struct ClassifyResult {
    bool aut_r_bigger = false;      // some nontrivial group automorphism preserves S
    bool in_s_n = false;            // P1 nontrivial
    Stratum stratum = Stratum::NONE;
    bool moves_outside_pair = false;  // direct T_N predicate
    bool fixes_orbits = false;
    bool grr = false;
};

/**
 * Precomputed per-(R,N) data shared by all classifications: the N-orbit
 * block system, the abstract structure of N (abelian of exponent > 2,
 * generalised dicyclic, Q8 x C2^l) with its reference automorphisms, and
 * Aut(R) as permutations for the N_Aut(R_reg) = R_reg test (the identity
 * stabilizer of the normalizer of a regular representation is exactly the
 * group's automorphism group).
 */
struct CensusContext {
    const FiniteGroup* group = nullptr;
    Bitset n_carrier;
    std::vector<int> blocks;          // coset index per vertex
    std::vector<int> reps;            // minimal coset representatives
    FiniteGroup quotient;
    std::vector<int> quotient_inv;    // coset inverse per coset
    std::vector<GroupAutomorphism> aut_r;  // sans identity
    bool n_abelian = false;
    bool n_abelian_exp_gt2 = false;
    bool n_is_q8x = false;            // N isomorphic to Q8 x C2^l
    bool n_gdc = false;
    bool r_excluded_family = false;   // R abelian exp > 2 or generalised dicyclic
    std::vector<std::vector<int>> n_reference_iotas;  // inversion / bar-iota images on N
    int c_r = 0;

    // search budgets
    uint64_t node_budget = 50'000'000;
    size_t stabilizer_cap = size_t(1) << 20;
};

CensusContext make_census_context(const FiniteGroup& g, const Bitset& n);

ClassifyResult classify_set(const CensusContext& ctx, const Bitset& s);

struct CensusOptions {
    int worker_count = 1;
    std::string checkpoint_path;      // empty: no checkpointing
    uint64_t checkpoint_stride = uint64_t(1) << 14;
    int witness_cap = 4;
    uint64_t max_new_indices = 0;     // 0 = run to completion; else stop early
    int max_c = 30;
    int max_order = 64;
    uint64_t seed = 0;                // recorded in reports
};

StratumCounts run_census(const CensusContext& ctx, const CensusOptions& opts);

struct BoundRecord {
    std::string bound_id;
    double lhs_log2 = 0.0;   // -inf when the count is zero
    double rhs_exponent = 0.0;
    double slack = 0.0;      // rhs - lhs
    bool holds = true;
    bool vacuous = false;    // rhs >= c(R)
    bool applicable = true;  // false when gated off (excluded family)
    std::string note;
};

struct BoundReport {
    std::vector<BoundRecord> records;
    bool all_applicable_hold() const;
};

// One record per inequality in the bound suite: the |N|/96 and
// |R|/(192|N|) global bounds in gated and ungated readings, their
// square-root combination, the four per-stratum bounds and the
// group-automorphism bound. Log2-domain tolerance 1e-6.
BoundReport check_bounds(const CensusContext& ctx, const StratumCounts& counts);

struct DensityRow {
    std::string label;
    int order = 0;
    uint64_t total_sets = 0;
    uint64_t grr_count = 0;
    double density = 0.0;
};
std::vector<DensityRow> grr_density_report(const std::vector<FiniteGroup>& groups, int max_c = 30);

nlohmann::json census_report_json(const CensusContext& ctx, const StratumCounts& counts,
                                  const BoundReport& report, uint64_t seed);
// CSV flat export, one row per bound record.
std::string census_report_csv(const CensusContext& ctx, const StratumCounts& counts,
                              const BoundReport& report, bool with_header);

}  // namespace grr
