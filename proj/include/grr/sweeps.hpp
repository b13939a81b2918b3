#pragma once

#include "grr/lemma_oracles.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace grr {

/**
 * One sweep row per interesting instance: every EXCEPTIONAL case, every
 * precondition rejection and every violation, plus one aggregate row per
 * group for the instances where the plain bound held.
 */
struct SweepRow {
    std::string lemma_id;
    std::string group_label;
    std::string parameters;
    std::string outcome;  // BOUND_HOLDS / EXCEPTIONAL / PRECONDITION / VIOLATION
    long long count = 0;
    std::string bound;
    std::string exceptional_clause;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    uint64_t instances = 0;
    uint64_t violations = 0;
};

SweepResult sweep_icecream(int max_order);
SweepResult sweep_gelato(int max_order);
SweepResult sweep_aux1(int max_order);
SweepResult sweep_aux2(int max_order);
SweepResult sweep_aux3(int max_order);
// random (f,g) pairs on ground sets of size min_size..max_size, plus the
// fixed 12-point example with equal intersection sizes for every subset
SweepResult sweep_trichotomy(uint64_t seed, int trials, int min_size = 6, int max_size = 14);
// random (R, N, S, u, j) instances across at least three group pairs;
// each invocation re-checks the sigma formula against the direct
// common-neighbourhood computation
SweepResult sweep_sigma(uint64_t seed, int instances);
SweepResult sweep_psi(int max_c = 12);

std::string sweep_csv(const SweepResult& result, uint64_t seed);

}  // namespace grr
