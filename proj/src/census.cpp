#include "grr/census.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

namespace grr {

using nlohmann::json;

const char* stratum_name(Stratum s) {
    switch (s) {
        case Stratum::S_N1: return "S_N1";
        case Stratum::T_N1: return "T_N1";
        case Stratum::T_N2: return "T_N2";
        case Stratum::T_N3: return "T_N3";
        case Stratum::T_N4: return "T_N4";
        case Stratum::U_N: return "U_N";
        default: return "NONE";
    }
}

void StratumCounts::merge(const StratumCounts& o, int witness_cap) {
    total_sets += o.total_sets;
    grr_count += o.grr_count;
    s_n += o.s_n;
    s_n1 += o.s_n1;
    t_n += o.t_n;
    t_n1 += o.t_n1;
    t_n2 += o.t_n2;
    t_n3 += o.t_n3;
    t_n4 += o.t_n4;
    u_n += o.u_n;
    fixes_orbits_count += o.fixes_orbits_count;
    fixes_orbits_gated_count += o.fixes_orbits_gated_count;
    n_aut_bigger_count += o.n_aut_bigger_count;
    for (const auto& [k, v] : o.witness_indices) {
        auto& mine = witness_indices[k];
        mine.insert(mine.end(), v.begin(), v.end());
        std::sort(mine.begin(), mine.end());
        if (int(mine.size()) > witness_cap) mine.resize(witness_cap);
    }
}

void StratumCounts::assert_partition_identities() const {
    if (s_n != s_n1 + t_n + u_n)
        throw std::logic_error("census partition identity s_N = s_N1 + t_N + u_N violated");
    if (t_n != t_n1 + t_n2 + t_n3 + t_n4)
        throw std::logic_error("census identity t_N = t_N1 + t_N2 + t_N3 + t_N4 violated");
}

CensusContext make_census_context(const FiniteGroup& g, const Bitset& n) {
    if (!is_normal_subgroup(g, n))
        throw std::invalid_argument("census requires a normal subgroup");
    int nsize = n.count();
    if (nsize <= 1 || nsize >= g.n)
        throw std::invalid_argument("census requires a non-identity proper normal subgroup");

    CensusContext ctx;
    ctx.group = &g;
    ctx.n_carrier = n;
    Quotient q = quotient_group(g, n);
    ctx.blocks = q.coset_of;
    ctx.reps = q.reps;
    ctx.quotient = std::move(q.group);
    ctx.quotient_inv = ctx.quotient.inv;
    ctx.c_r = c_value(g, full_set(g.n));

    for (auto& a : automorphism_group(g))
        if (!a.is_identity()) ctx.aut_r.push_back(a);

    ctx.r_excluded_family = is_abelian_exp_gt2(g) || is_generalized_dicyclic(g);

    SubgroupView sub = subgroup_as_group(g, n);
    ctx.n_abelian = sub.group.is_abelian();
    ctx.n_abelian_exp_gt2 = is_abelian_exp_gt2(sub.group);
    auto decomps = generalized_dicyclic_decompositions(sub.group);
    ctx.n_gdc = !decomps.empty();
    ctx.n_is_q8x = decomps.size() == 3;
    if (ctx.n_is_q8x) {
        // cross-check the three-subgroup criterion against an explicit
        // isomorphism test with Q8 x C2^l
        int ell = 0;
        while ((8 << ell) < sub.group.n) ++ell;
        FiniteGroup ref = quaternion();
        for (int i = 0; i < ell; ++i) ref = direct_product(ref, cyclic(2));
        if ((8 << ell) != sub.group.n || !are_isomorphic(sub.group, ref))
            throw std::logic_error("three dicyclic decompositions but N is not Q8 x C2^l");
    }
    if (ctx.n_abelian_exp_gt2) {
        std::vector<int> inv_map(g.n);
        for (int e = 0; e < g.n; ++e) inv_map[e] = n.test(e) ? g.inv[e] : e;
        ctx.n_reference_iotas.push_back(std::move(inv_map));
    }
    for (const auto& d : decomps) {
        GroupAutomorphism bi = bar_iota(sub.group, d);
        std::vector<int> lifted(g.n);
        for (int e = 0; e < g.n; ++e)
            lifted[e] = n.test(e) ? sub.to_parent[bi.images[sub.from_parent[e]]] : e;
        ctx.n_reference_iotas.push_back(std::move(lifted));
    }
    return ctx;
}

namespace {

// f (restricted to the N-coset of the identity) agrees with the reference
// image table on the carrier.
bool matches_on_carrier(const Permutation& f, const Bitset& carrier, const std::vector<int>& ref) {
    for (int e = carrier.find_first(); e >= 0; e = carrier.find_next(e))
        if (f.img[e] != ref[e]) return false;
    return true;
}

bool normalizes_n_reg(const CensusContext& ctx, const Permutation& f) {
    const FiniteGroup& g = *ctx.group;
    Permutation finv = f.inverse();
    for (int n = ctx.n_carrier.find_first(); n >= 0; n = ctx.n_carrier.find_next(n)) {
        int m = f.img[g.mul(finv.img[0], n)];
        if (!ctx.n_carrier.test(m)) return false;
        for (int r = 0; r < g.n; ++r)
            if (f.img[g.mul(finv.img[r], n)] != g.mul(r, m)) return false;
    }
    return true;
}

bool exists_p1_element(const CensusContext& ctx, const CayleyGraph& graph, bool orbits_fixed) {
    AutSearchOptions opts;
    opts.blocks = &ctx.blocks;
    opts.blocks_fixed_setwise = orbits_fixed;
    opts.first_nontrivial_only = true;
    opts.node_budget = ctx.node_budget;
    opts.leaf_filter = [&](const Permutation& p) { return normalizes_n_reg(ctx, p); };
    return !stabilizer_automorphisms(graph, opts).empty();
}

}  // namespace

ClassifyResult classify_set(const CensusContext& ctx, const Bitset& s) {
    const FiniteGroup& g = *ctx.group;
    ClassifyResult res;
    CayleyGraph graph = build_graph(g, s);

    // R < N_Aut(R_reg) iff some nontrivial group automorphism preserves S
    for (const auto& a : ctx.aut_r) {
        bool preserves = true;
        for (int e = s.find_first(); e >= 0 && preserves; e = s.find_next(e))
            if (!s.test(a.images[e])) preserves = false;
        if (preserves) {
            res.aut_r_bigger = true;
            break;
        }
    }

    if (res.aut_r_bigger) {
        // not a GRR; only membership flags are needed, so short-circuit
        res.in_s_n = exists_p1_element(ctx, graph, false);
        res.stratum = res.in_s_n ? Stratum::S_N1 : Stratum::NONE;
        res.fixes_orbits = exists_p1_element(ctx, graph, true);
        res.grr = false;
        return res;
    }

    // materialize the identity stabilizer restricted to block-respecting
    // automorphisms; every N_reg-normalizing automorphism respects the
    // N-orbit partition, so this contains P1
    AutSearchOptions opts;
    opts.blocks = &ctx.blocks;
    opts.node_budget = ctx.node_budget;
    opts.element_cap = ctx.stabilizer_cap;
    std::vector<Permutation> p1;
    for (auto& f : stabilizer_automorphisms(graph, opts))
        if (!f.is_identity() && normalizes_n_reg(ctx, f)) p1.push_back(std::move(f));

    res.in_s_n = !p1.empty();

    {
        AutSearchOptions grr_opts;
        grr_opts.first_nontrivial_only = true;
        grr_opts.node_budget = ctx.node_budget;
        res.grr = stabilizer_automorphisms(graph, grr_opts).empty();
    }

    if (!res.in_s_n) {
        res.stratum = Stratum::NONE;
        return res;
    }

    auto block_image = [&](const Permutation& f, int coset) {
        return ctx.blocks[f.img[ctx.reps[coset]]];
    };

    bool t1 = false, t2 = false, t3 = false;
    for (const auto& f : p1) {
        for (int i = 1; i < int(ctx.reps.size()) && !t1; ++i) {
            int im = block_image(f, i);
            if (im != i && im != ctx.quotient_inv[i]) t1 = true;
        }
        if (t1) break;
    }
    if (!t1) {
        for (const auto& f : p1) {
            bool central = true;  // f centralizes N_reg iff it fixes the carrier pointwise
            for (int e = ctx.n_carrier.find_first(); e >= 0 && central; e = ctx.n_carrier.find_next(e))
                if (f.img[e] != e) central = false;
            if (central) continue;
            if (!ctx.n_abelian_exp_gt2 && !ctx.n_gdc) {
                t2 = true;  // first branch: any non-centralizing f witnesses
            } else {
                bool matches_reference = false;
                for (const auto& ref : ctx.n_reference_iotas)
                    if (matches_on_carrier(f, ctx.n_carrier, ref)) matches_reference = true;
                if (!matches_reference) t2 = true;
            }
            if (t2) break;
        }
    }
    if (!t1 && !t2) {
        for (const auto& f : p1) {
            for (int i = 1; i < int(ctx.reps.size()) && !t3; ++i) {
                if (block_image(f, i) == i) continue;
                if (!ctx.n_abelian) {
                    t3 = true;
                    break;
                }
                for (int e = ctx.n_carrier.find_first(); e >= 0; e = ctx.n_carrier.find_next(e)) {
                    int xn = g.mul(ctx.reps[i], e);
                    if (f.img[xn] != g.inv[xn]) {
                        t3 = true;
                        break;
                    }
                }
            }
            if (t3) break;
        }
    }
    bool moved = false;
    for (const auto& f : p1) {
        for (int v = 0; v < g.n && !moved; ++v)
            if (f.img[v] != v && f.img[v] != g.inv[v]) moved = true;
        if (moved) break;
    }
    res.moves_outside_pair = moved;

    if (t1) {
        res.stratum = Stratum::T_N1;
    } else if (t2) {
        res.stratum = Stratum::T_N2;
    } else if (t3) {
        res.stratum = Stratum::T_N3;
    } else if (moved) {
        res.stratum = Stratum::T_N4;
    } else {
        res.stratum = Stratum::U_N;
    }
    // every T-stratum set must move some x off {x, x^{-1}}, or the
    // subdivision would fail to cover t_N
    if ((res.stratum == Stratum::T_N1 || res.stratum == Stratum::T_N2 ||
         res.stratum == Stratum::T_N3) &&
        !moved)
        throw std::logic_error("T-subdivision member without a pair-moving automorphism");

    for (const auto& f : p1) {
        bool fixes = true;
        for (int i = 1; i < int(ctx.reps.size()) && fixes; ++i)
            if (block_image(f, i) != i) fixes = false;
        if (fixes) {
            res.fixes_orbits = true;
            break;
        }
    }
    return res;
}

namespace {

struct CheckpointData {
    uint64_t next_index = 0;
    StratumCounts counts;
};

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

json counts_to_json(const StratumCounts& c) {
    json j;
    j["total_sets"] = c.total_sets;
    j["grr_count"] = c.grr_count;
    j["s_N"] = c.s_n;
    j["s_N1"] = c.s_n1;
    j["t_N"] = c.t_n;
    j["t_N1"] = c.t_n1;
    j["t_N2"] = c.t_n2;
    j["t_N3"] = c.t_n3;
    j["t_N4"] = c.t_n4;
    j["u_N"] = c.u_n;
    j["fixes_orbits"] = c.fixes_orbits_count;
    j["fixes_orbits_gated"] = c.fixes_orbits_gated_count;
    j["r_normalizer_strict"] = c.n_aut_bigger_count;
    return j;
}

StratumCounts counts_from_json(const json& j) {
    StratumCounts c;
    c.total_sets = j.at("total_sets").get<uint64_t>();
    c.grr_count = j.at("grr_count").get<uint64_t>();
    c.s_n = j.at("s_N").get<uint64_t>();
    c.s_n1 = j.at("s_N1").get<uint64_t>();
    c.t_n = j.at("t_N").get<uint64_t>();
    c.t_n1 = j.at("t_N1").get<uint64_t>();
    c.t_n2 = j.at("t_N2").get<uint64_t>();
    c.t_n3 = j.at("t_N3").get<uint64_t>();
    c.t_n4 = j.at("t_N4").get<uint64_t>();
    c.u_n = j.at("u_N").get<uint64_t>();
    c.fixes_orbits_count = j.at("fixes_orbits").get<uint64_t>();
    c.fixes_orbits_gated_count = j.at("fixes_orbits_gated").get<uint64_t>();
    c.n_aut_bigger_count = j.at("r_normalizer_strict").get<uint64_t>();
    return c;
}

json checkpoint_body(const CensusContext& ctx, const CheckpointData& data) {
    json j;
    j["version"] = 1;
    j["group"] = ctx.group->label;
    j["normal_subgroup_hex"] = ctx.n_carrier.to_hex();
    j["c"] = ctx.c_r;
    j["next_index"] = data.next_index;
    j["counts"] = counts_to_json(data.counts);
    json w = json::object();
    for (const auto& [k, v] : data.counts.witness_indices) w[k] = v;
    j["witness_indices"] = w;
    return j;
}

void write_checkpoint(const std::string& path, const CensusContext& ctx, const CheckpointData& data) {
    json body = checkpoint_body(ctx, data);
    json file;
    file["body"] = body;
    file["hash"] = fnv1a(body.dump());
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint file " + path);
    out << file.dump(2) << "\n";
}

std::optional<CheckpointData> read_checkpoint(const std::string& path, const CensusContext& ctx) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    json file;
    try {
        in >> file;
    } catch (const json::parse_error&) {
        throw std::runtime_error("corrupt checkpoint: unparseable JSON in " + path);
    }
    if (!file.contains("body") || !file.contains("hash"))
        throw std::runtime_error("corrupt checkpoint: missing body or hash in " + path);
    const json& body = file["body"];
    if (fnv1a(body.dump()) != file["hash"].get<uint64_t>())
        throw std::runtime_error("corrupt checkpoint: hash mismatch in " + path);
    if (body.at("group").get<std::string>() != ctx.group->label ||
        body.at("normal_subgroup_hex").get<std::string>() != ctx.n_carrier.to_hex() ||
        body.at("c").get<int>() != ctx.c_r)
        throw std::runtime_error("checkpoint does not match this census in " + path);
    CheckpointData data;
    data.next_index = body.at("next_index").get<uint64_t>();
    data.counts = counts_from_json(body.at("counts"));
    for (auto it = body.at("witness_indices").begin(); it != body.at("witness_indices").end(); ++it)
        data.counts.witness_indices[it.key()] = it.value().get<std::vector<uint64_t>>();
    return data;
}

void tally(StratumCounts& counts, uint64_t index, const ClassifyResult& r,
           int witness_cap) {
    ++counts.total_sets;
    if (r.grr) ++counts.grr_count;
    if (r.aut_r_bigger) ++counts.n_aut_bigger_count;
    if (r.fixes_orbits) {
        ++counts.fixes_orbits_count;
        if (!r.aut_r_bigger) ++counts.fixes_orbits_gated_count;
    }
    if (!r.in_s_n) return;
    ++counts.s_n;
    switch (r.stratum) {
        case Stratum::S_N1: ++counts.s_n1; break;
        case Stratum::T_N1: ++counts.t_n1; ++counts.t_n; break;
        case Stratum::T_N2: ++counts.t_n2; ++counts.t_n; break;
        case Stratum::T_N3: ++counts.t_n3; ++counts.t_n; break;
        case Stratum::T_N4: ++counts.t_n4; ++counts.t_n; break;
        case Stratum::U_N: ++counts.u_n; break;
        default: break;
    }
    if (r.stratum != Stratum::NONE) {
        auto& w = counts.witness_indices[stratum_name(r.stratum)];
        if (int(w.size()) < witness_cap) {
            w.push_back(index);
            std::sort(w.begin(), w.end());
        } else if (!w.empty() && index < w.back()) {
            w.back() = index;
            std::sort(w.begin(), w.end());
        }
    }
    if (r.moves_outside_pair !=
        (r.stratum == Stratum::T_N1 || r.stratum == Stratum::T_N2 || r.stratum == Stratum::T_N3 ||
         r.stratum == Stratum::T_N4))
        throw std::logic_error("direct t_N predicate disagrees with the subdivision");
}

}  // namespace

StratumCounts run_census(const CensusContext& ctx, const CensusOptions& opts) {
    const FiniteGroup& g = *ctx.group;
    if (g.n > opts.max_order)
        throw budget_error("census: order " + std::to_string(g.n) + " exceeds budget " +
                           std::to_string(opts.max_order));
    ConnectionSetEnumerator en(g, opts.max_c);
    uint64_t total = en.count();

    CheckpointData state;
    if (!opts.checkpoint_path.empty()) {
        if (auto loaded = read_checkpoint(opts.checkpoint_path, ctx)) state = *loaded;
    }

    uint64_t processed_new = 0;
    while (state.next_index < total) {
        if (opts.max_new_indices && processed_new >= opts.max_new_indices) break;
        uint64_t block_end = std::min(total, state.next_index + opts.checkpoint_stride);
        if (opts.max_new_indices)
            block_end = std::min(block_end, state.next_index + (opts.max_new_indices - processed_new));

        auto ranges = partition_range(block_end - state.next_index, opts.worker_count);
        std::vector<StratumCounts> partial(ranges.size());
        std::vector<std::exception_ptr> errors(ranges.size());
        auto work = [&](size_t w) {
            try {
                for (uint64_t off = ranges[w].first; off < ranges[w].second; ++off) {
                    uint64_t idx = state.next_index + off;
                    ClassifyResult r = classify_set(ctx, en.decode(idx));
                    tally(partial[w], idx, r, opts.witness_cap);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        };
        if (opts.worker_count == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (size_t w = 0; w < ranges.size(); ++w) pool.emplace_back(work, w);
            for (auto& t : pool) t.join();
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (const auto& p : partial) state.counts.merge(p, opts.witness_cap);

        processed_new += block_end - state.next_index;
        state.next_index = block_end;
        if (!opts.checkpoint_path.empty()) write_checkpoint(opts.checkpoint_path, ctx, state);
    }

    if (state.next_index == total) {
        if (state.counts.total_sets != total)
            throw std::logic_error("census processed a different number of sets than 2^c");
        state.counts.assert_partition_identities();
    }
    return state.counts;
}

namespace {

constexpr double kLogTolerance = 1e-6;

double count_log2(uint64_t count) {
    return count == 0 ? -std::numeric_limits<double>::infinity() : std::log2(double(count));
}

BoundRecord make_record(const std::string& id, uint64_t count, double rhs, int c_r, bool applicable,
                        const std::string& note) {
    BoundRecord rec;
    rec.bound_id = id;
    rec.lhs_log2 = count_log2(count);
    rec.rhs_exponent = rhs;
    rec.slack = rhs - rec.lhs_log2;
    rec.vacuous = rhs >= double(c_r);
    rec.applicable = applicable;
    rec.holds = !applicable || rec.lhs_log2 <= rhs + kLogTolerance;
    rec.note = note;
    return rec;
}

}  // namespace

bool BoundReport::all_applicable_hold() const {
    for (const auto& r : records)
        if (r.applicable && !r.holds) return false;
    return true;
}

BoundReport check_bounds(const CensusContext& ctx, const StratumCounts& counts) {
    double r = double(ctx.group->n);
    double nn = double(ctx.n_carrier.count());
    double c = double(ctx.c_r);
    double lr = std::log2(r), ln = std::log2(nn);
    bool incl = !ctx.r_excluded_family;
    const std::string excl_note = incl ? "" : "excluded family: R abelian exp>2 or generalised dicyclic";

    BoundReport rep;
    double main1_rhs = c - nn / 96.0 + 2.0 * lr + lr * lr + 3.0;
    rep.records.push_back(make_record("s_N_bound_gated", counts.s_n - counts.s_n1, main1_rhs,
                                      ctx.c_r, true, "lhs = |S_N| under R = N_Aut(R)"));
    rep.records.push_back(make_record("s_N_bound", counts.s_n, main1_rhs, ctx.c_r, incl,
                                      incl ? "lhs = |S_N|" : excl_note));

    double main2_rhs = c - r / (192.0 * nn) + lr * lr + 3.0;
    rep.records.push_back(make_record("orbit_fixing_bound_gated", counts.fixes_orbits_gated_count, main2_rhs,
                                      ctx.c_r, true, "lhs = orbit-fixing sets under R = N_Aut(R)"));
    rep.records.push_back(make_record("orbit_fixing_bound", counts.fixes_orbits_count, main2_rhs,
                                      ctx.c_r, incl, incl ? "lhs = orbit-fixing sets" : excl_note));

    double cor_rhs = c - std::sqrt(r) / 192.0 + 2.0 * lr + lr * lr + 3.0;
    rep.records.push_back(make_record("orbit_fixing_sqrt_bound_gated", counts.fixes_orbits_gated_count, cor_rhs,
                                      ctx.c_r, true, "lhs = orbit-fixing sets under R = N_Aut(R)"));
    rep.records.push_back(make_record("orbit_fixing_sqrt_bound", counts.fixes_orbits_count, cor_rhs, ctx.c_r,
                                      incl, incl ? "lhs = orbit-fixing sets" : excl_note));

    rep.records.push_back(make_record("t_N1_bound", counts.t_n1,
                                      c - nn / 2.0 + 2.0 * lr - ln + ln * ln + 2.0, ctx.c_r, incl,
                                      excl_note));
    rep.records.push_back(make_record("t_N2_bound", counts.t_n2, c - nn / 96.0 + ln * ln, ctx.c_r,
                                      incl, excl_note));
    rep.records.push_back(make_record("t_N3_bound", counts.t_n3, c - nn / 8.0 + lr + ln * ln,
                                      ctx.c_r, incl, excl_note));
    rep.records.push_back(make_record("t_N4_bound", counts.t_n4, c - nn / 24.0 + lr + 2.0, ctx.c_r,
                                      incl, excl_note));
    rep.records.push_back(make_record("group_aut_bound", counts.n_aut_bigger_count,
                                      c - r / 96.0 + lr * lr, ctx.c_r, incl,
                                      incl ? "lhs = |{S : R < N_Aut(R)}|" : excl_note));
    return rep;
}

std::vector<DensityRow> grr_density_report(const std::vector<FiniteGroup>& groups, int max_c) {
    std::vector<DensityRow> rows;
    for (const auto& g : groups) {
        ConnectionSetEnumerator en(g, max_c);
        DensityRow row;
        row.label = g.label;
        row.order = g.n;
        row.total_sets = en.count();
        for (uint64_t idx = 0; idx < en.count(); ++idx)
            if (is_grr(g, en.decode(idx))) ++row.grr_count;
        row.density = row.total_sets ? double(row.grr_count) / double(row.total_sets) : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

json census_report_json(const CensusContext& ctx, const StratumCounts& counts,
                        const BoundReport& report, uint64_t seed) {
    json j;
    j["group"] = ctx.group->label;
    j["order"] = ctx.group->n;
    j["normal_subgroup"] = ctx.n_carrier.to_list();
    j["c_value"] = ctx.c_r;
    j["seed"] = seed;
    j["counts"] = counts_to_json(counts);
    json bounds = json::array();
    for (const auto& rec : report.records) {
        json b;
        b["bound_id"] = rec.bound_id;
        if (std::isinf(rec.lhs_log2)) {
            b["lhs_log2"] = nullptr;  // count zero: -inf
            b["slack"] = nullptr;
        } else {
            b["lhs_log2"] = rec.lhs_log2;
            b["slack"] = rec.slack;
        }
        b["rhs_exponent"] = rec.rhs_exponent;
        b["holds"] = rec.holds;
        b["vacuous"] = rec.vacuous;
        b["applicable"] = rec.applicable;
        if (!rec.note.empty()) b["note"] = rec.note;
        bounds.push_back(std::move(b));
    }
    j["bounds"] = std::move(bounds);
    json witnesses = json::object();
    ConnectionSetEnumerator en(*ctx.group, 62);
    for (const auto& [stratum, indices] : counts.witness_indices) {
        json arr = json::array();
        for (uint64_t idx : indices) arr.push_back(en.decode(idx).to_hex());
        witnesses[stratum] = std::move(arr);
    }
    j["witnesses"] = std::move(witnesses);
    return j;
}

std::string census_report_csv(const CensusContext& ctx, const StratumCounts& counts,
                              const BoundReport& report, bool with_header) {
    std::ostringstream out;
    if (with_header)
        out << "group,order,normal_subgroup,c_value,bound_id,lhs_log2,rhs_exponent,slack,holds,"
               "vacuous,applicable\n";
    std::string carrier;
    for (int e : ctx.n_carrier.to_list()) {
        if (!carrier.empty()) carrier += ';';
        carrier += std::to_string(e);
    }
    (void)counts;
    for (const auto& rec : report.records) {
        out << ctx.group->label << ',' << ctx.group->n << ',' << carrier << ',' << ctx.c_r << ','
            << rec.bound_id << ',';
        if (std::isinf(rec.lhs_log2))
            out << "-inf,";
        else
            out << rec.lhs_log2 << ',';
        out << rec.rhs_exponent << ',';
        if (std::isinf(rec.lhs_log2))
            out << "inf,";
        else
            out << rec.slack << ',';
        out << (rec.holds ? "true" : "false") << ',' << (rec.vacuous ? "true" : "false") << ','
            << (rec.applicable ? "true" : "false") << '\n';
    }
    return out.str();
}

}  // namespace grr
