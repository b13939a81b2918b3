#include "grr/catalog.hpp"
#include "grr/census.hpp"
#include "grr/graph_aut.hpp"
#include "grr/group_spec.hpp"
#include "grr/sweeps.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using grr::Bitset;
using grr::FiniteGroup;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

int env_max_c(int fallback) {
    if (const char* v = std::getenv("GRR_CENSUS_BUDGET_C")) {
        try {
            return std::stoi(v);
        } catch (...) {
            throw std::invalid_argument("GRR_CENSUS_BUDGET_C is not a number");
        }
    }
    return fallback;
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << data;
}

Bitset parse_set_argument(const FiniteGroup& g, const std::string& text) {
    if (text.rfind("0x", 0) == 0) return Bitset::from_hex(g.n, text.substr(2));
    Bitset s(g.n);
    if (text.empty()) return s;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        int e = std::stoi(tok);
        if (e < 0 || e >= g.n) throw std::invalid_argument("element index out of range: " + tok);
        s.set(e);
        pos = comma == std::string::npos ? text.size() : comma + 1;
    }
    return s;
}

int cmd_group_info(const std::string& spec) {
    FiniteGroup g = grr::parse_group_spec(spec);
    json j;
    j["label"] = g.label;
    j["order"] = g.n;
    j["abelian"] = g.is_abelian();
    j["exponent"] = g.exponent();
    j["involution_count"] = grr::involution_part(g, grr::full_set(g.n)).count();
    j["c_value"] = grr::c_value(g, grr::full_set(g.n));
    j["abelian_exp_gt2"] = grr::is_abelian_exp_gt2(g);
    auto decomps = grr::generalized_dicyclic_decompositions(g);
    j["generalized_dicyclic"] = !decomps.empty();
    json dd = json::array();
    for (const auto& d : decomps) {
        json e;
        e["A"] = d.a_carrier.to_list();
        e["y"] = d.y;
        e["x"] = d.x;
        dd.push_back(e);
    }
    j["dicyclic_decompositions"] = dd;
    json ns = json::array();
    for (const auto& h : grr::normal_subgroups(g)) ns.push_back(h.to_list());
    j["normal_subgroups"] = ns;
    try {
        j["automorphism_group_order"] = grr::automorphism_group(g).size();
    } catch (const grr::budget_error&) {
        j["automorphism_group_order"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_grr_check(const std::string& spec, const std::string& set_text) {
    FiniteGroup g = grr::parse_group_spec(spec);
    Bitset s = parse_set_argument(g, set_text);
    if (!grr::is_inverse_closed(g, s)) {
        std::cerr << "error: connection set is not inverse-closed\n";
        return kExitUsage;
    }
    bool grr_flag = grr::is_grr(g, s);
    json j;
    j["group"] = g.label;
    j["set"] = s.to_list();
    j["set_hex"] = s.to_hex();
    j["identity_loop_dropped"] = s.test(0);
    j["is_grr"] = grr_flag;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_census(const std::string& spec, const std::string& normal_sel, int jobs,
               const std::string& checkpoint, const std::string& out_path,
               const std::string& format, int max_c, int max_order, uint64_t seed) {
    FiniteGroup g = grr::parse_group_spec(spec);
    std::vector<Bitset> targets;
    if (normal_sel == "all") {
        for (const auto& h : grr::normal_subgroups(g, max_order))
            if (h.count() > 1 && h.count() < g.n) targets.push_back(h);
    } else if (normal_sel.rfind("idx:", 0) == 0) {
        auto all = grr::normal_subgroups(g, max_order);
        size_t k = std::stoul(normal_sel.substr(4));
        if (k >= all.size()) throw std::invalid_argument("normal subgroup index out of range");
        targets.push_back(all[k]);
    } else if (normal_sel.rfind("gens:", 0) == 0) {
        Bitset seed_set = parse_set_argument(g, normal_sel.substr(5));
        Bitset h = grr::subgroup_closure(g, seed_set);
        if (!grr::is_normal_subgroup(g, h))
            throw std::invalid_argument("generated subgroup is not normal");
        targets.push_back(h);
    } else {
        throw std::invalid_argument("--normal expects all, idx:<k> or gens:<elements>");
    }
    if (targets.empty()) throw std::invalid_argument("no non-identity proper normal subgroup");

    bool violation = false;
    json reports = json::array();
    std::string csv;
    bool first = true;
    for (const auto& n : targets) {
        grr::CensusContext ctx = grr::make_census_context(g, n);
        grr::CensusOptions opts;
        opts.worker_count = jobs;
        opts.checkpoint_path = targets.size() == 1 ? checkpoint : std::string();
        opts.max_c = max_c;
        opts.max_order = max_order;
        opts.seed = seed;
        grr::StratumCounts counts = grr::run_census(ctx, opts);
        grr::BoundReport bounds = grr::check_bounds(ctx, counts);
        if (!bounds.all_applicable_hold()) violation = true;
        reports.push_back(grr::census_report_json(ctx, counts, bounds, seed));
        csv += grr::census_report_csv(ctx, counts, bounds, first);
        first = false;
    }
    if (format == "csv") {
        write_output(out_path, csv);
    } else {
        json doc;
        // header-only field; determinism comparisons drop it
        char stamp[32] = {0};
        std::time_t now = std::time(nullptr);
        std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        doc["generated_at"] = stamp;
        doc["reports"] = reports;
        write_output(out_path, doc.dump(2) + "\n");
    }
    return violation ? kExitViolation : kExitOk;
}

int cmd_verify_lemma(const std::string& lemma, int max_order, uint64_t seed, int trials,
                     const std::string& out_path) {
    grr::SweepResult result;
    if (lemma == "icecream") {
        result = grr::sweep_icecream(max_order);
    } else if (lemma == "gelato") {
        result = grr::sweep_gelato(max_order);
    } else if (lemma == "aux1") {
        result = grr::sweep_aux1(max_order);
    } else if (lemma == "aux2") {
        result = grr::sweep_aux2(max_order);
    } else if (lemma == "aux3") {
        result = grr::sweep_aux3(max_order);
    } else if (lemma == "trichotomy") {
        result = grr::sweep_trichotomy(seed, trials);
    } else if (lemma == "sigma") {
        result = grr::sweep_sigma(seed, trials);
    } else if (lemma == "psi") {
        result = grr::sweep_psi(std::min(max_order, 12));
    } else {
        throw std::invalid_argument("unknown lemma: " + lemma);
    }
    write_output(out_path, grr::sweep_csv(result, seed));
    std::cerr << lemma << ": " << result.instances << " instances, " << result.violations
              << " violations\n";
    return result.violations ? kExitViolation : kExitOk;
}

int cmd_density(const std::string& orders, const std::string& out_path, int max_c) {
    int lo = 0, hi = 0;
    size_t dots = orders.find("..");
    if (dots == std::string::npos) {
        lo = hi = std::stoi(orders);
    } else {
        lo = std::stoi(orders.substr(0, dots));
        hi = std::stoi(orders.substr(dots + 2));
    }
    if (lo < 1 || hi < lo) throw std::invalid_argument("--orders expects a..b with 1 <= a <= b");
    std::vector<FiniteGroup> groups;
    for (auto& g : grr::catalog_groups(hi))
        if (g.n >= lo) groups.push_back(std::move(g));
    auto rows = grr::grr_density_report(groups, max_c);
    std::ostringstream csv;
    csv << "group,order,total_sets,grr_count,density\n";
    for (const auto& r : rows)
        csv << r.label << ',' << r.order << ',' << r.total_sets << ',' << r.grr_count << ','
            << r.density << '\n';
    write_output(out_path, csv.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cayley graph census and counting-lemma verifier"};
    app.require_subcommand(1);

    std::string spec, set_text, normal_sel = "all", checkpoint, out_path, format = "json";
    std::string lemma, orders;
    int jobs = 1, max_order = 64, trials = 1000;
    int max_c_flag = 30;
    uint64_t seed = 0;

    auto* info = app.add_subcommand("group-info", "construct a group and print its structure");
    info->add_option("spec", spec, "group spec, e.g. C6, D4, Q8xC2, Dic(C6)")->required();

    auto* check = app.add_subcommand("grr-check", "test whether Gamma(G,S) is a GRR");
    check->add_option("spec", spec)->required();
    check->add_option("--set", set_text, "0x<hex bit vector> or comma-separated element indices")
        ->required();

    auto* census = app.add_subcommand("census", "classify every inverse-closed set into the strata");
    census->add_option("spec", spec)->required();
    census->add_option("--normal", normal_sel, "all | idx:<k> | gens:<elements>");
    census->add_option("--jobs", jobs, "worker count")->check(CLI::PositiveNumber);
    census->add_option("--checkpoint", checkpoint, "checkpoint file (single-N runs)");
    census->add_option("--out", out_path, "output path, - for stdout");
    census->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    census->add_option("--max-c", max_c_flag, "budget on c(R)");
    census->add_option("--max-order", max_order, "budget on |R|");
    census->add_option("--seed", seed, "recorded in the report");

    auto* verify = app.add_subcommand("verify-lemma", "exhaustive or randomized lemma sweeps");
    verify->add_option("lemma", lemma, "icecream|gelato|aux1|aux2|aux3|trichotomy|sigma|psi")
        ->required();
    verify->add_option("--max-order", max_order, "catalog order cap for exhaustive sweeps");
    verify->add_option("--seed", seed, "seed for randomized sweeps");
    verify->add_option("--trials", trials, "trial count for randomized sweeps");
    verify->add_option("--out", out_path, "CSV output path, - for stdout");

    auto* density = app.add_subcommand("density-report", "GRR densities over the catalog");
    density->add_option("--orders", orders, "order range a..b")->required();
    density->add_option("--out", out_path, "CSV output path, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        int max_c = env_max_c(max_c_flag);
        if (info->parsed()) return cmd_group_info(spec);
        if (check->parsed()) return cmd_grr_check(spec, set_text);
        if (census->parsed())
            return cmd_census(spec, normal_sel, jobs, checkpoint, out_path, format, max_c,
                              max_order, seed);
        if (verify->parsed()) {
            if (verify->count("--max-order") == 0) max_order = 16;
            return cmd_verify_lemma(lemma, max_order, seed, trials, out_path);
        }
        if (density->parsed()) return cmd_density(orders, out_path, max_c);
    } catch (const grr::budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
