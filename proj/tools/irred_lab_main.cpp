// irred-lab: command-line front end for the irredundant-base toolkit.
//
//   irred-lab verify --example pif --params p=2 --params f=4
//   irred-lab stats  --family A --n 2 --q 16 --projective --extend-semilinear --stat irred
//   irred-lab bound  --family E8 --rank 8 --which leng
//
// Exit code 0 iff every assertion of the invoked command passes.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"

#include "irredlab/chainstats.hpp"
#include "irredlab/liebounds.hpp"
#include "irredlab/verify.hpp"

using namespace irredlab;
using nlohmann::json;

namespace {

std::map<std::string, std::string> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, std::string> out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw Error("bad --params entry (want key=value): " + kv);
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

uint64_t param_u64(const std::map<std::string, std::string>& m, const std::string& k,
                   uint64_t dflt) {
    auto it = m.find(k);
    return it == m.end() ? dflt : std::stoull(it->second);
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

int cmd_verify(const std::string& example, const std::vector<std::string>& kvs, uint64_t budget,
               bool stretch, uint64_t seed, const std::string& json_path) {
    auto params = parse_params(kvs);
    verify::Budget b;
    b.stretch = stretch;
    b.seed = seed;
    if (budget) b.limits.node_cap = budget;

    std::vector<verify::Experiment> results;
    if (example == "all") {
        results = verify::run_registry(b);
    } else if (example == "pif") {
        results.push_back(
            verify::run_pif(param_u64(params, "p", 2), unsigned(param_u64(params, "f", 4)), b));
    } else if (example == "hyperplane") {
        unsigned c = unsigned(param_u64(params, "c", 3));
        bool exhaustive = param_u64(params, "exhaustive", c <= 3 ? 1 : 0) != 0;
        bool sweep = param_u64(params, "sweep", 0) != 0;
        results.push_back(verify::run_hyperplane(c, exhaustive, b, sweep));
    } else if (example == "decomp") {
        results.push_back(verify::run_decompositions(unsigned(param_u64(params, "n", 3)),
                                                     param_u64(params, "q", 5), b));
    } else if (example == "singer") {
        results.push_back(verify::run_singer(unsigned(param_u64(params, "r", 3)), b));
    } else if (example == "subfield") {
        results.push_back(verify::run_subfield_lemma(param_u64(params, "q0", 4),
                                                     unsigned(param_u64(params, "e", 2)),
                                                     unsigned(param_u64(params, "samples", 100)),
                                                     b));
    } else if (example == "gammaL") {
        results.push_back(verify::run_gammal_partial(unsigned(param_u64(params, "f1", 2)),
                                                     unsigned(param_u64(params, "f2", 3)), b));
    } else {
        throw Error("unknown example: " + example);
    }

    bool all_pass = true;
    json out = json::array();
    for (const auto& e : results) {
        out.push_back(json::parse(e.to_json()));
        std::string line = e.name;
        for (auto& [k, v] : e.params) line += " " + k + "=" + v;
        std::cout << line << ": " << e.status << " (" << e.ms << " ms)\n";
        for (const auto& c : e.checks) {
            const char* mark = c.pass ? "ok  " : (c.actual == "skipped" ? "skip" : "FAIL");
            std::cout << "  " << mark << (c.gating ? " " : "~") << c.label << " ["
                      << c.provenance << "] expected=" << c.expected << " actual=" << c.actual
                      << "\n";
        }
        if (e.status == "fail") all_pass = false;
    }
    if (!json_path.empty()) write_json(json_path, out);
    return all_pass ? 0 : 1;
}

int cmd_stats(const std::string& family, unsigned n, uint64_t q, bool projective,
              bool semilinear, const std::string& action, const std::string& stat,
              uint64_t budget, const std::string& json_path, const std::string& dump_path,
              const std::string& cache_dir) {
    if (family != "A") throw Error("stats: only the linear family (A) is constructible");
    auto fac = ffield::factorize(q);
    if (fac.size() != 1) throw Error("stats: q must be a prime power");
    auto fld = ffield::Field::make(fac[0].first, fac[0].second);

    // group, via the on-disk cache when a directory is given
    std::string key = std::string(semilinear ? "Gamma" : "") + (projective ? "P" : "") + "GL_" +
                      std::to_string(n) + "_" + std::to_string(q);
    grp::GroupPtr g;
    std::string cache_file;
    if (!cache_dir.empty()) {
        cache_file = cache_dir + "/" + key + ".grp";
        if (std::filesystem::exists(cache_file)) g = grp::Group::load(cache_file, fld);
    }
    if (!g) {
        g = grp::general_linear(n, fld);
        if (semilinear) g = grp::semilinear_extension(g);
        if (projective) g = grp::projective_quotient(g);
        if (!cache_file.empty()) {
            std::filesystem::create_directories(cache_dir);
            g->save(cache_file);
        }
    }

    gaction::ActionPtr act;
    if (action == "p1")
        act = gaction::Action::projective_line(g);
    else if (action == "decomp")
        act = gaction::Action::decomposition_action(g);
    else
        throw Error("stats: unknown action " + action);
    if (!dump_path.empty()) {
        std::ofstream out(dump_path);
        out << act->to_json() << "\n";
    }

    chainstats::SearchLimits lim;
    if (budget) lim.node_cap = budget;
    json out;
    out["group"] = g->name();
    out["action"] = act->name();
    out["omega"] = act->size();
    json reports = json::array();
    auto run_one = [&](const std::string& s) {
        chainstats::ChainReport r;
        if (s == "base")
            r = chainstats::base_min(*act, lim);
        else if (s == "Base")
            r = chainstats::base_max_minimal(*act, lim);
        else if (s == "height")
            r = chainstats::height_max(*act, lim);
        else if (s == "irred")
            r = chainstats::irred_max(*act, lim);
        else
            throw Error("stats: unknown statistic " + s);
        reports.push_back(json::parse(r.to_json(*act)));
        std::cout << chainstats::stat_name(r.stat) << "(" << g->name() << ", " << act->name()
                  << ") = " << r.value << (r.exact ? "" : " (lower bound, budget hit)") << "  ["
                  << r.nodes << " nodes, " << r.ms << " ms]\n";
        return r;
    };
    bool ok = true;
    if (stat == "all") {
        auto b = run_one("base");
        auto bb = run_one("Base");
        auto h = run_one("height");
        auto i = run_one("irred");
        auto ineq = chainstats::check_inequalities(b.value, bb.value, h.value, i.value);
        out["rc_bound"] = ineq.rc_bound;
        ok = ineq.ok && b.exact && bb.exact && h.exact && i.exact;
        std::cout << "chain: " << b.value << " <= " << bb.value << " <= " << h.value
                  << " <= " << i.value << (ineq.ok ? " (ordered)" : " (VIOLATED)")
                  << ", RC bound " << ineq.rc_bound << "\n";
    } else {
        ok = run_one(stat).exact;
    }
    out["reports"] = reports;
    if (!json_path.empty()) write_json(json_path, out);
    return ok ? 0 : 1;
}

int cmd_bound(const std::string& family, unsigned rank, const std::string& which, uint64_t f,
              unsigned n, uint64_t q, const std::string& json_path) {
    using namespace liebounds;
    json out;
    out["bound_name"] = which;
    bool valid = true;
    if (which == "leng") {
        auto datum = lie_data(family_from_string(family), rank);
        auto c = weyl_degree_bound(datum);
        auto b = leng_bound(datum.d, c);
        out["family"] = family;
        out["rank"] = rank;
        out["d"] = datum.d;
        out["weyl_order"] = datum.weyl_order.get_str();
        out["log2_c"] = log2_upper(c.exact);
        out["exact"] = b.exact.get_str();
        out["approx"] = b.approx;
        std::cout << "leng bound for " << family << " (rank " << rank << "): "
                  << b.exact.get_str() << " (approx " << b.approx << ")\n";
    } else if (which == "theorem") {
        auto t = theorem_bound(rank);
        out["rank"] = rank;
        out["raw"] = t.raw.exact.get_str();
        out["cr8"] = t.cr8.exact.get_str();
        valid = t.raw.exact <= t.cr8.exact;
        std::cout << "raw(" << rank << ") = " << t.raw.exact.get_str()
                  << " <= 174 r^8 = " << t.cr8.exact.get_str() << "\n";
    } else if (which == "cor") {
        auto cb = cor_bounds(rank, f);
        out["rank"] = rank;
        out["f"] = f;
        out["simple"] = cb.simple.exact.get_str();
        out["almost_simple"] = cb.almost_simple.exact.get_str();
        out["pi"] = cb.pi;
        out["pi_d"] = cb.pi_d;
        std::cout << "simple: " << cb.simple.exact.get_str()
                  << ", almost simple: " << cb.almost_simple.exact.get_str() << " (pi(f)="
                  << cb.pi << ", pi_d(f)=" << cb.pi_d << ")\n";
    } else if (which == "parabolic") {
        auto b = parabolic_bound(n);
        out["n"] = n;
        out["exact"] = b.exact.get_str();
        out["approx"] = b.approx;
        std::cout << "parabolic bound for n=" << n << ": " << b.exact.get_str() << " (approx "
                  << b.approx << ")\n";
    } else if (which == "heuristic") {
        auto h = length_heuristic(family_from_string(family), rank, q);
        out["family"] = family;
        out["rank"] = rank;
        out["q"] = q;
        out["phi_log"] = h.phi_log;
        out["log2_order"] = h.log2_order;
        out["ratio"] = h.ratio;
        valid = h.phi_log < h.log2_order;
        std::cout << "|Phi+| log_p q = " << h.phi_log << " < log2|G| = " << h.log2_order
                  << " (ratio |Phi+|/r^2 = " << h.ratio << ")\n";
    } else {
        throw Error("unknown bound: " + which);
    }
    out["valid"] = valid;
    if (!json_path.empty()) write_json(json_path, out);
    return valid ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"irredundant-base statistics for finite linear group actions"};
    app.require_subcommand(1);

    auto* v = app.add_subcommand("verify", "run a registered experiment and check its claims");
    std::string example = "all";
    std::vector<std::string> kvs;
    uint64_t budget = 0, seed = 0x5eed1ab5;
    bool stretch = false;
    std::string vjson;
    v->add_option("--example", example, "pif|hyperplane|decomp|singer|subfield|gammaL|all");
    v->add_option("--params", kvs, "experiment parameters as key=value (repeatable)");
    v->add_option("--budget", budget, "search node cap");
    v->add_flag("--stretch", stretch, "also run the large flagged instances");
    v->add_option("--seed", seed, "seed for randomized checks");
    v->add_option("--json", vjson, "write the experiment reports to a JSON file");

    auto* s = app.add_subcommand("stats", "compute base/Base/Height/Irred for an action");
    std::string family = "A", action = "p1", stat = "all", sjson, dump, cache_dir;
    unsigned sn = 2;
    uint64_t sq = 4, sbudget = 0;
    bool projective = false, semilinear = false;
    s->add_option("--family", family, "group family (A)");
    s->add_option("--n", sn, "dimension");
    s->add_option("--q", sq, "field size (prime power)");
    s->add_flag("--projective", projective, "quotient by scalars");
    s->add_flag("--extend-semilinear", semilinear, "extend by the field automorphisms");
    s->add_option("--action", action, "p1|decomp");
    s->add_option("--stat", stat, "base|Base|height|irred|all");
    s->add_option("--budget", sbudget, "search node cap");
    s->add_option("--json", sjson, "write reports to a JSON file");
    s->add_option("--dump-action", dump, "write the action point table to a JSON file");
    s->add_option("--cache-dir", cache_dir, "directory for the enumerated-group cache");

    auto* bd = app.add_subcommand("bound", "evaluate a closed-form bound exactly");
    std::string bfamily = "A", which = "theorem", bjson;
    unsigned brank = 1, bn = 2;
    uint64_t bf = 1, bq = 4;
    bd->add_option("--family", bfamily, "A|B|C|D|G2|F4|E6|E7|E8");
    bd->add_option("--rank", brank, "rank r");
    bd->add_option("--which", which, "leng|theorem|cor|parabolic|heuristic");
    bd->add_option("--f", bf, "field exponent f (for cor)");
    bd->add_option("--n", bn, "dimension n (for parabolic)");
    bd->add_option("--q", bq, "field size (for heuristic)");
    bd->add_option("--json", bjson, "write the bound report to a JSON file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (v->parsed()) return cmd_verify(example, kvs, budget, stretch, seed, vjson);
        if (s->parsed())
            return cmd_stats(family, sn, sq, projective, semilinear, action, stat, sbudget, sjson,
                             dump, cache_dir);
        if (bd->parsed()) return cmd_bound(bfamily, brank, which, bf, bn, bq, bjson);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
