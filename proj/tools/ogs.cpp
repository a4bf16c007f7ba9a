// Command line front end: multiplicities, Hilbert functions and lattice
// path tuples for Schubert varieties in orthogonal Grassmannians, plus the
// randomized verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "ogs/counting.hpp"
#include "ogs/errors.hpp"
#include "ogs/json_io.hpp"
#include "ogs/pi_phi.hpp"
#include "ogs/standard_monomials.hpp"

using json = nlohmann::json;
using namespace ogs;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitGuardrail = 3;
constexpr int kExitProperty = 4;
constexpr int kExitDisagreement = 5;

std::vector<int> parse_entries(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw validation_error("malformed entry list \"" + text + "\"");
        }
    }
    return out;
}

struct InstanceArgs {
    int d = 0;
    std::string v_text, w_text, instance_file;

    Instance resolve() const {
        if (!instance_file.empty()) {
            std::ifstream in(instance_file);
            if (!in) throw validation_error("cannot open instance file " + instance_file);
            json j;
            try {
                in >> j;
            } catch (const json::exception& e) {
                throw validation_error(std::string("malformed instance JSON: ") + e.what());
            }
            return instance_from_json(j);
        }
        if (d == 0 || v_text.empty() || w_text.empty())
            throw validation_error("provide -d, -v and -w, or an instance file");
        IdElement v = validate(d, parse_entries(v_text), true);
        IdElement w = validate(d, parse_entries(w_text), true);
        return Instance{std::move(v), std::move(w)};
    }
};

void add_instance_flags(CLI::App* cmd, InstanceArgs& args) {
    cmd->add_option("-d", args.d, "rank d (the ambient dimension is 2d)");
    cmd->add_option("-v", args.v_text, "base element, comma separated entries");
    cmd->add_option("-w", args.w_text, "Schubert element, comma separated entries");
    cmd->add_option("--instance", args.instance_file, "JSON file {\"d\":..,\"v\":[..],\"w\":[..]}");
}

const char* method_name(MultMethod m) {
    switch (m) {
        case MultMethod::paths: return "paths";
        case MultMethod::monomials: return "monomials";
        case MultMethod::oracle: return "oracle";
    }
    return "?";
}

int run_mult(const InstanceArgs& inst, const std::string& method, bool check,
             const CountOptions& opts, const std::string& format) {
    Instance in = inst.resolve();
    if (!leq(in.v, in.w)) throw validation_error("v must be <= w componentwise");
    RootRegions rr(in.v);
    if (check) {
        BigUint paths = multiplicity(rr, in.w, MultMethod::paths, opts);
        BigUint monomials = multiplicity(rr, in.w, MultMethod::monomials, opts);
        BigUint oracle = multiplicity(rr, in.w, MultMethod::oracle, opts);
        if (format == "json") {
            std::cout << json{{"multiplicity", paths.to_string()},
                              {"methods",
                               {{"paths", paths.to_string()},
                                {"monomials", monomials.to_string()},
                                {"oracle", oracle.to_string()}}}}
                             .dump()
                      << "\n";
        } else {
            std::cout << "paths     = " << paths.to_string() << "\n";
            std::cout << "monomials = " << monomials.to_string() << "\n";
            std::cout << "oracle    = " << oracle.to_string() << "\n";
        }
        if (paths != monomials || monomials != oracle) {
            std::cerr << "error: the three methods disagree\n";
            return kExitDisagreement;
        }
        if (format != "json")
            std::cout << "multiplicity = " << paths.to_string() << " (all methods agree)\n";
        return kExitOk;
    }
    BigUint value = multiplicity(rr, in.w, parse_mult_method(method), opts);
    if (format == "json") {
        std::cout << json{{"multiplicity", value.to_string()}, {"method", method}}.dump() << "\n";
    } else {
        std::cout << "multiplicity = " << value.to_string() << " (" << method << ")\n";
    }
    return kExitOk;
}

int run_hilbert(const InstanceArgs& inst, int max_degree, bool cross_count,
                const CountOptions& opts, const std::string& format) {
    Instance in = inst.resolve();
    if (!leq(in.v, in.w)) throw validation_error("v must be <= w componentwise");
    RootRegions rr(in.v);
    std::vector<BigUint> values = hilbert_series_prefix(rr, in.w, max_degree, opts);
    if (format == "json") {
        json arr = json::array();
        for (const BigUint& h : values) arr.push_back(h.to_string());
        std::cout << json{{"hilbert", arr}}.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "m,hilbert\n";
        for (int m = 0; m <= max_degree; ++m)
            std::cout << m << "," << values[m].to_string() << "\n";
    } else {
        for (int m = 0; m <= max_degree; ++m)
            std::cout << "H(" << m << ") = " << values[m].to_string() << "\n";
    }
    if (cross_count) {
        for (int m = 0; m <= max_degree; ++m) {
            BigUint sm_count(enumerate_sm(rr, in.w, m).size());
            if (sm_count != values[m]) {
                std::cerr << "error: standard monomial count " << sm_count.to_string()
                          << " differs from H(" << m << ") = " << values[m].to_string() << "\n";
                return kExitDisagreement;
            }
        }
        std::cout << "standard monomial cross-count agrees up to degree " << max_degree << "\n";
    }
    return kExitOk;
}

int run_paths(const InstanceArgs& inst, bool count_only, const std::string& validate_file,
              const CountOptions& opts) {
    Instance in = inst.resolve();
    if (!leq(in.v, in.w)) throw validation_error("v must be <= w componentwise");
    RootRegions rr(in.v);
    if (!validate_file.empty()) {
        std::ifstream f(validate_file);
        if (!f) throw validation_error("cannot open " + validate_file);
        json j;
        try {
            f >> j;
        } catch (const json::exception& e) {
            throw validation_error(std::string("malformed path tuple JSON: ") + e.what());
        }
        auto verdict = validate_path_tuple(rr, in.w, path_tuple_from_json(j));
        if (verdict) {
            std::cout << json{{"valid", false}, {"violation", *verdict}}.dump() << "\n";
            return kExitProperty;
        }
        std::cout << json{{"valid", true}}.dump() << "\n";
        return kExitOk;
    }
    if (count_only) {
        std::cout << json{{"count", count_path_tuples(rr, in.w, opts).to_string()}}.dump() << "\n";
        return kExitOk;
    }
    std::uint64_t emitted = 0;
    for_each_path_tuple(rr, in.w, opts, [&](const PathTuple& tuple) {
        std::cout << path_tuple_to_json(tuple).dump() << "\n";
        ++emitted;
    });
    std::cout << json{{"count", std::to_string(emitted)}}.dump() << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------
// verify: the randomized property suites, reproducible from the seed

struct VerifyContext {
    std::mt19937_64 rng;
    int samples;
    int d_max;
    bool failed = false;

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    IdElement random_v(int d) {
        std::vector<IdElement> all = enumerate_I_d(d);
        return all[pick(0, static_cast<int>(all.size()) - 1)];
    }

    IdElement random_w_above(const IdElement& v) {
        std::vector<IdElement> above;
        for (const IdElement& x : enumerate_I_d(v.d()))
            if (leq(v, x)) above.push_back(x);
        return above[pick(0, static_cast<int>(above.size()) - 1)];
    }

    Monomial random_on_monomial(const RootRegions& rr, int max_degree, bool allow_empty) {
        Monomial out(Region::ON);
        if (rr.on_roots().empty()) return out;
        for (;;) {
            int degree = pick(allow_empty ? 0 : 1, max_degree);
            for (int i = 0; i < degree; ++i)
                out.add(rr.on_roots()[pick(0, static_cast<int>(rr.on_roots().size()) - 1)]);
            if (allow_empty || !out.empty()) return out;
        }
    }
};

// greedy shrink: drop copies while the predicate keeps failing
Monomial shrink_counterexample(const Monomial& start,
                               const std::function<bool(const Monomial&)>& still_fails) {
    Monomial current = start;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [root, mult] : current.items()) {
            Monomial smaller = current;
            smaller.remove_one(root);
            if (still_fails(smaller)) {
                current = smaller;
                changed = true;
                break;
            }
        }
    }
    return current;
}

void report(VerifyContext& ctx, const std::string& name, bool ok, const std::string& detail) {
    if (ok) {
        std::cout << "ok   " << name << "\n";
    } else {
        ctx.failed = true;
        std::cout << "FAIL " << name << ": " << detail << "\n";
    }
}

void suite_inverse_maps(VerifyContext& ctx) {
    for (int trial = 0; trial < ctx.samples; ++trial) {
        int d = ctx.pick(2, ctx.d_max);
        IdElement v = ctx.random_v(d);
        RootRegions rr(v);
        if (rr.on_roots().empty()) continue;
        Monomial s = ctx.random_on_monomial(rr, 8, false);
        auto fails = [&](const Monomial& m) {
            if (m.empty()) return false;
            try {
                OrthoPiResult pi = ortho_pi(rr, m);
                return ortho_phi(rr, pi.w, pi.sprime) != m;
            } catch (const std::exception&) {
                return true;
            }
        };
        if (fails(s)) {
            Monomial small = shrink_counterexample(s, fails);
            report(ctx, "inverse-maps", false,
                   "v = " + v.to_string() + ", monomial " + small.to_string());
            return;
        }
    }
    report(ctx, "inverse-maps", true, "");
}

void suite_pi_contracts(VerifyContext& ctx) {
    for (int trial = 0; trial < ctx.samples; ++trial) {
        int d = ctx.pick(2, std::min(ctx.d_max, 5));
        IdElement v = ctx.random_v(d);
        RootRegions rr(v);
        if (rr.on_roots().empty()) continue;
        Monomial s = ctx.random_on_monomial(rr, 7, false);
        auto fails = [&](const Monomial& m) {
            if (m.empty()) return false;
            try {
                OrthoPiResult pi = ortho_pi(rr, m);
                if (!leq(v, pi.w)) return true;
                if (v_degree(pi.w, v) + pi.sprime.degree() != m.degree()) return true;
                if (!o_dominates(rr, pi.w, pi.sprime)) return true;
                return !(pi.w == least_o_dominating_oracle(rr, m));
            } catch (const std::exception&) {
                return true;
            }
        };
        if (fails(s)) {
            Monomial small = shrink_counterexample(s, fails);
            report(ctx, "pi-contracts", false,
                   "v = " + v.to_string() + ", monomial " + small.to_string());
            return;
        }
    }
    report(ctx, "pi-contracts", true, "");
}

void suite_odepth(VerifyContext& ctx) {
    for (int trial = 0; trial < ctx.samples; ++trial) {
        int d = ctx.pick(2, ctx.d_max);
        IdElement v = ctx.random_v(d);
        RootRegions rr(v);
        if (rr.on_roots().empty()) continue;
        Monomial s = ctx.random_on_monomial(rr, 8, true);
        if (s.support_size() > 20) continue;
        if (odepth_table(rr, s).values() != odepth_table_oracle(rr, s).values()) {
            report(ctx, "odepth-recurrence", false,
                   "v = " + v.to_string() + ", monomial " + s.to_string());
            return;
        }
    }
    report(ctx, "odepth-recurrence", true, "");
}

void suite_domination(VerifyContext& ctx) {
    for (int trial = 0; trial < ctx.samples; ++trial) {
        int d = ctx.pick(2, ctx.d_max);
        IdElement v = ctx.random_v(d);
        RootRegions rr(v);
        if (rr.on_roots().empty()) continue;
        Monomial s = ctx.random_on_monomial(rr, 8, true);
        IdElement w = ctx.random_w_above(v);
        if (o_dominates(rr, w, s) != o_dominates_layered(rr, w, s)) {
            report(ctx, "domination-layers", false,
                   "v = " + v.to_string() + ", w = " + w.to_string() + ", monomial " +
                       s.to_string());
            return;
        }
    }
    report(ctx, "domination-layers", true, "");
}

void suite_counts(VerifyContext& ctx) {
    for (int trial = 0; trial < std::max(1, ctx.samples / 20); ++trial) {
        int d = ctx.pick(2, std::min(ctx.d_max, 5));
        IdElement v = ctx.random_v(d);
        RootRegions rr(v);
        IdElement w = ctx.random_w_above(v);
        BigUint paths = multiplicity(rr, w, MultMethod::paths);
        BigUint monomials = multiplicity(rr, w, MultMethod::monomials);
        if (paths != monomials) {
            report(ctx, "multiplicity-methods", false,
                   "v = " + v.to_string() + ", w = " + w.to_string() + ": paths " +
                       paths.to_string() + " vs monomials " + monomials.to_string());
            return;
        }
    }
    report(ctx, "multiplicity-methods", true, "");
}

int run_verify(unsigned long long seed, int samples, int d_max, bool mutate_delta) {
    testing::disable_delta_twist = mutate_delta;
    VerifyContext ctx{std::mt19937_64(seed), samples, d_max};
    std::cout << "verify: seed=" << seed << " samples=" << samples << " d_max=" << d_max << "\n";
    suite_odepth(ctx);
    suite_domination(ctx);
    suite_pi_contracts(ctx);
    suite_inverse_maps(ctx);
    suite_counts(ctx);
    testing::disable_delta_twist = false;
    if (ctx.failed) return kExitProperty;
    std::cout << "all suites passed\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert functions and multiplicities of Schubert varieties in orthogonal "
                 "Grassmannians"};
    app.require_subcommand(1);

    InstanceArgs mult_inst, hilbert_inst, paths_inst;
    CountOptions opts;
    std::string method = "monomials";
    std::string format = "text";
    bool check = false, sm_cross = false, count_only = false;
    int max_degree = 0;
    std::string validate_file;
    unsigned long long seed = 1;
    int samples = 2000, d_max = 5;
    bool mutate_delta = false;

    CLI::App* mult = app.add_subcommand("mult", "multiplicity at the fixed point");
    add_instance_flags(mult, mult_inst);
    mult->add_option("--method", method, "paths, monomials or oracle")->capture_default_str();
    mult->add_flag("--check", check, "run all three methods and compare");
    mult->add_option("--format", format, "text or json")->capture_default_str();
    mult->add_option("--node-budget", opts.node_budget, "backtracking node cap");
    mult->add_option("--workers", opts.workers, "worker threads");
    mult->add_flag("--force", opts.force, "ignore size guardrails");

    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function values");
    add_instance_flags(hilbert, hilbert_inst);
    hilbert->add_option("--max-degree", max_degree, "compute H(0..M)")->capture_default_str();
    hilbert->add_flag("--sm", sm_cross, "cross-count via standard monomials");
    hilbert->add_option("--format", format, "text, csv or json")->capture_default_str();
    hilbert->add_option("--workers", opts.workers, "worker threads");
    hilbert->add_flag("--force", opts.force, "ignore size guardrails");

    CLI::App* paths = app.add_subcommand("paths", "non-intersecting lattice path tuples");
    add_instance_flags(paths, paths_inst);
    paths->add_flag("--count-only", count_only, "suppress tuple bodies");
    paths->add_option("--validate", validate_file, "check a tuple JSON file instead");
    paths->add_option("--node-budget", opts.node_budget, "backtracking node cap");
    paths->add_flag("--force", opts.force, "ignore size guardrails");

    CLI::App* verify = app.add_subcommand("verify", "randomized property suites");
    verify->add_option("--seed", seed, "RNG seed")->capture_default_str();
    verify->add_option("--samples", samples, "samples per suite")->capture_default_str();
    verify->add_option("--d-max", d_max, "largest rank to draw from")->capture_default_str();
    verify->add_flag("--mutate-delta", mutate_delta, "suppress the diagonal twist (self-test)")
        ->group(""); // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (mult->parsed()) return run_mult(mult_inst, method, check, opts, format);
        if (hilbert->parsed()) return run_hilbert(hilbert_inst, max_degree, sm_cross, opts, format);
        if (paths->parsed()) return run_paths(paths_inst, count_only, validate_file, opts);
        if (verify->parsed()) return run_verify(seed, samples, d_max, mutate_delta);
    } catch (const guardrail_error& e) {
        std::cerr << "guardrail: " << e.what() << "\n";
        return kExitGuardrail;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
