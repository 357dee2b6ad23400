#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "swr/axioms.hpp"
#include "swr/cert_json.hpp"
#include "swr/criteria.hpp"
#include "swr/errors.hpp"
#include "swr/generators.hpp"
#include "swr/ordered.hpp"
#include "swr/refuter.hpp"
#include "swr/replays.hpp"
#include "swr/scenario.hpp"

using namespace swr;

namespace {

std::uint64_t default_seed() {
    if (const char* s = std::getenv("SWR_SEED"))
        return std::strtoull(s, nullptr, 10);
    return 42;
}

int cmd_compare(const std::string& file, const std::string& crit_name, const std::string& left,
                const std::string& right, bool json) {
    auto crit = criterion_from_name(crit_name);
    if (!crit) {
        std::cerr << "unknown criterion '" << crit_name << "'\n";
        return 2;
    }
    Scenario sc = load_scenario(file);
    Verdict got;
    if (*crit == Criterion::CatchingUp || *crit == Criterion::Overtaking) {
        const PeriodicStream& l = sc.stream(left);
        const PeriodicStream& r = sc.stream(right);
        got = *crit == Criterion::CatchingUp ? cu_compare(l, r) : ot_compare(l, r);
        if (json) {
            Json out{{"criterion", crit_name}, {"left", left}, {"right", right},
                     {"verdict", verdict_name(got)}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << crit_name << "(" << left << ", " << right
                      << ") = " << verdict_name(got) << "\n";
        }
        return 0;
    }
    const World& l = sc.world(left);
    const World& r = sc.world(right);
    got = compare(*crit, l, r);
    Json out{{"criterion", crit_name}, {"left", left}, {"right", right},
             {"verdict", verdict_name(got)}};
    std::string sum;
    if (*crit == Criterion::SumPreorder) {
        auto [la, ra] = align(l, r);
        sum = delta_profile(la, ra).classify().to_string();
        out["sumClass"] = sum;
    }
    if (json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << crit_name << "(" << left << ", " << right << ") = " << verdict_name(got);
        if (!sum.empty())
            std::cout << "   [sum of differences: " << sum << "]";
        std::cout << "\n";
    }
    return 0;
}

int cmd_axioms(const std::string& crit_name, const std::string& axiom_name_arg,
               std::uint64_t trials, std::uint64_t seed, bool json) {
    auto crit = criterion_from_name(crit_name);
    if (!crit) {
        std::cerr << "unknown criterion '" << crit_name << "'\n";
        return 2;
    }
    std::vector<AxiomId> ids;
    if (axiom_name_arg == "all") {
        ids = axioms_for(*crit);
    } else {
        auto a = axiom_from_name(axiom_name_arg);
        if (!a) {
            std::cerr << "unknown axiom '" << axiom_name_arg << "'\n";
            return 2;
        }
        ids.push_back(*a);
    }
    bool all_pass = true;
    Json reports = Json::array();
    for (AxiomId a : ids) {
        CheckReport rep = check_axiom(*crit, a, trials, seed);
        all_pass = all_pass && rep.passed();
        if (json) {
            Json failures = Json::array();
            for (const auto& f : rep.failures)
                failures.push_back(Json{{"trial", f.trial}, {"description", f.description}});
            reports.push_back(Json{{"criterion", crit_name},
                                   {"axiom", axiom_name(a)},
                                   {"trials", rep.trials},
                                   {"seed", rep.seed},
                                   {"passed", rep.passed()},
                                   {"failures", failures}});
        } else {
            std::cout << crit_name << " / " << axiom_name(a) << ": "
                      << (rep.passed() ? "pass" : "FAIL") << " (" << rep.trials << " trials, seed "
                      << rep.seed << ")\n";
            std::size_t shown = 0;
            for (const auto& f : rep.failures) {
                if (shown++ == 3) {
                    std::cout << "    ... " << rep.failures.size() - 3 << " more failures\n";
                    break;
                }
                std::cout << "    trial " << f.trial << ": " << f.description << "\n";
            }
        }
    }
    if (json)
        std::cout << reports.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

bool is_two_valued(const World& w) {
    for (const Cell& c : w.population().cells()) {
        auto p = w.plain_value(c.id);
        if (!p || (*p != 0 && *p != 1))
            return false;
    }
    return true;
}

int cmd_refute(const std::string& file, const std::string& pair, const std::string& direction,
               const std::string& family, const std::string& out_path, bool json) {
    auto comma = pair.find(',');
    if (comma == std::string::npos) {
        std::cerr << "--pair expects two world names separated by a comma\n";
        return 2;
    }
    if (direction != "forward" && direction != "reverse") {
        std::cerr << "--direction must be 'forward' or 'reverse'\n";
        return 2;
    }
    Scenario sc = load_scenario(file);
    World w = sc.world(pair.substr(0, comma));
    World v = sc.world(pair.substr(comma + 1));
    if (direction == "reverse")
        std::swap(w, v);

    std::string fam = family;
    if (fam == "auto")
        fam = is_two_valued(w) && is_two_valued(v) ? "two-valued" : "finite";
    RefutationCertificate cert;
    try {
        cert = fam == "two-valued" ? refute_two_valued(w, v) : refute_finite_valued(w, v);
    } catch (const NotRefutable& e) {
        std::cerr << "not refutable: " << e.what() << "\n";
        return 1;
    }
    CheckResult chk = check_certificate(cert);
    std::string text = serialize_certificate(cert);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return 2;
        }
        out << text;
    }
    if (json) {
        Json rep{{"family", fam},
                 {"steps", cert.steps.size()},
                 {"valid", chk.valid},
                 {"out", out_path}};
        if (fam == "finite")
            rep["case"] = select_case(w, v);
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << "refuted (" << fam << ", " << cert.steps.size() << " steps"
                  << (fam == "finite" ? ", case " + select_case(w, v) : "") << "); checker: "
                  << (chk.valid ? "valid" : "INVALID: " + chk.reason) << "\n";
        if (out_path.empty())
            std::cout << text;
        else
            std::cout << "certificate written to " << out_path << "\n";
    }
    return chk.valid ? 0 : 1;
}

int cmd_verify(const std::string& path, bool json) {
    RefutationCertificate cert = load_certificate(path);
    CheckResult chk = check_certificate(cert);
    if (json) {
        Json rep{{"valid", chk.valid}};
        if (!chk.valid) {
            rep["failedStep"] = chk.failed_step;
            rep["reason"] = chk.reason;
        }
        std::cout << rep.dump(2) << "\n";
    } else if (chk.valid) {
        std::cout << "valid certificate (" << cert.steps.size() << " steps)\n";
    } else {
        std::cout << "INVALID at step " << chk.failed_step << ": " << chk.reason << "\n";
    }
    return chk.valid ? 0 : 1;
}

int cmd_replay(const std::string& dir, bool all, const std::string& name, bool json) {
    std::vector<std::string> names;
    if (all)
        names = list_replays(dir);
    else if (!name.empty())
        names.push_back(name);
    else {
        std::cerr << "replay requires --all or --name\n";
        return 2;
    }
    bool ok = true;
    Json reports = Json::array();
    for (const std::string& n : names) {
        ReplayReport rep = run_replay(dir, n);
        ok = ok && rep.passed();
        if (json) {
            Json results = Json::array();
            for (const auto& r : rep.results)
                results.push_back(Json{{"description", r.description},
                                       {"passed", r.passed},
                                       {"detail", r.detail}});
            reports.push_back(Json{{"name", rep.name},
                                   {"note", rep.note},
                                   {"passed", rep.passed()},
                                   {"results", results}});
        } else {
            std::cout << rep.name << ": " << (rep.passed() ? "pass" : "FAIL") << "\n";
            for (const auto& r : rep.results) {
                std::cout << "    " << (r.passed ? "ok  " : "FAIL") << " " << r.description;
                if (!r.passed)
                    std::cout << " (" << r.detail << ")";
                std::cout << "\n";
            }
        }
    }
    if (json)
        std::cout << reports.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_density(const std::string& criteria, std::uint64_t samples, std::uint64_t seed,
                int omega_both_percent, const GenOptions& opts, bool csv) {
    std::vector<Criterion> crits;
    std::string cur;
    for (char ch : criteria + ",") {
        if (ch == ',') {
            if (!cur.empty()) {
                auto c = criterion_from_name(cur);
                if (!c || *c == Criterion::CatchingUp || *c == Criterion::Overtaking) {
                    std::cerr << "density does not support criterion '" << cur << "'\n";
                    return 2;
                }
                crits.push_back(*c);
                cur.clear();
            }
        } else {
            cur += ch;
        }
    }
    if (crits.empty() || samples < 1) {
        std::cerr << "density requires at least one criterion and one sample\n";
        return 2;
    }
    struct Tally {
        std::uint64_t comparable = 0, strict = 0, equivalent = 0;
    };
    std::vector<Tally> tallies(crits.size());
    Rng rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
        bool both = std::uniform_int_distribution<int>(1, 100)(rng) <= omega_both_percent;
        auto [w, v] = density_pair(rng, opts, both);
        for (std::size_t k = 0; k < crits.size(); ++k) {
            Verdict got = compare(crits[k], w, v);
            if (got != Verdict::Incomparable)
                tallies[k].comparable++;
            if (got == Verdict::StrictlyBetter || got == Verdict::StrictlyWorse)
                tallies[k].strict++;
            if (got == Verdict::Equivalent)
                tallies[k].equivalent++;
        }
    }
    auto frac = [&](std::uint64_t n) {
        return static_cast<double>(n) / static_cast<double>(samples);
    };
    if (csv) {
        std::cout << "criterion,samples,seed,omega_both_percent,comparable,strict,equivalent,"
                     "fraction_comparable,fraction_strict,fraction_equivalent\n";
        for (std::size_t k = 0; k < crits.size(); ++k)
            std::cout << criterion_name(crits[k]) << "," << samples << "," << seed << ","
                      << omega_both_percent << "," << tallies[k].comparable << ","
                      << tallies[k].strict << "," << tallies[k].equivalent << ","
                      << frac(tallies[k].comparable) << "," << frac(tallies[k].strict) << ","
                      << frac(tallies[k].equivalent) << "\n";
    } else {
        std::cout << "samples=" << samples << " seed=" << seed
                  << " omega-both-percent=" << omega_both_percent << "\n";
        for (std::size_t k = 0; k < crits.size(); ++k)
            std::cout << criterion_name(crits[k])
                      << ": comparable=" << frac(tallies[k].comparable)
                      << " strict=" << frac(tallies[k].strict)
                      << " equivalent=" << frac(tallies[k].equivalent) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"social welfare relations on countably infinite populations"};
    app.require_subcommand(1);

    std::string scenario_file, criterion = "sp", left, right;
    bool json = false;
    auto* compare_cmd = app.add_subcommand("compare", "compare two named worlds (or streams)");
    compare_cmd->add_option("--scenario", scenario_file, "scenario file")->required();
    compare_cmd->add_option("--criterion", criterion, "sp|fsp|cp|pareto|spd|cdv|cu|ot");
    compare_cmd->add_option("--left", left, "left world/stream name")->required();
    compare_cmd->add_option("--right", right, "right world/stream name")->required();
    compare_cmd->add_flag("--json", json, "machine-readable output");

    std::string axiom = "all";
    std::uint64_t trials = 1000, seed = default_seed();
    auto* axioms_cmd = app.add_subcommand("axioms", "run axiom property suites");
    axioms_cmd->add_option("--criterion", criterion, "criterion name")->required();
    axioms_cmd->add_option("--axiom", axiom, "axiom name or 'all'");
    axioms_cmd->add_option("--trials", trials, "trials per axiom");
    axioms_cmd->add_option("--seed", seed, "rng seed (default: SWR_SEED or 42)");
    axioms_cmd->add_flag("--json", json, "machine-readable output");

    std::string pair, direction = "forward", family = "auto", out_path;
    auto* refute_cmd = app.add_subcommand("refute", "build a refutation certificate");
    refute_cmd->add_option("--scenario", scenario_file, "scenario file")->required();
    refute_cmd->add_option("--pair", pair, "w,v — refute the claim w >= v")->required();
    refute_cmd->add_option("--direction", direction, "forward|reverse");
    refute_cmd->add_option("--family", family, "auto|finite|two-valued");
    refute_cmd->add_option("--out", out_path, "write the certificate here");
    refute_cmd->add_flag("--json", json, "machine-readable output");

    std::string cert_path;
    auto* verify_cmd = app.add_subcommand("verify", "check a certificate by recomputation");
    verify_cmd->add_option("certificate", cert_path, "certificate file")->required();
    verify_cmd->add_flag("--json", json, "machine-readable output");

    std::string replay_dir = SWR_DEFAULT_REPLAY_DIR, replay_name;
    bool replay_all = false;
    auto* replay_cmd = app.add_subcommand("replay", "run the golden replay corpus");
    replay_cmd->add_flag("--all", replay_all, "run every registered replay");
    replay_cmd->add_option("--name", replay_name, "run one replay");
    replay_cmd->add_option("--dir", replay_dir, "replay registry directory");
    replay_cmd->add_flag("--json", json, "machine-readable output");

    std::string criteria = "sp";
    std::uint64_t samples = 10000;
    int omega_both_percent = 50;
    GenOptions gen;
    bool csv = false;
    auto* density_cmd = app.add_subcommand("density", "comparability-density experiment");
    density_cmd->add_option("--criteria", criteria, "comma-separated criterion names");
    density_cmd->add_option("--samples", samples, "number of sampled pairs");
    density_cmd->add_option("--seed", seed, "rng seed (default: SWR_SEED or 42)");
    density_cmd->add_option("--omega-both-percent", omega_both_percent,
                            "chance a pair gets opposite-sign omega deltas")
        ->check(CLI::Range(0, 100));
    density_cmd->add_option("--min-cells", gen.min_cells, "min finite cells + 2");
    density_cmd->add_option("--max-cells", gen.max_cells, "max finite cells + 2");
    density_cmd->add_option("--max-denominator", gen.max_denominator, "value grid denominator");
    density_cmd->add_option("--max-magnitude", gen.max_magnitude, "value grid magnitude");
    density_cmd->add_flag("--csv", csv, "CSV output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compare_cmd->parsed())
            return cmd_compare(scenario_file, criterion, left, right, json);
        if (axioms_cmd->parsed())
            return cmd_axioms(criterion, axiom, trials, seed, json);
        if (refute_cmd->parsed())
            return cmd_refute(scenario_file, pair, direction, family, out_path, json);
        if (verify_cmd->parsed())
            return cmd_verify(cert_path, json);
        if (replay_cmd->parsed())
            return cmd_replay(replay_dir, replay_all, replay_name, json);
        if (density_cmd->parsed())
            return cmd_density(criteria, samples, seed, omega_both_percent, gen, csv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
