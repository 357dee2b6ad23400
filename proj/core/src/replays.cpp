#include "swr/replays.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "swr/cert_json.hpp"
#include "swr/errors.hpp"
#include "swr/ordered.hpp"
#include "swr/refuter.hpp"

namespace swr {

namespace {

std::optional<Verdict> verdict_from_name(const std::string& s) {
    for (Verdict v : {Verdict::StrictlyBetter, Verdict::StrictlyWorse, Verdict::Equivalent,
                      Verdict::Incomparable})
        if (s == verdict_name(v))
            return v;
    return std::nullopt;
}

Verdict expected_verdict(const Json& a) {
    auto v = verdict_from_name(a.at("expect").get<std::string>());
    if (!v)
        throw ParseError("unknown verdict '" + a.at("expect").get<std::string>() + "'");
    return *v;
}

void record(ReplayReport& rep, const std::string& desc, bool ok, const std::string& detail) {
    rep.results.push_back({desc, ok, ok ? "" : detail});
}

void run_assertion(ReplayReport& rep, const Scenario& sc, const Json& a) {
    std::string type = a.at("type").get<std::string>();
    if (type == "compare") {
        auto crit = criterion_from_name(a.at("criterion").get<std::string>());
        if (!crit)
            throw ParseError("unknown criterion in assertion");
        const World& l = sc.world(a.at("left").get<std::string>());
        const World& r = sc.world(a.at("right").get<std::string>());
        Verdict want = expected_verdict(a);
        Verdict got = compare(*crit, l, r);
        record(rep,
               a.at("criterion").get<std::string>() + "(" + a.at("left").get<std::string>() +
                   ", " + a.at("right").get<std::string>() + ") = " + verdict_name(want),
               got == want, "got " + verdict_name(got));
        return;
    }
    if (type == "compare-streams") {
        std::string crit = a.at("criterion").get<std::string>();
        const PeriodicStream& l = sc.stream(a.at("left").get<std::string>());
        const PeriodicStream& r = sc.stream(a.at("right").get<std::string>());
        Verdict want = expected_verdict(a);
        Verdict got = crit == "cu" ? cu_compare(l, r) : ot_compare(l, r);
        record(rep,
               crit + "(" + a.at("left").get<std::string>() + ", " +
                   a.at("right").get<std::string>() + ") = " + verdict_name(want),
               got == want, "got " + verdict_name(got));
        return;
    }
    if (type == "forget-order") {
        const PeriodicStream& s = sc.stream(a.at("stream").get<std::string>());
        const World& want = sc.world(a.at("expect").get<std::string>());
        bool ok = rearrangement_equivalent(forget_order(s), want);
        record(rep,
               "forget-order(" + a.at("stream").get<std::string>() +
                   ") ~ " + a.at("expect").get<std::string>(),
               ok, "unordered image differs");
        return;
    }
    if (type == "rearrangement-equivalent") {
        const World& l = sc.world(a.at("left").get<std::string>());
        const World& r = sc.world(a.at("right").get<std::string>());
        bool want = a.at("expect").get<bool>();
        bool got = rearrangement_equivalent(l, r);
        record(rep,
               "rearrangement-equivalent(" + a.at("left").get<std::string>() + ", " +
                   a.at("right").get<std::string>() + ") = " + (want ? "true" : "false"),
               got == want, got ? "got true" : "got false");
        return;
    }
    if (type == "apply-rearrangement") {
        auto it = sc.rearrangements.find(a.at("rearrangement").get<std::string>());
        if (it == sc.rearrangements.end())
            throw ParseError("unknown rearrangement in assertion");
        const World& src = sc.world(a.at("world").get<std::string>());
        const World& want = sc.world(a.at("expect").get<std::string>());
        World got = apply_rearrangement(it->second, src);
        record(rep,
               a.at("rearrangement").get<std::string>() + "(" +
                   a.at("world").get<std::string>() + ") = " + a.at("expect").get<std::string>(),
               got == want, "image differs from expected world");
        return;
    }
    if (type == "transfers") {
        const World& src = sc.world(a.at("world").get<std::string>());
        std::vector<RestrictedTransfer> ts;
        for (const Json& t : a.at("transfers"))
            ts.push_back({t.at("donor").get<std::string>(),
                          t.at("recipient").get<std::string>(),
                          rational_from_json(t.at("amount")),
                          cardinal_from_json(t.at("paired"))});
        bool expect_error = a.value("expectError", false);
        std::string desc = "transfers(" + a.at("world").get<std::string>() + ")";
        try {
            World got = apply_restricted_transfers(src, ts);
            if (expect_error) {
                record(rep, desc + " -> TransferError", false, "transfer was accepted");
            } else {
                const World& want = sc.world(a.at("expect").get<std::string>());
                record(rep, desc + " = " + a.at("expect").get<std::string>(),
                       rearrangement_equivalent(got, want) || got == want,
                       "post-transfer world differs");
            }
        } catch (const TransferError& e) {
            record(rep, desc + " -> TransferError", expect_error, e.what());
        }
        return;
    }
    if (type == "refute") {
        const World& l = sc.world(a.at("left").get<std::string>());
        const World& r = sc.world(a.at("right").get<std::string>());
        std::string family = a.at("family").get<std::string>();
        std::string desc = "refute-" + family + "(" + a.at("left").get<std::string>() +
                           " >= " + a.at("right").get<std::string>() + ")";
        RefutationCertificate cert;
        if (family == "two-valued") {
            cert = refute_two_valued(l, r);
            // Prop-2 certificates only instantiate Axioms 1-2
            bool ax_ok = cert.used_axioms ==
                         std::set<AxiomId>{AxiomId::StrongPareto, AxiomId::PermutationInvariance};
            record(rep, desc + " uses only Strong Pareto + Permutation Invariance", ax_ok,
                   "certificate used further axioms");
        } else {
            cert = refute_finite_valued(l, r);
            if (a.contains("expectCase")) {
                std::string want = a.at("expectCase").get<std::string>();
                std::string got = select_case(l, r);
                record(rep, desc + " selects case " + want, got == want, "got case " + got);
            }
        }
        CheckResult chk = check_certificate(cert);
        record(rep, desc + " certificate validates", chk.valid,
               "step " + std::to_string(chk.failed_step) + ": " + chk.reason);
        // round-trip through the serialized form, re-check independently
        CheckResult chk2 = check_certificate(parse_certificate(serialize_certificate(cert)));
        record(rep, desc + " serialized certificate validates", chk2.valid,
               "step " + std::to_string(chk2.failed_step) + ": " + chk2.reason);
        return;
    }
    throw ParseError("unknown assertion type '" + type + "'");
}

} // namespace

std::vector<std::string> list_replays(const std::string& dir) {
    std::vector<std::string> names;
    std::error_code ec;
    for (const auto& e : std::filesystem::directory_iterator(dir, ec))
        if (e.path().extension() == ".json")
            names.push_back(e.path().stem().string());
    std::sort(names.begin(), names.end());
    return names;
}

ReplayReport run_replay(const std::string& dir, const std::string& name) {
    std::filesystem::path path = std::filesystem::path(dir) / (name + ".json");
    std::ifstream in(path);
    if (!in)
        throw UnknownReplay("no replay named '" + name + "' in " + dir);
    std::ostringstream buf;
    buf << in.rdbuf();
    Json j;
    try {
        j = Json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("replay '" + name + "' is not valid JSON: " + e.what());
    }
    ReplayReport rep;
    rep.name = name;
    try {
        rep.note = j.value("note", "");
        Scenario sc = scenario_from_json(j.at("scenario"));
        for (const Json& a : j.at("assertions"))
            run_assertion(rep, sc, a);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("replay '" + name + "' is malformed: " + e.what());
    }
    return rep;
}

} // namespace swr
