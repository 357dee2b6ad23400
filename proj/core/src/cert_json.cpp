#include "swr/cert_json.hpp"

#include <fstream>
#include <sstream>

#include "swr/errors.hpp"

namespace swr {

namespace {

constexpr const char* kSchema = "swr-cert/1";

Json fact_to_json(const Fact& f) {
    return Json{{"rel", rel_name(f.rel)},
                {"left", world_to_json(f.left)},
                {"right", world_to_json(f.right)}};
}

Fact fact_from_json(const Population& p, const Json& j) {
    Fact f;
    auto rel = rel_from_name(j.at("rel").get<std::string>());
    if (!rel)
        throw ParseError("unknown relation '" + j.at("rel").get<std::string>() + "'");
    f.rel = *rel;
    f.left = world_from_json(p, j.at("left"));
    f.right = world_from_json(p, j.at("right"));
    return f;
}

} // namespace

Json cert_to_json(const RefutationCertificate& c) {
    Json j = Json::object();
    j["schema"] = kSchema;
    j["population"] = population_to_json(c.target_w.population());
    j["target"] = Json{{"w", world_to_json(c.target_w)},
                       {"v", world_to_json(c.target_v)},
                       {"direction", c.direction}};
    Json steps = Json::array();
    for (const CertStep& s : c.steps) {
        Json sj = Json::object();
        sj["kind"] = step_kind_name(s.kind);
        if (s.fact)
            sj["fact"] = fact_to_json(*s.fact);
        if (!s.premises.empty())
            sj["premises"] = s.premises;
        if (s.rearrangement) {
            Json flow = Json::array();
            for (const auto& [key, mass] : s.rearrangement->flow)
                flow.push_back(Json{{"from", key.first},
                                    {"to", key.second},
                                    {"count", cardinal_to_json(mass)}});
            sj["flow"] = flow;
        }
        if (!s.weights.empty()) {
            Json ws = Json::array();
            for (const Rational& w : s.weights)
                ws.push_back(rational_to_json(w));
            sj["weights"] = ws;
        }
        if (s.contradiction)
            sj["contradiction"] = contradiction_name(*s.contradiction);
        steps.push_back(sj);
    }
    j["steps"] = steps;
    Json axioms = Json::array();
    for (AxiomId a : c.used_axioms)
        axioms.push_back(axiom_name(a));
    j["usedAxioms"] = axioms;
    return j;
}

RefutationCertificate cert_from_json(const Json& j) {
    if (!j.contains("schema") || j.at("schema").get<std::string>() != kSchema)
        throw ParseError("expected certificate schema '" + std::string(kSchema) + "'");
    RefutationCertificate c;
    Population p = population_from_json(j.at("population"));
    c.target_w = world_from_json(p, j.at("target").at("w"));
    c.target_v = world_from_json(p, j.at("target").at("v"));
    c.direction = j.at("target").value("direction", "forward");
    for (const Json& sj : j.at("steps")) {
        CertStep s;
        auto kind = step_kind_from_name(sj.at("kind").get<std::string>());
        if (!kind)
            throw ParseError("unknown step kind '" + sj.at("kind").get<std::string>() + "'");
        s.kind = *kind;
        if (sj.contains("fact"))
            s.fact = fact_from_json(p, sj.at("fact"));
        if (sj.contains("premises"))
            for (const Json& pr : sj.at("premises"))
                s.premises.push_back(pr.get<std::size_t>());
        if (sj.contains("flow")) {
            Rearrangement r{p, p, {}};
            for (const Json& e : sj.at("flow"))
                r.flow[{e.at("from").get<std::string>(), e.at("to").get<std::string>()}] =
                    cardinal_from_json(e.at("count"));
            s.rearrangement = std::move(r);
        }
        if (sj.contains("weights"))
            for (const Json& w : sj.at("weights"))
                s.weights.push_back(rational_from_json(w));
        if (sj.contains("contradiction")) {
            auto k = contradiction_from_name(sj.at("contradiction").get<std::string>());
            if (!k)
                throw ParseError("unknown contradiction kind");
            s.contradiction = *k;
        }
        c.steps.push_back(std::move(s));
    }
    if (j.contains("usedAxioms"))
        for (const Json& a : j.at("usedAxioms")) {
            auto id = axiom_from_name(a.get<std::string>());
            if (!id)
                throw ParseError("unknown axiom '" + a.get<std::string>() + "'");
            c.used_axioms.insert(*id);
        }
    return c;
}

std::string serialize_certificate(const RefutationCertificate& c) {
    return cert_to_json(c).dump(2) + "\n";
}

RefutationCertificate parse_certificate(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
    }
    try {
        return cert_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what());
    }
}

RefutationCertificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open certificate file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_certificate(buf.str());
}

} // namespace swr
