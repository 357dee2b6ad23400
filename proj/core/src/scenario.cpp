#include "swr/scenario.hpp"

#include <fstream>
#include <sstream>

#include "swr/errors.hpp"

namespace swr {

const World& Scenario::world(const std::string& name) const {
    auto it = worlds.find(name);
    if (it == worlds.end())
        throw ParseError("scenario has no world named '" + name + "'");
    return it->second;
}

const PeriodicStream& Scenario::stream(const std::string& name) const {
    auto it = streams.find(name);
    if (it == streams.end())
        throw ParseError("scenario has no stream named '" + name + "'");
    return it->second;
}

Json rational_to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer())
        return Rational(static_cast<long long>(j.get<long long>()));
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational (string \"p/q\" or integer), got " + j.dump());
}

Json cardinal_to_json(Cardinal c) {
    if (c.is_omega())
        return "omega";
    return c.value();
}

Cardinal cardinal_from_json(const Json& j) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        auto v = j.get<long long>();
        if (v < 0)
            throw ParseError("negative cardinal");
        return Cardinal::finite(static_cast<std::uint64_t>(v));
    }
    if (j.is_string())
        return parse_cardinal(j.get<std::string>());
    throw ParseError("expected a cardinal (non-negative integer or \"omega\"), got " + j.dump());
}

Json population_to_json(const Population& p) {
    Json cells = Json::array();
    for (const Cell& c : p.cells())
        cells.push_back(Json{{"id", c.id}, {"size", cardinal_to_json(c.size)}});
    return cells;
}

Population population_from_json(const Json& j) {
    if (!j.is_array())
        throw ParseError("population must be an array of {id, size}");
    std::vector<Cell> cells;
    for (const Json& c : j)
        cells.push_back({c.at("id").get<std::string>(), cardinal_from_json(c.at("size"))});
    return Population(std::move(cells));
}

Json cell_value_to_json(const CellValue& v) {
    if (const auto* r = std::get_if<Rational>(&v))
        return rational_to_json(*r);
    const auto& t = std::get<TailDescriptor>(v);
    if (t.is_constant())
        return Json{{"const", rational_to_json(t.constant)}};
    if (t.constant == 0 && t.harmonic == 0 && t.geometric.size() == 1 && t.exceptions.empty())
        return Json{{"geometric", Json{{"a", rational_to_json(t.geometric[0].a)},
                                       {"r", rational_to_json(t.geometric[0].r)}}}};
    if (t.constant == 0 && t.geometric.empty() && t.exceptions.empty() && t.harmonic != 0)
        return Json{{"harmonic", Json{{"a", rational_to_json(t.harmonic)}}}};
    Json m = Json::object();
    if (t.constant != 0)
        m["constant"] = rational_to_json(t.constant);
    if (!t.geometric.empty()) {
        Json terms = Json::array();
        for (const GeometricTerm& g : t.geometric)
            terms.push_back(Json{{"a", rational_to_json(g.a)}, {"r", rational_to_json(g.r)}});
        m["geometric"] = terms;
    }
    if (t.harmonic != 0)
        m["harmonic"] = rational_to_json(t.harmonic);
    if (!t.exceptions.empty()) {
        Json exc = Json::object();
        for (const auto& [n, val] : t.exceptions)
            exc[std::to_string(n)] = rational_to_json(val);
        m["exceptions"] = exc;
    }
    return Json{{"mixed", m}};
}

CellValue cell_value_from_json(const Json& j) {
    if (j.is_string() || j.is_number_integer())
        return rational_from_json(j);
    if (!j.is_object())
        throw ParseError("cell value must be a rational or a descriptor object, got " + j.dump());
    if (j.contains("const"))
        return TailDescriptor::constant_of(rational_from_json(j.at("const")));
    if (j.contains("geometric") && j.at("geometric").is_object()) {
        const Json& g = j.at("geometric");
        return TailDescriptor::geometric_of(rational_from_json(g.at("a")),
                                            rational_from_json(g.at("r")));
    }
    if (j.contains("harmonic"))
        return TailDescriptor::harmonic_of(rational_from_json(j.at("harmonic").is_object()
                                                                  ? j.at("harmonic").at("a")
                                                                  : j.at("harmonic")));
    if (j.contains("mixed")) {
        const Json& m = j.at("mixed");
        TailDescriptor t;
        if (m.contains("constant"))
            t.constant = rational_from_json(m.at("constant"));
        if (m.contains("geometric"))
            for (const Json& g : m.at("geometric"))
                t.geometric.push_back(
                    {rational_from_json(g.at("a")), rational_from_json(g.at("r"))});
        if (m.contains("harmonic"))
            t.harmonic = rational_from_json(m.at("harmonic"));
        if (m.contains("exceptions"))
            for (const auto& [k, v] : m.at("exceptions").items()) {
                Cardinal idx = parse_cardinal(k);
                if (!idx.is_finite())
                    throw ParseError("exception index must be finite");
                t.exceptions[idx.value()] = rational_from_json(v);
            }
        validate_tail(t);
        return t;
    }
    throw ParseError("unknown cell value descriptor " + j.dump());
}

Json world_to_json(const World& w) {
    Json out = Json::object();
    for (const Cell& c : w.population().cells())
        out[c.id] = cell_value_to_json(w.value(c.id));
    return out;
}

World world_from_json(const Population& p, const Json& j) {
    if (!j.is_object())
        throw ParseError("world must be an object mapping cell ids to values");
    std::map<CellId, CellValue> assign;
    for (const auto& [id, val] : j.items())
        assign.emplace(id, cell_value_from_json(val));
    return World(p, std::move(assign));
}

Json stream_to_json(const PeriodicStream& s) {
    Json prefix = Json::array(), period = Json::array();
    for (const Rational& r : s.prefix)
        prefix.push_back(rational_to_json(r));
    for (const Rational& r : s.period)
        period.push_back(rational_to_json(r));
    return Json{{"prefix", prefix}, {"period", period}};
}

PeriodicStream stream_from_json(const Json& j) {
    PeriodicStream s;
    if (j.contains("prefix"))
        for (const Json& r : j.at("prefix"))
            s.prefix.push_back(rational_from_json(r));
    for (const Json& r : j.at("period"))
        s.period.push_back(rational_from_json(r));
    validate_stream(s);
    return s;
}

Json rearrangement_to_json(const Rearrangement& r) {
    Json flow = Json::array();
    for (const auto& [key, mass] : r.flow)
        flow.push_back(Json{{"from", key.first},
                            {"to", key.second},
                            {"count", cardinal_to_json(mass)}});
    return Json{{"source", population_to_json(r.source)},
                {"target", population_to_json(r.target)},
                {"flow", flow}};
}

Rearrangement rearrangement_from_json(const Json& j) {
    Rearrangement r;
    r.source = population_from_json(j.at("source"));
    r.target = j.contains("target") ? population_from_json(j.at("target")) : r.source;
    for (const Json& e : j.at("flow"))
        r.flow[{e.at("from").get<std::string>(), e.at("to").get<std::string>()}] =
            cardinal_from_json(e.at("count"));
    validate_rearrangement(r);
    return r;
}

namespace {

Correspondence correspondence_from_json(const Json& j) {
    Correspondence c;
    c.refined = population_from_json(j.at("population"));
    for (const auto& [part, parent] : j.at("leftParent").items())
        c.left_parent[part] = parent.get<std::string>();
    for (const auto& [part, parent] : j.at("rightParent").items())
        c.right_parent[part] = parent.get<std::string>();
    return c;
}

Json correspondence_to_json(const Correspondence& c) {
    Json l = Json::object(), r = Json::object();
    for (const auto& [part, parent] : c.left_parent)
        l[part] = parent;
    for (const auto& [part, parent] : c.right_parent)
        r[part] = parent;
    return Json{{"population", population_to_json(c.refined)},
                {"leftParent", l},
                {"rightParent", r}};
}

} // namespace

Scenario scenario_from_json(const Json& j) {
    Scenario s;
    s.population = population_from_json(j.at("population"));
    if (j.contains("worlds"))
        for (const auto& [name, w] : j.at("worlds").items())
            s.worlds.emplace(name, world_from_json(s.population, w));
    if (j.contains("streams"))
        for (const auto& [name, st] : j.at("streams").items())
            s.streams.emplace(name, stream_from_json(st));
    if (j.contains("correspondences"))
        for (const auto& [name, c] : j.at("correspondences").items())
            s.correspondences.emplace(name, correspondence_from_json(c));
    if (j.contains("rearrangements"))
        for (const auto& [name, r] : j.at("rearrangements").items())
            s.rearrangements.emplace(name, rearrangement_from_json(r));
    return s;
}

Json scenario_to_json(const Scenario& s) {
    Json j = Json::object();
    j["population"] = population_to_json(s.population);
    Json worlds = Json::object();
    for (const auto& [name, w] : s.worlds)
        worlds[name] = world_to_json(w);
    j["worlds"] = worlds;
    if (!s.streams.empty()) {
        Json streams = Json::object();
        for (const auto& [name, st] : s.streams)
            streams[name] = stream_to_json(st);
        j["streams"] = streams;
    }
    if (!s.correspondences.empty()) {
        Json cs = Json::object();
        for (const auto& [name, c] : s.correspondences)
            cs[name] = correspondence_to_json(c);
        j["correspondences"] = cs;
    }
    if (!s.rearrangements.empty()) {
        Json rs = Json::object();
        for (const auto& [name, r] : s.rearrangements)
            rs[name] = rearrangement_to_json(r);
        j["rearrangements"] = rs;
    }
    return j;
}

Scenario parse_scenario(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
    }
    try {
        return scenario_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed scenario: ") + e.what());
    }
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& s) { return scenario_to_json(s).dump(2) + "\n"; }

} // namespace swr
