#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "swr/ordered.hpp"
#include "swr/rearrangement.hpp"
#include "swr/world.hpp"

namespace swr {

using Json = nlohmann::ordered_json;

// A scenario file: one population, named worlds over it, optional named
// streams, correspondences (for aligning against foreign populations) and
// rearrangements.
struct Scenario {
    Population population;
    std::map<std::string, World> worlds;
    std::map<std::string, PeriodicStream> streams;
    std::map<std::string, Correspondence> correspondences;
    std::map<std::string, Rearrangement> rearrangements;

    const World& world(const std::string& name) const;
    const PeriodicStream& stream(const std::string& name) const;
};

// JSON building blocks (shared with the certificate format).
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json cardinal_to_json(Cardinal c);
Cardinal cardinal_from_json(const Json& j);
Json population_to_json(const Population& p);
Population population_from_json(const Json& j);
Json cell_value_to_json(const CellValue& v);
CellValue cell_value_from_json(const Json& j);
Json world_to_json(const World& w); // assignment only
World world_from_json(const Population& p, const Json& j);
Json stream_to_json(const PeriodicStream& s);
PeriodicStream stream_from_json(const Json& j);
Json rearrangement_to_json(const Rearrangement& r);
Rearrangement rearrangement_from_json(const Json& j);

Scenario scenario_from_json(const Json& j);
Json scenario_to_json(const Scenario& s);

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);
std::string serialize_scenario(const Scenario& s);

} // namespace swr
