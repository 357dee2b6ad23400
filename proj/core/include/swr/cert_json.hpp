#pragma once

#include <string>

#include "swr/refuter.hpp"
#include "swr/scenario.hpp"

namespace swr {

// Versioned JSON document ("swr-cert/1") for refutation certificates. All
// worlds live over the single population recorded at the top level.
Json cert_to_json(const RefutationCertificate& c);
RefutationCertificate cert_from_json(const Json& j);

std::string serialize_certificate(const RefutationCertificate& c);
RefutationCertificate parse_certificate(const std::string& text);
RefutationCertificate load_certificate(const std::string& path);

} // namespace swr
