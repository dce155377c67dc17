#pragma once

#include <string>

#include "json.hpp"

#include "gcp/poly.hpp"

namespace gcp {

// Canonical text form: terms in ascending total degree, ties broken so the
// more significant variable's higher power prints first. "0" for zero.
std::string to_string(const Poly& p, bool unicode = false);

// {"terms":[{"exponents":{"x1":2,...},"coeff":"-12"},...]} in print order.
nlohmann::json to_json(const Poly& p);

}  // namespace gcp
