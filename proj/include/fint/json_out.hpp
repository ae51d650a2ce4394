#pragma once

#include <string>

#include "fint/check.hpp"
#include "fint/interpret.hpp"

namespace fint {

// Stable machine-readable renderings: fixed key order, compact separators,
// byte-identical across runs on identical input.
//
//   {"witnesses":[{"name":"w0","type":"N->N"}],"challenges":[...],"matrix":"..."}
//   {"diagram":"dial","total":1278,"passed":1278,"first_failure":null}
std::string emit_json(const InterpretedFormula& r);
std::string emit_json(const CheckReport& r);

}  // namespace fint
