#include "fint/json_out.hpp"

#include "fint/print.hpp"
#include "json.hpp"

namespace fint {

namespace {

nlohmann::ordered_json tuple_json(const VarTuple& vs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& v : vs) {
    nlohmann::ordered_json entry;
    entry["name"] = v.name;
    entry["type"] = to_string(v.type);
    arr.push_back(entry);
  }
  return arr;
}

}  // namespace

std::string emit_json(const InterpretedFormula& r) {
  nlohmann::ordered_json j;
  j["witnesses"] = tuple_json(r.witnesses);
  j["challenges"] = tuple_json(r.challenges);
  j["matrix"] = print_formula(r.matrix);
  return j.dump();
}

std::string emit_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["diagram"] = r.check;
  j["total"] = r.total;
  j["passed"] = r.passed;
  if (r.first_failure) {
    nlohmann::ordered_json f;
    f["formula"] = r.first_failure->formula;
    f["left"] = r.first_failure->left;
    f["right"] = r.first_failure->right;
    j["first_failure"] = f;
  } else {
    j["first_failure"] = nullptr;
  }
  return j.dump();
}

}  // namespace fint
