#pragma once

// Decision outcomes with re-checkable reasons, and the JSON encodings of
// exact scalars, vectors and matrices used in reports.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "brank/matrix.hpp"

namespace brank {

using json = nlohmann::json;

enum class Outcome { accept, reject, no_witness, not_applicable };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::accept:
      return "accept";
    case Outcome::reject:
      return "reject";
    case Outcome::no_witness:
      return "no-witness";
    default:
      return "not-applicable";
  }
}

/// One evaluated condition. `mode` is 0 when the condition is not tied to a mode.
struct Reason {
  std::string condition;
  int mode = 0;
  bool holds = false;
  json data = json::object();
};

struct Verdict {
  Outcome outcome = Outcome::no_witness;
  std::string rule;
  std::vector<Reason> reasons;
  json witness = json::object();

  bool accepted() const { return outcome == Outcome::accept; }
  bool rejected() const { return outcome == Outcome::reject; }

  const Reason* find(const std::string& condition, int mode = 0) const {
    for (const auto& r : reasons)
      if (r.condition == condition && (mode == 0 || r.mode == mode)) return &r;
    return nullptr;
  }
};

inline json to_json(const Scalar& s) {
  return json{{"re", rational_string(s.re())}, {"im", rational_string(s.im())}};
}

inline Scalar scalar_from_json(const json& j) {
  if (j.is_object()) {
    if (!j.contains("re") || !j.contains("im") || !j["re"].is_string() || !j["im"].is_string())
      throw std::invalid_argument("scalar object needs string fields 're' and 'im'");
    return Scalar::parse(j["re"].get<std::string>(), j["im"].get<std::string>());
  }
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  throw std::invalid_argument("scalar must be an object {re, im} or a rational string");
}

inline json to_json(const Vector& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(to_json(s));
  return a;
}

inline json to_json(const Matrix& M) {
  json a = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) a.push_back(to_json(M.row(i)));
  return a;
}

inline json to_json(const Reason& r) {
  return json{{"condition", r.condition}, {"mode", r.mode}, {"holds", r.holds}, {"data", r.data}};
}

inline json to_json(const Verdict& v) {
  json reasons = json::array();
  for (const auto& r : v.reasons) reasons.push_back(to_json(r));
  return json{{"outcome", to_string(v.outcome)}, {"rule", v.rule}, {"reasons", reasons}, {"witness", v.witness}};
}

}  // namespace brank
