#pragma once

// The JSON tensor document: dims, dense entries in (i, j, k) order with i
// slowest, and optional generator metadata.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brank/generators.hpp"
#include "brank/tensor.hpp"
#include "brank/verdict.hpp"

namespace brank {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TensorMetadata {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> generator;
  std::optional<std::size_t> claimed_rank_bound;
  std::optional<std::vector<RankOneTerm>> factors;
  json params = json::object();
};

struct TensorDocument {
  Tensor3 tensor;
  TensorMetadata metadata;
};

inline json to_json(const TensorMetadata& md) {
  json j = json::object();
  if (md.seed) j["seed"] = *md.seed;
  if (md.generator) j["generator"] = *md.generator;
  if (md.claimed_rank_bound) j["claimed_rank_bound"] = *md.claimed_rank_bound;
  if (md.factors) {
    j["factors"] = json::array();
    for (const auto& f : *md.factors) j["factors"].push_back(json{{"u", to_json(f[0])}, {"v", to_json(f[1])}, {"w", to_json(f[2])}});
  }
  if (!md.params.empty()) j["params"] = md.params;
  return j;
}

inline json to_json(const TensorDocument& doc) {
  json j{{"dims", doc.tensor.dims()}, {"entries", to_json(doc.tensor.entries())}};
  const json md = to_json(doc.metadata);
  if (!md.empty()) j["metadata"] = md;
  return j;
}

/// Keys sorted, two-space indent, trailing newline: identical documents give
/// identical bytes.
inline std::string serialize(const TensorDocument& doc) { return to_json(doc).dump(2) + "\n"; }

namespace detail {

inline Vector vector_from_json(const json& a, std::size_t size, const std::string& where) {
  if (!a.is_array()) throw InputError(where + ": expected an array");
  if (a.size() != size)
    throw InputError(where + ": expected " + std::to_string(size) + " scalars, got " + std::to_string(a.size()));
  Vector v;
  v.reserve(size);
  for (std::size_t t = 0; t < a.size(); ++t) {
    try {
      v.push_back(scalar_from_json(a[t]));
    } catch (const std::exception& e) {
      throw InputError(where + "[" + std::to_string(t) + "]: " + e.what());
    }
  }
  return v;
}

}  // namespace detail

inline TensorDocument document_from_json(const json& j) {
  if (!j.is_object()) throw InputError("document must be a JSON object");
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 3)
    throw InputError("dims: expected an array of three positive integers");
  Dims d{};
  for (std::size_t t = 0; t < 3; ++t) {
    const json& x = j["dims"][t];
    if (!x.is_number_unsigned() || x.get<std::size_t>() == 0)
      throw InputError("dims[" + std::to_string(t) + "]: expected a positive integer");
    d[t] = x.get<std::size_t>();
  }
  if (!j.contains("entries")) throw InputError("entries: missing");
  TensorDocument doc;
  doc.tensor = Tensor3::from_entries(d, detail::vector_from_json(j["entries"], d[0] * d[1] * d[2], "entries"));
  if (!j.contains("metadata")) return doc;
  const json& md = j["metadata"];
  if (!md.is_object()) throw InputError("metadata: expected an object");
  if (md.contains("seed")) {
    if (!md["seed"].is_number_unsigned()) throw InputError("metadata.seed: expected a non-negative integer");
    doc.metadata.seed = md["seed"].get<std::uint64_t>();
  }
  if (md.contains("generator")) {
    if (!md["generator"].is_string()) throw InputError("metadata.generator: expected a string");
    doc.metadata.generator = md["generator"].get<std::string>();
  }
  if (md.contains("claimed_rank_bound")) {
    if (!md["claimed_rank_bound"].is_number_unsigned())
      throw InputError("metadata.claimed_rank_bound: expected a non-negative integer");
    doc.metadata.claimed_rank_bound = md["claimed_rank_bound"].get<std::size_t>();
  }
  if (md.contains("factors")) {
    if (!md["factors"].is_array()) throw InputError("metadata.factors: expected an array");
    std::vector<RankOneTerm> factors;
    for (std::size_t t = 0; t < md["factors"].size(); ++t) {
      const json& f = md["factors"][t];
      const std::string where = "metadata.factors[" + std::to_string(t) + "]";
      if (!f.is_object() || !f.contains("u") || !f.contains("v") || !f.contains("w"))
        throw InputError(where + ": expected an object with u, v, w");
      factors.push_back({detail::vector_from_json(f["u"], d[0], where + ".u"),
                         detail::vector_from_json(f["v"], d[1], where + ".v"),
                         detail::vector_from_json(f["w"], d[2], where + ".w")});
    }
    doc.metadata.factors = std::move(factors);
  }
  if (md.contains("params")) doc.metadata.params = md["params"];
  return doc;
}

inline TensorDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

inline TensorDocument document_from(const WitnessedTensor& w) {
  TensorDocument doc;
  doc.tensor = w.tensor;
  doc.metadata.claimed_rank_bound = w.claimed_rank_bound;
  doc.metadata.factors = w.factors;
  return doc;
}

}  // namespace brank
