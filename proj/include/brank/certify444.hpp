#pragma once

// Border rank <= 4 for 4x4x4 tensors: the deterministic decision procedure and
// the sampled form of the symmetrizer conditions under random basis changes.

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "brank/numeric.hpp"
#include "brank/random.hpp"
#include "brank/strassen.hpp"
#include "brank/symmetrize.hpp"
#include "brank/tensor.hpp"
#include "brank/verdict.hpp"

namespace brank {

struct InvertibleElement {
  int mode = 0;
  Vector coeffs;  // over the raw slices of that mode
};

struct Decision444Trace {
  std::array<std::array<CommutationReport, 3>, 3> commutation;  // [mode-1][p-1]
  std::array<std::size_t, 3> span_dims{};
  std::optional<InvertibleElement> invertible;
  std::optional<Reduction334> reduction;
  std::optional<Verdict> reduced_verdict;
  Verdict verdict;
};

/// Searches the grid {0..4}^d of coefficients over a basis of the span for an
/// invertible element. det restricted to the span has degree <= 4 in each
/// coefficient, so an empty search proves every element is singular.
inline std::optional<Vector> find_invertible(const SliceSpace& S, long grid_max = 4) {
  const auto idx = independent_subset(S.slices);
  const std::size_t d = idx.size();
  if (d == 0) return std::nullopt;
  std::vector<Matrix> basis;
  for (auto k : idx) basis.push_back(S.slices[k]);
  std::vector<long> c(d, 0);
  for (;;) {
    Vector coeffs(c.begin(), c.end());
    if (!det(combine(basis, coeffs)).is_zero()) {
      Vector raw(S.slices.size());
      for (std::size_t t = 0; t < d; ++t) raw[idx[t]] = coeffs[t];
      return raw;
    }
    std::size_t pos = 0;
    while (pos < d && c[pos] == grid_max) c[pos++] = 0;
    if (pos == d) return std::nullopt;
    ++c[pos];
  }
}

inline Decision444Trace decide_444(const Tensor3& T) {
  require_dims(T, {4, 4, 4}, "decide_444");
  Decision444Trace tr;
  Verdict& v = tr.verdict;
  std::array<SliceSpace, 3> spaces;
  bool commutation_ok = true;
  for (int mode = 1; mode <= 3; ++mode) {
    spaces[mode - 1] = slice_space(T, mode);
    tr.span_dims[mode - 1] = spaces[mode - 1].span_dim;
    for (std::size_t p = 1; p <= 3; ++p) {
      auto& rep = tr.commutation[mode - 1][p - 1];
      rep = span_commutation_ok(spaces[mode - 1], p);
      commutation_ok = commutation_ok && rep.holds;
      json data = to_json(rep);
      data["span_dim"] = tr.span_dims[mode - 1];
      v.reasons.push_back({"commutation-p" + std::to_string(p), mode, rep.holds, data});
    }
  }
  // Recorded, not assumed: does the p = 1 condition force p = 2 and p = 3?
  json p1_only = json::array();
  for (int mode = 1; mode <= 3; ++mode) {
    const auto& c = tr.commutation[mode - 1];
    if (c[0].holds && !(c[1].holds && c[2].holds)) p1_only.push_back(mode);
  }
  v.reasons.push_back({"commutation-p1-implies-p2-p3", 0, p1_only.empty(), json{{"modes", p1_only}}});
  if (!commutation_ok) {
    v.outcome = Outcome::reject;
    v.rule = "commutation-failure";
    for (int mode = 1; mode <= 3 && v.witness.empty(); ++mode)
      for (std::size_t p = 1; p <= 3; ++p)
        if (!tr.commutation[mode - 1][p - 1].holds) {
          v.witness = to_json(tr.commutation[mode - 1][p - 1]);
          break;
        }
    return tr;
  }

  for (int mode = 1; mode <= 3; ++mode) {
    if (tr.span_dims[mode - 1] == 0) continue;
    if (auto c = find_invertible(spaces[mode - 1])) {
      tr.invertible = InvertibleElement{mode, *c};
      break;
    }
  }
  v.reasons.push_back({"invertible-span-element", tr.invertible ? tr.invertible->mode : 0, tr.invertible.has_value(),
                       tr.invertible ? json{{"coeffs", to_json(tr.invertible->coeffs)}} : json::object()});
  if (tr.invertible) {
    v.outcome = Outcome::accept;
    v.rule = "invertible-element";
    v.witness = json{{"mode", tr.invertible->mode}, {"coeffs", to_json(tr.invertible->coeffs)}};
    return tr;
  }

  tr.reduction = reduce_to_334(T);
  if (tr.reduction) {
    tr.reduced_verdict = decide_334(tr.reduction->tensor);
    json rec{{"modes", {tr.reduction->first_mode, tr.reduction->second_mode}},
             {"perm", tr.reduction->perm},
             {"basis", {to_json(tr.reduction->basis[0]), to_json(tr.reduction->basis[1]),
                        to_json(tr.reduction->basis[2])}}};
    v.reasons.push_back({"reduction-to-334", 0, true, rec});
    for (const auto& r : tr.reduced_verdict->reasons) v.reasons.push_back(r);
    v.outcome = tr.reduced_verdict->outcome;
    v.rule = "reduction-334/" + tr.reduced_verdict->rule;
    v.witness = json{{"reduction", rec}, {"reduced", tr.reduced_verdict->witness}};
    return tr;
  }

  // The dichotomy is relied on, not re-proved: flag acceptances that the
  // floating-point decomposition cannot reproduce.
  const auto numeric = decompose_numeric(T, 4, 1e-8);
  v.outcome = Outcome::accept;
  v.rule = "dichotomy";
  v.witness = json{{"numeric_crosscheck", numeric.has_value()}};
  if (numeric) v.witness["numeric_residual"] = numeric->residual;
  v.reasons.push_back({"dichotomy-numeric-crosscheck", 0, numeric.has_value(), v.witness});
  return tr;
}

struct SampledOptions {
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  long bound = 5;
  bool symmetrizer_only = false;  // skip the sampled commutation triples
};

/// Randomized form of both border-rank-4 conditions. Per trial and mode: a
/// random triple X, Y, Z from the slice span of T must satisfy
/// X adj(Y) Z = Z adj(Y) X, and for random integer (P1,P2,P3) the corners of
/// the slices of T(P1,P2,P3) must give systems of rank <= 8 whose rank-8
/// solutions satisfy the L/R identity. A violation proves border rank > 4;
/// passing all trials is evidence only.
inline Verdict check_equations_444(const Tensor3& T, const SampledOptions& opt = {}) {
  require_dims(T, {4, 4, 4}, "check_equations_444");
  if (opt.trials == 0) throw ArgumentError("trials must be positive");
  if (opt.bound < 1) throw ArgumentError("bound must be positive");
  Rng rng(opt.seed);
  Verdict v;
  const std::array<std::size_t, 3> corner{0, 1, 2};
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const Matrix P1 = rng.matrix(4, 4, opt.bound), P2 = rng.matrix(4, 4, opt.bound), P3 = rng.matrix(4, 4, opt.bound);
    const Tensor3 U = change_basis(T, P1, P2, P3);
    for (int p = 1; p <= 3; ++p) {
      if (!opt.symmetrizer_only) {
        std::vector<Matrix> raw;
        for (std::size_t k = 0; k < 4; ++k) raw.push_back(slice(T, p, k));
        const Vector x = rng.vector(4, opt.bound), y = rng.vector(4, opt.bound), z = rng.vector(4, opt.bound);
        const Matrix D = strassen_commutator(combine(raw, x), combine(raw, y), combine(raw, z));
        if (!D.is_zero()) {
          v.outcome = Outcome::reject;
          v.rule = "sampled-commutation";
          v.witness = json{{"trial", t}, {"mode", p}, {"condition", "commutation"}, {"x", to_json(x)},
                           {"y", to_json(y)}, {"z", to_json(z)}, {"defect", to_json(D)}};
          v.reasons.push_back({"commutation", p, false, v.witness});
          return v;
        }
      }
      std::vector<Matrix> slices;
      for (std::size_t k = 0; k < 4; ++k) slices.push_back(slice(U, p, k).submatrix(corner, corner));
      Candidates cand[2];
      std::string failed;
      for (Side side : {Side::L, Side::R}) {
        auto& c = cand[side == Side::L ? 0 : 1];
        c = extract_candidates(build_system(slices, side));
        if (c.rank > 8 && failed.empty()) failed = std::string("symmetrizer-rank-") + to_string(side);
      }
      if (failed.empty() && cand[0].rank == 8 && cand[1].rank == 8 &&
          !check_RL_identity(cand[0].candidates.front(), cand[1].candidates.front()))
        failed = "LR-identity";
      if (failed.empty()) continue;
      v.outcome = Outcome::reject;
      v.rule = "sampled-" + failed;
      v.witness = json{{"trial", t},
                       {"mode", p},
                       {"condition", failed},
                       {"rank_CL", cand[0].rank},
                       {"rank_CR", cand[1].rank},
                       {"P1", to_json(P1)},
                       {"P2", to_json(P2)},
                       {"P3", to_json(P3)}};
      v.reasons.push_back({failed, p, false, v.witness});
      return v;
    }
  }
  v.outcome = Outcome::accept;
  v.rule = "sampled-no-violation";
  v.reasons.push_back({"sampled-symmetrizer-conditions", 0, true,
                       json{{"trials", opt.trials},
                            {"seed", opt.seed},
                            {"bound", opt.bound},
                            {"symmetrizer_only", opt.symmetrizer_only},
                            {"certified", false}}});
  return v;
}

}  // namespace brank
