// brank: border-rank certification, tensor generation and evaluation.
//
//   brank certify <target> [FILE]     target: br3-333 br4-333 br4-334 br4-444 rank-l
//   brank gen <generator> [options]
//   brank eval <quantity> [FILE]      quantity: strassen ranksCLCR quadric-rank degrees numeric
//
// Exit codes: 0 accept (or success), 1 reject, 2 no-witness / not-applicable,
// 3 input error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "brank/brank.hpp"

namespace {

using namespace brank;

constexpr int kExitInput = 3;

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string report = "json";
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  long bound = 5;
  std::vector<std::size_t> dims;
  std::size_t r = 4;
  std::size_t m = 3, n = 3;
  bool timing = false;
  bool sampled = false;
  bool symmetrizer_only = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::accept:
      return 0;
    case Outcome::reject:
      return 1;
    default:
      return 2;
  }
}

void print_verdict_text(std::ostream& os, const std::string& label, const Verdict& v) {
  os << label << ": " << to_string(v.outcome) << " (" << v.rule << ")\n";
  for (const auto& r : v.reasons) {
    os << "  [" << (r.holds ? "ok" : "fail") << "] " << r.condition;
    if (r.mode != 0) os << " mode " << r.mode;
    os << "\n";
  }
}

void emit(const Options& opt, const json& report) {
  if (opt.report == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  if (report.contains("verdict")) {
    std::cout << "target: " << report["target"].get<std::string>() << "\n";
    std::cout << "dims: " << report["dims"].dump() << "\n";
  }
  if (report.contains("values")) {
    std::cout << "quantity: " << report["quantity"].get<std::string>() << "\n";
    for (const auto& [k, val] : report["values"].items())
      std::cout << "  " << k << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
  }
  if (report.contains("timing_ms")) std::cout << "timing_ms: " << report["timing_ms"].dump() << "\n";
}

std::string scalar_text(const Scalar& s) { return s.to_string(); }

void require(const Tensor3& T, Dims d, const std::string& what) {
  if (T.dims() != d)
    throw InputError(what + " needs a " + std::to_string(d[0]) + "x" + std::to_string(d[1]) + "x" +
                     std::to_string(d[2]) + " tensor, got " + T.shape());
}

int cmd_certify(const std::string& target, const Options& opt) {
  const TensorDocument doc = parse_document(read_input(opt.input));
  const Tensor3& T = doc.tensor;
  const auto start = std::chrono::steady_clock::now();
  json report{{"command", "certify"}, {"target", target}, {"dims", T.dims()}};
  Verdict v;
  std::optional<Verdict> sampled;
  if (target == "br3-333") {
    require(T, {3, 3, 3}, target);
    v = decide_333_br3(T);
  } else if (target == "br4-333") {
    require(T, {3, 3, 3}, target);
    v = decide_333_br4(T);
  } else if (target == "br4-334") {
    require(T, {3, 3, 4}, target);
    v = decide_334(T);
  } else if (target == "br4-444") {
    require(T, {4, 4, 4}, target);
    v = decide_444(T).verdict;
    if (opt.sampled) sampled = check_equations_444(T, {opt.trials, opt.seed, opt.bound, opt.symmetrizer_only});
  } else {
    v = decide_rank_l(T, {opt.trials, opt.seed, opt.bound});
  }
  report["verdict"] = to_json(v);
  if (sampled) report["sampled"] = to_json(*sampled);
  if (opt.timing)
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (opt.report == "json") {
    emit(opt, report);
  } else {
    emit(opt, report);
    print_verdict_text(std::cout, "verdict", v);
    if (sampled) print_verdict_text(std::cout, "sampled", *sampled);
  }
  return exit_code(v.outcome);
}

Dims dims_or(const Options& opt, Dims fallback) {
  if (opt.dims.empty()) return fallback;
  if (opt.dims.size() != 3) throw InputError("--dims needs three values m,n,l");
  for (auto d : opt.dims)
    if (d == 0) throw InputError("--dims entries must be positive");
  return {opt.dims[0], opt.dims[1], opt.dims[2]};
}

int cmd_gen(const std::string& generator, const Options& opt) {
  if (opt.bound < 1) throw InputError("--bound must be positive");
  TensorDocument doc;
  json params{{"bound", opt.bound}};
  if (generator == "salmon") {
    doc.tensor = salmon_counterexample(opt.seed, opt.bound);
  } else if (generator == "rank-r") {
    const Dims d = dims_or(opt, {4, 4, 4});
    if (opt.r < 1) throw InputError("--r must be positive");
    doc = document_from(random_rank_r(d[0], d[1], d[2], opt.r, opt.seed, opt.bound));
    params["r"] = opt.r;
  } else if (generator == "block-diag") {
    doc.tensor = block_diag_334(opt.seed, opt.bound);
  } else if (generator == "generic") {
    const Dims d = dims_or(opt, {3, 3, 3});
    doc.tensor = generic_tensor(d[0], d[1], d[2], opt.seed, opt.bound);
  } else if (generator == "symmetric-333") {
    doc.tensor = symmetric_slices_333(opt.seed, opt.bound);
  } else if (generator == "diagonal") {
    const Dims d = dims_or(opt, {4, 4, 4});
    if (d[0] != d[1] || d[1] != d[2]) throw InputError("diagonal needs equal dims");
    doc.tensor = diagonal_tensor(d[0]);
    doc.metadata.claimed_rank_bound = d[0];
    params = json::object();
  } else if (generator == "rank-one-slices") {
    const Dims d = dims_or(opt, {4, 4, 3});
    if (d[2] < 2 || d[2] > d[0] || d[2] > d[1]) throw InputError("rank-one-slices needs 2 <= l <= m, n");
    doc = document_from(independent_rank_one_slices(d[0], d[1], d[2], opt.seed, opt.bound));
  } else if (generator == "rank-one-slices-spread") {
    const Dims d = dims_or(opt, {3, 3, 4});
    if (d[2] < 4 || d[0] != d[2] - 1 || d[1] != d[2] - 1) throw InputError("rank-one-slices-spread needs m = n = l - 1 >= 3");
    doc = document_from(spread_rank_one_slices(d[2], opt.seed, opt.bound));
  } else {
    throw InputError("unknown generator " + generator);
  }
  doc.metadata.generator = generator;
  if (generator != "diagonal") doc.metadata.seed = opt.seed;
  doc.metadata.params = params;
  write_output(opt.output, serialize(doc));
  return 0;
}

int cmd_eval(const std::string& quantity, const Options& opt) {
  json report{{"command", "eval"}, {"quantity", quantity}};
  json values = json::object();
  const auto start = std::chrono::steady_clock::now();
  if (quantity == "degrees") {
    if (opt.m < 1 || opt.n < 1) throw InputError("--m and --n must be positive");
    values["segre"] = segre_degree(opt.m, opt.n).get_str();
    if (opt.m >= 2) values["veronese"] = veronese_degree(opt.m).get_str();
    values["m"] = opt.m;
    values["n"] = opt.n;
  } else {
    const TensorDocument doc = parse_document(read_input(opt.input));
    const Tensor3& T = doc.tensor;
    report["dims"] = T.dims();
    if (quantity == "strassen") {
      require(T, {3, 3, 3}, quantity);
      const SliceSpace S = slice_space(T, 3);
      values["det_CR"] = scalar_text(strassen_value(S.slices[0], S.slices[1], S.slices[2], Side::R));
      values["det_CL"] = scalar_text(strassen_value(S.slices[0], S.slices[1], S.slices[2], Side::L));
    } else if (quantity == "ranksCLCR") {
      if (T.m() != T.n()) throw InputError("ranksCLCR needs square mode-3 slices, got " + T.shape());
      const SliceSpace S = slice_space(T, 3);
      values["rank_CL"] = rank(build_system(S.slices, Side::L).coeff);
      values["rank_CR"] = rank(build_system(S.slices, Side::R).coeff);
      values["columns"] = T.m() * T.m();
    } else if (quantity == "quadric-rank") {
      if (T.l() < 2 || T.m() < 2 || T.n() < 2) throw InputError("quadric-rank needs m, n, l >= 2");
      const QuadricSpace Q = quadric_space(slice_space(T, 3).slices);
      values["rank_C"] = Q.dim_span();
      values["dim_S"] = Q.dim_span();
      values["dim_perp"] = Q.perp_basis.size();
      values["columns"] = binomial(T.l() + 1, 2);
    } else if (quantity == "numeric") {
      const auto d = decompose_numeric(T, opt.r, 1e-8, opt.seed);
      values["certified"] = false;
      values["found"] = d.has_value();
      if (d) {
        values["residual"] = d->residual;
        json factors = json::array();
        for (const auto& f : d->factors) {
          json term = json::array();
          for (const auto& vec : f) {
            json a = json::array();
            for (const auto& z : vec) a.push_back({z.real(), z.imag()});
            term.push_back(a);
          }
          factors.push_back(term);
        }
        values["factors"] = factors;
      }
    } else {
      throw InputError("unknown quantity " + quantity);
    }
  }
  report["values"] = values;
  if (opt.timing)
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(opt, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact border-rank certification for small tensors over Q(i)"};
  app.require_subcommand(1);
  Options opt;
  std::string target, generator, quantity;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--report", opt.report, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timing", opt.timing, "Include wall-clock timing in the report");
  };

  auto* certify = app.add_subcommand("certify", "Decide a border-rank condition");
  certify->add_option("target", target, "br3-333 | br4-333 | br4-334 | br4-444 | rank-l")
      ->required()
      ->check(CLI::IsMember({"br3-333", "br4-333", "br4-334", "br4-444", "rank-l"}));
  certify->add_option("input", opt.input, "Tensor document (default: stdin)");
  certify->add_option("--trials", opt.trials, "Trials for randomized conditions")->check(CLI::PositiveNumber);
  certify->add_option("--seed", opt.seed, "Seed for randomized conditions");
  certify->add_option("--bound", opt.bound, "Entry bound for random samples")->check(CLI::PositiveNumber);
  certify->add_flag("--sampled", opt.sampled, "br4-444: also run the sampled equation check");
  certify->add_flag("--symmetrizer-only", opt.symmetrizer_only, "Sampled check without commutation triples");
  add_common(certify);

  auto* gen = app.add_subcommand("gen", "Generate a tensor document");
  gen->add_option("generator", generator,
                  "salmon | rank-r | block-diag | generic | symmetric-333 | diagonal | rank-one-slices | "
                  "rank-one-slices-spread")
      ->required();
  gen->add_option("--seed", opt.seed, "Generator seed");
  gen->add_option("--bound", opt.bound, "Entry bound");
  gen->add_option("--dims", opt.dims, "m,n,l")->delimiter(',')->expected(3);
  gen->add_option("--r", opt.r, "Number of rank-one terms");
  gen->add_option("-o,--output", opt.output, "Output file (default: stdout)");

  auto* eval = app.add_subcommand("eval", "Evaluate an exact quantity");
  eval->add_option("quantity", quantity, "strassen | ranksCLCR | quadric-rank | degrees | numeric")->required();
  eval->add_option("input", opt.input, "Tensor document (default: stdin)");
  eval->add_option("--m", opt.m, "degrees: m");
  eval->add_option("--n", opt.n, "degrees: n");
  eval->add_option("--r", opt.r, "numeric: target rank");
  eval->add_option("--seed", opt.seed, "numeric: seed");
  add_common(eval);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*certify) return cmd_certify(target, opt);
    if (*gen) return cmd_gen(generator, opt);
    return cmd_eval(quantity, opt);
  } catch (const std::exception& e) {
    std::cerr << "brank: " << e.what() << "\n";
    if (opt.report == "json") std::cout << json{{"command", app.get_subcommands().front()->get_name()}, {"error", e.what()}}.dump(2) << "\n";
    return kExitInput;
  }
}
