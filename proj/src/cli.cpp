#include "hermipade/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "hermipade/cheb_approx.hpp"
#include "hermipade/errors.hpp"
#include "report.hpp"

namespace hermipade::cli {
namespace {

using report::Json;

// Input problems that map to a specific exit code.
struct InputError : std::runtime_error {
  InputError(const std::string& what, int code) : std::runtime_error(what), code(code) {}
  int code;
};

struct Job {
  std::string input;
  std::optional<int> n;
  std::vector<int> m;
  std::string kind = "auto";
  std::string mode;
  int guard = kDefaultGuard;
  std::string out;
  int grid = 0;
  bool cancel_common_factors = false;
};

struct InputDoc {
  Basis basis = Basis::power;
  std::vector<std::vector<std::string>> coeffs;
  std::vector<bool> halved;
  std::optional<int> n;
  std::vector<int> m;
  std::vector<double> radii;
};

Json load_json(const std::string& path, int missing_code) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path, missing_code);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path + ": malformed JSON (" + e.what() + ")", kUsage);
  }
}

double parse_radius(const Json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "Infinity") return std::numeric_limits<double>::infinity();
    return parse_rational(s).get_d();
  }
  throw InputError("radii entries must be numbers or \"inf\"", kUsage);
}

std::string coefficient_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return to_string(v.get<double>());
  throw InputError("coefficients must be strings or numbers", kUsage);
}

InputDoc parse_input(const Json& j) {
  InputDoc doc;
  try {
    doc.basis = parse_basis(j.at("basis").get<std::string>());
    if (doc.basis != Basis::power && !is_chebyshev(doc.basis)) {
      throw InputError("basis must be \"T\", \"U\" or \"power\"", kUsage);
    }
    for (const auto& s : j.at("series")) {
      std::vector<std::string> c;
      for (const auto& v : s.at("coeffs")) c.push_back(coefficient_text(v));
      doc.coeffs.push_back(std::move(c));
      doc.halved.push_back(s.value("halved_constant", false));
    }
    if (j.contains("n")) doc.n = j.at("n").get<int>();
    if (j.contains("m")) doc.m = j.at("m").get<std::vector<int>>();
    if (j.contains("radii")) {
      for (const auto& r : j.at("radii")) doc.radii.push_back(parse_radius(r));
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed input: ") + e.what(), kUsage);
  }
  if (doc.coeffs.empty()) throw InputError("input has no series", kUsage);
  return doc;
}

MultiIndex resolve_index(const Job& job, const InputDoc& doc) {
  const auto n = job.n ? job.n : doc.n;
  const auto& m = job.m.empty() ? doc.m : job.m;
  if (!n) throw InputError("n missing (input field \"n\" or --n)", kUsage);
  if (m.empty()) throw InputError("m missing (input field \"m\" or --m)", kUsage);
  if (m.size() != doc.coeffs.size()) {
    throw InputError("m list has " + std::to_string(m.size()) + " entries for " + std::to_string(doc.coeffs.size()) +
                         " series",
                     kUsage);
  }
  return MultiIndex(*n, m);
}

// Basis used for the computation. Power input with an explicit kind is read
// as the associated series of that Chebyshev kind.
Basis resolve_basis(const std::string& kind, Basis given) {
  if (kind == "auto") return given;
  const Basis want = kind == "first" ? Basis::chebyshev_T : Basis::chebyshev_U;
  if (given == Basis::power || given == want) return want;
  throw KindMismatch("--kind " + kind + " does not match basis " + std::string(basis_name(given)));
}

template <typename T>
SeriesSystem<T> build_system(const InputDoc& doc, Basis basis) {
  std::vector<TruncatedSeries<T>> fs;
  for (std::size_t j = 0; j < doc.coeffs.size(); ++j) {
    std::vector<T> c;
    for (const auto& s : doc.coeffs[j]) c.push_back(ScalarTraits<T>::parse(s));
    fs.emplace_back(basis, std::move(c), doc.halved[j]);
  }
  return SeriesSystem<T>(std::move(fs));
}

AnalyticityInfo build_radii(const InputDoc& doc) {
  if (doc.radii.empty()) throw InputError("radii missing (input field \"radii\")", kUsage);
  if (doc.radii.size() != doc.coeffs.size()) throw InputError("radii count does not match series count", kUsage);
  return AnalyticityInfo(doc.radii);
}

std::string join(const std::vector<std::string>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s + "]";
}

template <typename T>
std::vector<std::string> strings(const std::vector<T>& c) {
  std::vector<std::string> out;
  for (const auto& x : c) out.push_back(to_string(x));
  return out;
}

void emit(const Job& job, const Json& doc, const std::string& summary, std::ostream& out, std::ostream& err) {
  const std::string text = doc.dump(2) + "\n";
  if (job.out.empty()) {
    out << text;
    err << summary;
    return;
  }
  std::ofstream f(job.out, std::ios::binary);
  if (!f) throw InputError("cannot write " + job.out, kUsage);
  f << text;
  out << summary;
}

// Algebraic stage only, for power-basis input without a Chebyshev kind.
template <typename T>
PipelineResult<T> algebraic_pipeline(const SeriesSystem<T>& f, const MultiIndex& idx, const AnalyticityInfo& radii,
                                     const PipelineOptions& options) {
  require_length(f, idx, options.guard);
  PipelineResult<T> out;
  out.idx = idx;
  auto& cond = out.conditions;
  out.jacobi = jacobi_exists(f, idx, options.guard);
  cond.jacobi = {out.jacobi.exists ? ConditionStatus::passed : ConditionStatus::failed, out.jacobi.certificate};
  if (!out.jacobi.exists) {
    out.status = PipelineStatus::degenerate;
    return out;
  }
  out.radius = check_radius(f, radii);
  cond.radius = {out.radius->pass ? ConditionStatus::passed : ConditionStatus::failed, out.radius->notes};
  out.poles = options.cancel_common_factors ? check_poles_reduced(*out.jacobi.approx, options.pole_tol)
                                            : check_poles(out.jacobi.approx->Q, options.pole_tol);
  cond.poles = {out.poles->pass ? ConditionStatus::passed : ConditionStatus::failed,
                out.poles->pass ? "no root of Q in the closed unit disk" : "Q has roots in the closed unit disk"};
  out.algebraic_residual = residual_window(*out.jacobi.approx, f, idx, options.guard, options.tol);
  if (!cond.all_passed()) out.status = PipelineStatus::condition_failed;
  return out;
}

template <typename T>
std::string summarize(const PipelineResult<T>& r, const MultiIndex& idx, const std::string& mode, bool chebyshev) {
  std::ostringstream s;
  s << "hermipade approximate " << idx.to_string() << ", " << mode << " mode";
  if (chebyshev) s << ", " << kind_name(r.kind) << " kind";
  s << "\nstatus: " << status_name(r.status) << "\n";
  s << "H = " << to_string(r.jacobi.hadamard.value) << ", nullity " << r.jacobi.nullity << "\n";
  const auto line = [&](int i, const char* what, const ConditionCheck& c) {
    s << "condition " << i << " (" << what << "): " << status_name(c.status);
    if (!c.detail.empty()) s << " - " << c.detail;
    s << "\n";
  };
  line(1, "existence", r.conditions.jacobi);
  line(2, "radius > 1", r.conditions.radius);
  line(3, "no poles in closed disk", r.conditions.poles);
  if (r.conditions.hint) s << "hint: " << *r.conditions.hint << "\n";
  if (r.jacobi.approx) {
    s << "Q = " << join(strings(r.jacobi.approx->Q.coeffs())) << "\n";
    for (std::size_t j = 0; j < r.jacobi.approx->P.size(); ++j) {
      s << "P_" << j + 1 << " = " << join(strings(r.jacobi.approx->P[j].coeffs())) << "\n";
    }
  }
  if (r.cheb) {
    s << "Q_hat (T) = " << join(strings(r.cheb->Q.coeffs())) << "\n";
    for (std::size_t j = 0; j < r.cheb->P.size(); ++j) {
      s << "P_hat_" << j + 1 << " (" << basis_name(r.cheb->P[j].basis())
        << ") = " << join(strings(r.cheb->P[j].coeffs())) << "\n";
    }
  }
  const ResidualReport* res = r.cheb_residual ? &*r.cheb_residual
                              : r.algebraic_residual ? &*r.algebraic_residual
                                                     : nullptr;
  if (res) {
    for (std::size_t j = 0; j < res->functions.size(); ++j) {
      const auto& e = res->functions[j];
      s << "residual f_" << j + 1 << " (" << basis_name(res->basis) << "): indices <= " << res->contract_index
        << " vanish, first nonzero index "
        << (e.first_nonzero ? std::to_string(*e.first_nonzero) : std::string("none in window")) << "\n";
    }
  }
  return s.str();
}

int exit_code(PipelineStatus s) {
  switch (s) {
    case PipelineStatus::ok: return kOk;
    case PipelineStatus::condition_failed: return kConditionFailed;
    case PipelineStatus::degenerate: break;
  }
  return kDegenerate;
}

Json header(const char* command, const std::string& mode, const MultiIndex& idx, int guard) {
  Json j;
  j["command"] = command;
  j["mode"] = mode;
  j["n"] = idx.n;
  j["m"] = idx.m_vec;
  j["guard"] = guard;
  j["length_policy"] = "every series needs at least n + 2m + guard = " +
                       std::to_string(required_length(idx, guard)) + " coefficients";
  return j;
}

template <typename T>
int approximate(const Job& job, const InputDoc& doc, std::ostream& out, std::ostream& err) {
  const auto idx = resolve_index(job, doc);
  const Basis basis = resolve_basis(job.kind, doc.basis);
  const auto system = build_system<T>(doc, basis);
  const auto radii = build_radii(doc);

  PipelineOptions options;
  options.guard = job.guard;
  options.cancel_common_factors = job.cancel_common_factors;
  if (job.grid > 0) options.grid = job.grid;

  const bool chebyshev = is_chebyshev(basis);
  const auto result = chebyshev ? full_pipeline(system, idx, radii, options)
                                : algebraic_pipeline(system, idx, radii, options);
  Json doc_json = header("approximate", job.mode, idx, job.guard);
  doc_json["input"] = report::series_system(system, radii);
  const Json body = report::pipeline(result);
  for (const auto& [key, value] : body.items()) doc_json[key] = value;
  if (!chebyshev) doc_json.erase("kind");
  emit(job, doc_json, summarize(result, idx, job.mode, chebyshev), out, err);
  return exit_code(result.status);
}

template <typename T>
int check(const Job& job, const InputDoc& doc, std::ostream& out, std::ostream& err) {
  const auto idx = resolve_index(job, doc);
  const Basis basis = resolve_basis(job.kind, doc.basis);
  const auto system = build_system<T>(doc, basis);
  const auto radii = build_radii(doc);

  std::vector<TruncatedSeries<T>> power;
  for (const auto& f : system) {
    power.push_back(basis == Basis::power ? f : associate_series(f).power);
  }
  const SeriesSystem<T> f(std::move(power));
  require_length(f, idx, job.guard);
  const auto jr = jacobi_exists(f, idx, job.guard);
  const auto rc = check_radius(f, radii);

  Json j = header("check", job.mode, idx, job.guard);
  j["input"] = report::series_system(system, radii);
  j["hadamard"] = report::hadamard(jr.hadamard);
  j["nullity"] = jr.nullity;
  j["exists"] = jr.exists;
  j["existence_certificate"] = jr.certificate;
  j["radius"] = report::radius(rc);

  std::ostringstream s;
  s << "H = " << to_string(jr.hadamard.value) << (jr.hadamard.is_zero ? " (zero)" : "") << "\n";
  if (jr.hadamard.warning) s << "warning: " << *jr.hadamard.warning << "\n";
  s << "nullity = " << jr.nullity << "\n";
  s << "exists: " << (jr.exists ? "yes" : "no") << " (" << jr.certificate << ")\n";
  s << "radius: " << (rc.pass ? "pass" : "fail");
  if (!rc.notes.empty()) s << " - " << rc.notes;
  s << "\n";

  int code = kOk;
  if (!jr.exists) {
    code = kDegenerate;
  } else {
    const auto pc = job.cancel_common_factors ? check_poles_reduced(*jr.approx, 1e-9) : check_poles(jr.approx->Q);
    j["poles"] = report::poles(pc);
    s << "poles: " << (pc.pass ? "pass" : "fail") << ", " << pc.inside.size() << " root(s) in the closed unit disk\n";
    if (!pc.pass || !rc.pass) code = kConditionFailed;
  }
  emit(job, j, s.str(), out, err);
  return code;
}

// Chebyshev-Gauss points cos(pi (2k+1) / (2N)), ascending.
std::vector<double> eval_grid(int n) {
  std::vector<double> x;
  for (int k = n - 1; k >= 0; --k) {
    x.push_back(std::cos(std::numbers::pi * (2.0 * k + 1.0) / (2.0 * n)));
  }
  if (n % 2 == 1) x[static_cast<std::size_t>(n / 2)] = 0.0;
  return x;
}

std::vector<double> doubles(const Json& arr) {
  std::vector<double> out;
  for (const auto& v : arr) out.push_back(parse_rational(v.get<std::string>()).get_d());
  return out;
}

int eval(const Job& job, std::ostream& out) {
  const Json rep = load_json(job.input, kMissingArtifact);
  if (job.grid < 1) throw InputError("--grid must be at least 1", kUsage);

  std::vector<TruncatedSeries<double>> f;
  Basis basis;
  try {
    const auto& in = rep.at("input");
    basis = parse_basis(in.at("basis").get<std::string>());
    for (const auto& s : in.at("series")) {
      f.emplace_back(basis, doubles(s.at("coeffs")), s.value("halved_constant", false));
    }
  } catch (const Json::exception& e) {
    throw InputError(job.input + ": report has no usable input section (" + e.what() + ")", kMissingArtifact);
  }

  std::function<double(std::size_t, double)> approx;
  if (rep.contains("chebyshev")) {
    const auto& c = rep.at("chebyshev");
    const TruncatedSeries<double> Q(Basis::chebyshev_T, doubles(c.at("Q")));
    const Basis pb = parse_basis(c.at("P_basis").get<std::string>());
    std::vector<TruncatedSeries<double>> P;
    for (const auto& p : c.at("P")) P.emplace_back(pb, doubles(p));
    approx = [Q, P](std::size_t j, double x) { return evaluate(P[j], x) / evaluate(Q, x); };
  } else if (rep.contains("algebraic")) {
    const auto& a = rep.at("algebraic");
    const Polynomial<double> Q(doubles(a.at("Q")));
    std::vector<Polynomial<double>> P;
    for (const auto& p : a.at("P")) P.emplace_back(doubles(p));
    approx = [Q, P](std::size_t j, double x) { return P[j](x) / Q(x); };
  } else {
    throw InputError(job.input + ": report contains no approximant", kMissingArtifact);
  }

  std::ostringstream csv;
  csv << "j,x,f,approximant,difference\n";
  const auto xs = eval_grid(job.grid);
  for (std::size_t j = 0; j < f.size(); ++j) {
    for (double x : xs) {
      const double fx = evaluate(f[j], x);
      const double px = approx(j, x);
      csv << j + 1 << "," << to_string(x) << "," << to_string(fx) << "," << to_string(px) << ","
          << to_string(fx - px) << "\n";
    }
  }
  if (job.out.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(job.out, std::ios::binary);
    if (!file) throw InputError("cannot write " + job.out, kUsage);
    file << csv.str();
  }
  return kOk;
}

std::string resolve_mode(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("HERMIPADE_MODE"); env && *env) {
    const std::string m(env);
    if (m != "exact" && m != "float") throw InputError("HERMIPADE_MODE must be exact or float, got " + m, kUsage);
    return m;
  }
  return "exact";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermite-Pade, trigonometric Hermite-Jacobi and Hermite-Chebyshev approximants", "hermipade"};
  app.require_subcommand(1);
  Job job;

  const auto common = [&job](CLI::App* sub) {
    sub->add_option("--input", job.input, "input JSON file")->required();
    sub->add_option("--n", job.n, "n of the multi-index (overrides the input)");
    sub->add_option("--m", job.m, "comma-separated m_1,...,m_k (overrides the input)")->delimiter(',');
    sub->add_option("--kind", job.kind, "first | second | auto")
        ->check(CLI::IsMember({"first", "second", "auto"}));
    sub->add_option("--mode", job.mode, "exact | float (default $HERMIPADE_MODE, else exact)")
        ->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--guard", job.guard, "extra coefficients beyond n + 2m")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", job.out, "report path (default: stdout)");
    sub->add_flag("--cancel-common-factors", job.cancel_common_factors,
                  "pole test on Q / gcd(Q, P_j) (exact mode)");
  };
  auto* approx_cmd = app.add_subcommand("approximate", "run the full approximation pipeline");
  common(approx_cmd);
  approx_cmd->add_option("--grid", job.grid, "initial sampling grid for the DCT cross-check")
      ->check(CLI::PositiveNumber);
  auto* check_cmd = app.add_subcommand("check", "determinant, nullity, pole and radius certificate");
  common(check_cmd);
  auto* eval_cmd = app.add_subcommand("eval", "tabulate a report's approximant against its input series");
  eval_cmd->add_option("--input", job.input, "report JSON from approximate")->required();
  eval_cmd->add_option("--grid", job.grid, "number of Chebyshev points")->default_val(33);
  eval_cmd->add_option("--out", job.out, "CSV path (default: stdout)");

  std::vector<std::string> argv_store{"hermipade"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (eval_cmd->parsed()) return eval(job, out);
    job.mode = resolve_mode(job.mode);
    const InputDoc doc = parse_input(load_json(job.input, kUsage));
    const bool exact = job.mode == "exact";
    if (approx_cmd->parsed()) {
      return exact ? approximate<Rational>(job, doc, out, err) : approximate<double>(job, doc, out, err);
    }
    return exact ? check<Rational>(job, doc, out, err) : check<double>(job, doc, out, err);
  } catch (const InputError& e) {
    err << "hermipade: " << e.what() << "\n";
    return e.code;
  } catch (const ContractViolation& e) {
    err << "hermipade: verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const PoleOnSegment& e) {
    err << "hermipade: " << e.what() << "\n";
    return kConditionFailed;
  } catch (const DegenerateError& e) {
    err << "hermipade: " << e.what() << "\n";
    return kDegenerate;
  } catch (const Error& e) {
    err << "hermipade: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace hermipade::cli
