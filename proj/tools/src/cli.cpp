#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gafunc/charpoly.hpp"
#include "gafunc/errors.hpp"
#include "gafunc/matrix.hpp"
#include "gafunc/minpoly.hpp"
#include "gafunc/mv_text.hpp"

namespace gafunc::cli {

using Json = nlohmann::ordered_json;
using gafunc::to_string;

std::string to_string(Command c) {
  switch (c) {
    case Command::charpoly: return "charpoly";
    case Command::minpoly: return "minpoly";
    case Command::roots: return "roots";
    case Command::basis: return "basis";
    case Command::func: return "func";
    case Command::matfunc: return "matfunc";
    case Command::verify: return "verify";
    case Command::rank: return "rank";
  }
  return "?";
}

Command parse_command(std::string_view text) {
  for (Command c : {Command::charpoly, Command::minpoly, Command::roots, Command::basis, Command::func,
                    Command::matfunc, Command::verify, Command::rank}) {
    if (text == to_string(c)) return c;
  }
  throw ParseError("unknown subcommand '" + std::string(text) + "'");
}

namespace {

std::string read_input(const RunConfig& config, std::istream& in) {
  std::string text;
  if (config.input.empty()) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else if (std::error_code ec; std::filesystem::is_regular_file(config.input, ec)) {
    std::ifstream file(config.input);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  } else {
    text = config.input;
  }
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw ParseError("empty input");
  return text;
}

std::string trimmed(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Json complex_json(const Complex& z, int digits) { return Json{{"re", z.re().to_string(digits)}, {"im", z.im().to_string(digits)}}; }

Json rational_list(const Polynomial<Rational>& p) {
  Json out = Json::array();
  for (const Rational& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

Json roots_json(const RootSet& roots, int digits) {
  Json out = Json::array();
  for (const Root& r : roots.entries) {
    Json entry = complex_json(r.value, digits);
    entry["multiplicity"] = r.multiplicity;
    entry["exact"] = r.exact ? Json(to_string(*r.exact)) : Json(nullptr);
    out.push_back(std::move(entry));
  }
  return out;
}

void print_roots(const RootSet& roots, int digits, std::ostream& out) {
  for (const Root& r : roots.entries) {
    out << (r.exact ? to_string(*r.exact) : to_string(r.value, digits)) << "  multiplicity " << r.multiplicity
        << '\n';
  }
}

class Runner {
 public:
  Runner(const RunConfig& config, std::istream& in, std::ostream& out) : config_(config), in_(in), out_(out) {}

  int run() {
    record_["command"] = to_string(config_.command);
    if (config_.command == Command::matfunc) return matfunc();
    a_ = parse_multivector(read_input(config_, in_), config_.signature);
    record_["signature"] = {config_.signature.p(), config_.signature.q()};
    record_["input"] = format_multivector(a_);
    switch (config_.command) {
      case Command::charpoly: charpoly(); break;
      case Command::minpoly: minpoly(); break;
      case Command::roots: roots(); break;
      case Command::basis: basis(); break;
      case Command::func: func(); break;
      case Command::verify: return verify();
      case Command::rank: rank(); break;
      case Command::matfunc: break;
    }
    emit();
    return kOk;
  }

 private:
  int digits() const { return config_.precision; }

  void emit() {
    if (config_.structured) out_ << record_.dump(2) << '\n';
    else out_ << text_.str();
  }

  void charpoly() {
    const CharPolyResult chi = char_poly(a_);
    Json coefficients = Json::array();
    for (const Rational& c : chi.coefficients) coefficients.push_back(to_string(c));
    record_["coefficients"] = coefficients;
    record_["polynomial"] = to_string(chi.monic());
    for (std::size_t k = 0; k < chi.coefficients.size(); ++k) {
      text_ << (k ? " " : "") << to_string(chi.coefficients[k]);
    }
    text_ << '\n' << to_string(chi.monic()) << '\n';
  }

  void minpoly() {
    const MinPolyResult mp = minimal_poly(a_);
    record_["minpoly"] = to_string(mp.mu);
    record_["coefficients"] = rational_list(mp.mu);
    text_ << to_string(mp.mu) << '\n';
  }

  void rank() {
    const int r = mv_rank(a_);
    record_["rank"] = r;
    text_ << r << '\n';
  }

  Polynomial<Rational> annihilator() const {
    return config_.method == Method::charpoly ? char_poly(a_).monic() : minimal_poly(a_).mu;
  }

  void roots() {
    const Polynomial<Rational> mu = annihilator();
    const RootSet rs = extract_roots(mu, Precision(digits()));
    record_["minpoly"] = to_string(mu);
    record_["digits"] = digits();
    record_["achieved_digits"] = rs.achieved_digits;
    record_["roots"] = roots_json(rs, digits());
    print_roots(rs, digits(), text_);
  }

  void basis() {
    const Polynomial<Rational> mu = annihilator();
    const int working = digits() + kGuardDigits;
    const RootSet rs = extract_roots(mu, Precision(working));
    const SpectralBasis b = config_.method == Method::classical ? classical_basis(mu, rs).as_spectral()
                                                                 : build_spectral_basis(mu, rs);
    record_["minpoly"] = to_string(mu);
    record_["method"] = to_string(config_.method);
    record_["digits"] = digits();
    record_["roots"] = roots_json(rs, digits());
    Json list = Json::array();
    for (std::size_t i = 0; i < b.q.size(); ++i) {
      for (int k = 0; k < static_cast<int>(b.q[i].size()); ++k) {
        const std::string poly = gafunc::to_string(b.Q(i, k), digits());
        list.push_back(Json{{"root", i + 1}, {"k", k}, {"polynomial", poly}});
        text_ << "Q_" << i + 1 << "^" << k << " = " << poly << '\n';
      }
    }
    record_["basis"] = list;
  }

  FunctionOptions options() const { return {config_.method, nullptr}; }

  void describe(const FunctionDiagnostics& d, const BigFloat& imag_residual) {
    record_["function"] = config_.function;
    record_["method"] = to_string(d.method);
    record_["digits"] = digits();
    record_["working_digits"] = d.working_digits;
    record_["annihilator"] = to_string(d.annihilator);
    record_["max_derivative_order"] = d.max_derivative_order;
    record_["max_imag_residual"] = imag_residual.to_string(6);
  }

  void func() {
    const FunctionResult r = mv_function(a_, FunctionSpec::parse(config_.function), Precision(digits()), options());
    describe(r.diagnostics, r.max_imag_residual);
    const auto& order = blade_order(a_.signature());
    const int n = a_.signature().n();
    if (r.real_form && !config_.complex_form) {
      Json real = Json::object();
      for (std::size_t i = 0; i < order.size(); ++i) real[blade_name(order[i].mask, n)] = (*r.real_form)[i].to_string(digits());
      record_["real"] = real;
      text_ << format_multivector(*r.real_form, digits()) << '\n';
    } else {
      Json complex = Json::object();
      for (std::size_t i = 0; i < order.size(); ++i) complex[blade_name(order[i].mask, n)] = complex_json(r.value[i], digits());
      record_["complex"] = complex;
      text_ << format_multivector(r.value, digits()) << '\n';
    }
  }

  int verify() {
    const Precision precision(digits());
    const FunctionResult e = mv_function(a_, FunctionSpec::exp(), precision, options());
    const BigFloat residual = verify_exponential(a_, e, precision, options());
    const BigFloat tolerance = pow10(-(digits() - 10), digits());
    const bool passed = residual < tolerance;
    record_["method"] = to_string(config_.method);
    record_["digits"] = digits();
    record_["residual"] = residual.to_string(6);
    record_["tolerance"] = tolerance.to_string(6);
    record_["passed"] = passed;
    text_ << "residual " << residual.to_string(6) << (passed ? " ok" : " FAILED") << '\n';
    emit();
    return passed ? kOk : kOtherError;
  }

  int matfunc() {
    const ExactMatrix m = parse_matrix(read_input(config_, in_));
    const MatrixFunctionResult r = matrix_function(m, FunctionSpec::parse(config_.function), Precision(digits()),
                                                   config_.method);
    record_["input"] = format_matrix(m);
    describe(r.diagnostics, r.max_imag_residual);
    Json rows = Json::array();
    if (r.real_form && !config_.complex_form) {
      for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back((*r.real_form)(i, j).to_string(digits()));
        rows.push_back(std::move(row));
      }
      record_["real"] = rows;
      text_ << format_matrix(*r.real_form, digits());
    } else {
      for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(complex_json(r.value(i, j), digits()));
        rows.push_back(std::move(row));
      }
      record_["complex"] = rows;
      text_ << format_matrix(r.value, digits());
    }
    emit();
    return kOk;
  }

  const RunConfig& config_;
  std::istream& in_;
  std::ostream& out_;
  Multivector<Rational> a_{Signature(1, 0)};
  Json record_ = Json::object();
  std::ostringstream text_;
};

int report(std::ostream& err, const char* kind, const std::string& message, int code) {
  err << Json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << '\n';
  return code;
}

Signature parse_signature(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("signature must look like p,q");
  try {
    std::size_t used_p = 0, used_q = 0;
    const std::string p = trimmed(text.substr(0, comma)), q = trimmed(text.substr(comma + 1));
    const int pi = std::stoi(p, &used_p), qi = std::stoi(q, &used_q);
    if (used_p != p.size() || used_q != q.size()) throw std::invalid_argument("trailing characters");
    return Signature(pi, qi);
  } catch (const std::logic_error&) {
    throw ParseError("signature must look like p,q, got '" + text + "'");
  }
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (config.precision < kMinDigits) {
      throw ParseError("precision must be at least " + std::to_string(kMinDigits) + " digits");
    }
    return Runner(config, in, out).run();
  } catch (const ParseError& e) {
    return report(err, "parse_error", e.what(), kParseError);
  } catch (const SignatureMismatch& e) {
    return report(err, "parse_error", e.what(), kParseError);
  } catch (const SingularFunction& e) {
    return report(err, "singular_function", e.what(), kSingularFunction);
  } catch (const NonConvergence& e) {
    return report(err, "non_convergence", e.what(), kNonConvergence);
  } catch (const InconsistentMultiplicity& e) {
    return report(err, "non_convergence", e.what(), kNonConvergence);
  } catch (const RealnessFailure& e) {
    return report(err, "realness_failure", e.what(), kRealnessFailure);
  } catch (const std::exception& e) {
    return report(err, "error", e.what(), kOtherError);
  }
}

int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analytic functions of Clifford multivectors and matrices"};
  app.require_subcommand(1, 1);

  RunConfig config;
  std::string signature = "3,0", method = "recursive", output = "text";
  bool use_charpoly = false;

  const std::vector<std::pair<Command, const char*>> commands{
      {Command::charpoly, "characteristic polynomial coefficients C_(0)..C_(d)"},
      {Command::minpoly, "monic minimal polynomial"},
      {Command::roots, "distinct roots of the minimal polynomial with multiplicities"},
      {Command::basis, "generalized spectral basis polynomials Q_i^k"},
      {Command::func, "f(A) for a multivector A"},
      {Command::matfunc, "f(M) for a square rational matrix M"},
      {Command::verify, "residual of A exp(A) against d/dt exp(tA) at t = 1"},
      {Command::rank, "degree of the minimal polynomial"},
  };
  for (const auto& [command, help] : commands) {
    CLI::App* sub = app.add_subcommand(to_string(command), help);
    sub->fallthrough();
    sub->callback([&config, command = command] { config.command = command; });
  }

  app.add_option("--signature", signature, "algebra signature p,q")->capture_default_str();
  app.add_option("--function", config.function, "exp|log|sqrt|sin|cos|inv|pow:alpha")->capture_default_str();
  app.add_option("--precision", config.precision, "decimal digits (>= 16)")
      ->check(CLI::Range(kMinDigits, 100000))
      ->capture_default_str();
  app.add_option("--input", config.input, "file path or inline text; standard input when absent");
  app.add_option("--output", output, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--method", method, "recursive|classical|charpoly")
      ->check(CLI::IsMember({"recursive", "classical", "charpoly"}))
      ->capture_default_str();
  app.add_flag("--complex-form", config.complex_form, "print complex coefficients before real reduction");
  app.add_flag("--use-charpoly", use_charpoly, "substitute the characteristic polynomial for the minimal one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report(err, "usage", e.what(), kOtherError);
  }

  try {
    config.signature = parse_signature(signature);
    config.method = parse_method(method);
  } catch (const Error& e) {
    return report(err, "parse_error", e.what(), kParseError);
  }
  if (use_charpoly) {
    if (method == "classical") return report(err, "usage", "--use-charpoly conflicts with --method classical", kOtherError);
    config.method = Method::charpoly;
  }
  config.structured = output == "structured";
  return run(config, in, out, err);
}

}  // namespace gafunc::cli
