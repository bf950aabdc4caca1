#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "hypergen/distribution.hpp"
#include "hypergen/moments.hpp"
#include "hypergen/verify.hpp"

namespace hypergen::cli {
namespace {

std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(std::begin(buffer), std::end(buffer), value);
  return std::string(buffer, ec == std::errc() ? end : buffer);
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw DomainError("not a finite number: '" + text + "'");
  }
  return value;
}

std::int64_t parse_bound(const Environment& env) {
  if (!env.n_max_override) return oracle::kDefaultBound;
  std::int64_t value = 0;
  const auto& text = *env.n_max_override;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    throw DomainError("HYPERGEN_N_MAX must be a nonnegative integer, got '" + text + "'");
  }
  return value;
}

std::string theorem_label(BranchTag tag) { return tag == BranchTag::ThmA ? "3a" : "3b"; }

std::string latex(const HypergeomParams& p) {
  const auto N = p.population();
  const auto K = p.white();
  const auto n = p.sample();
  const auto tag = canonical_branch(p);
  const auto form = branch_form(p, tag);
  auto fact = [](std::int64_t v) { return std::to_string(v) + "!"; };
  std::ostringstream os;
  os << "% branch " << theorem_label(tag) << "\n";
  os << "G_X(z) = ";
  if (tag == BranchTag::ThmA) {
    os << "\\frac{" << fact(N - n) << "\\," << fact(N - K) << "}{" << fact(N) << "\\,"
       << fact(N - K - n) << "}\\,";
  } else {
    os << "\\frac{" << fact(n) << "\\," << fact(K) << "}{" << fact(N) << "\\,"
       << fact(n + K - N) << "}\\,z^{" << form.power << "}\\,";
  }
  const auto& s = form.series;
  os << "{}_2F_1(" << s.a() << ", " << s.b() << "; " << s.c() << "; z)\n";
  return os.str();
}

struct PositionalParams {
  std::int64_t N = 0;
  std::int64_t K = 0;
  std::int64_t n = 0;
};

void add_params(CLI::App* cmd, PositionalParams& p) {
  cmd->add_option("N", p.N, "population size")->required();
  cmd->add_option("K", p.K, "number of white balls")->required();
  cmd->add_option("n", p.n, "sample size")->required();
}

}  // namespace

Environment Environment::from_process() {
  Environment env;
  if (const char* value = std::getenv("HYPERGEN_N_MAX")) env.n_max_override = value;
  return env;
}

std::string regions_csv(std::int64_t population) {
  if (population < 0) throw DomainError("N must satisfy N ≥ 0");
  std::string out = "n,K,tags\n";
  for (std::int64_t n = 0; n <= population; ++n) {
    for (std::int64_t K = 0; K <= population; ++K) {
      out += std::to_string(n) + "," + std::to_string(K) + ",";
      const auto tags = classify_regions(make_params(population, K, n));
      for (std::size_t i = 0; i < tags.size(); ++i) {
        if (i != 0) out += ';';
        out += branch_name(tags[i]);
      }
      out += '\n';
    }
  }
  return out;
}

CommandResult run(const std::vector<std::string>& args, const Environment& env) {
  CLI::App app{"Exact generating functions and moments of the hypergeometric distribution",
               "hypergen"};
  app.require_subcommand(1);

  PositionalParams params;
  std::string format = "coeffs";
  std::string at;
  std::string kind = "pgf";
  std::int64_t max_r = 4;
  std::int64_t n_max = 30;
  unsigned jobs = 1;
  bool json_report = false;
  bool inject_fault = false;
  std::int64_t regions_n = 0;

  auto* pgf = app.add_subcommand("pgf", "exact PGF coefficients");
  add_params(pgf, params);
  pgf->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"coeffs", "latex", "json"}));

  auto* eval = app.add_subcommand("eval", "evaluate PGF, MGF, CF or CGF");
  add_params(eval, params);
  eval->add_option("--at", at, "z (exact rational) for pgf, t (float) otherwise")->required();
  eval->add_option("--kind", kind, "function to evaluate")
      ->check(CLI::IsMember({"pgf", "mgf", "cf", "cgf"}));

  auto* moments = app.add_subcommand("moments", "factorial and raw moments, mean, variance");
  add_params(moments, params);
  moments->add_option("--max-r", max_r, "highest moment order");

  auto* verify = app.add_subcommand("verify", "exhaustive oracle check of every closed form");
  verify->add_option("--n-max", n_max, "largest population size in the grid");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_flag("--json", json_report, "print the full report as JSON");
  verify->add_flag("--inject-fault", inject_fault)->group("");

  auto* regions = app.add_subcommand("regions", "branch coverage of the (n, K) grid as CSV");
  regions->add_option("N", regions_n, "population size")->required();

  CommandResult result;
  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kExitOk : kExitUsage;
    return result;
  }

  try {
    if (pgf->parsed()) {
      const auto p = make_params(params.N, params.K, params.n);
      const auto poly = pgf_polynomial(p);
      if (format == "coeffs") {
        out << poly.to_string() << "\n";
      } else if (format == "latex") {
        out << latex(p);
      } else {
        nlohmann::json doc;
        doc["branch"] = theorem_label(canonical_branch(p));
        auto& coeffs = doc["coeffs"] = nlohmann::json::array();
        for (const auto& c : poly.coeffs()) coeffs.push_back(c.to_string());
        out << doc.dump() << "\n";
      }
    } else if (eval->parsed()) {
      const auto p = make_params(params.N, params.K, params.n);
      if (kind == "pgf") {
        out << pgf_eval(p, Rational::parse(at)).to_string() << "\n";
      } else if (kind == "mgf") {
        out << format_double(mgf_eval(p, parse_double(at))) << "\n";
      } else if (kind == "cgf") {
        out << format_double(cgf_eval(p, parse_double(at))) << "\n";
      } else {
        const auto phi = cf_eval(p, parse_double(at));
        out << format_double(phi.real()) << " " << format_double(phi.imag()) << "\n";
      }
    } else if (moments->parsed()) {
      const auto p = make_params(params.N, params.K, params.n);
      if (max_r < 1) throw DomainError("--max-r must be ≥ 1");
      for (std::int64_t r = 1; r <= max_r; ++r) {
        out << "fact[" << r << "]=" << factorial_moment(p, r).to_string() << "\n";
      }
      const auto raw = raw_moments(p, max_r);
      for (std::size_t j = 0; j < raw.size(); ++j) {
        out << "raw[" << j + 1 << "]=" << raw[j].to_string() << "\n";
      }
      out << "mean=" << mean(p).to_string() << "\n";
      out << "var=" << variance(p).to_string() << "\n";
    } else if (verify->parsed()) {
      if (n_max < 1) throw DomainError("--n-max must be ≥ 1");
      verify::GridOptions options;
      options.n_max = n_max;
      options.jobs = std::max(1u, jobs);
      options.bound = parse_bound(env);
      if (inject_fault) {
        options.perturb = [](const HypergeomParams& p, PgfPolynomial& poly) {
          if (p == make_params(1, 1, 1)) {
            std::vector<Rational> coeffs(poly.coeffs().begin(), poly.coeffs().end());
            coeffs.back() = -coeffs.back();
            poly = PgfPolynomial(std::move(coeffs));
          }
        };
      }
      const auto report = verify::oracle_grid_check(options);
      if (json_report) {
        out << nlohmann::json(report).dump(2) << "\n";
      } else {
        out << "checked " << report.n_checked << " triples, " << report.n_failed
            << " failures\n";
        for (const auto& f : report.failures) {
          out << "FAIL N=" << f.N << " K=" << f.K << " n=" << f.n << " " << f.check << ": "
              << f.detail << "\n";
        }
      }
      result.exit_code = report.ok() ? kExitOk : kExitVerifyFailed;
    } else if (regions->parsed()) {
      out << regions_csv(regions_n);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = kExitUsage;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace hypergen::cli
