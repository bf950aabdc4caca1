#include "hypergen/distribution.hpp"

#include <algorithm>
#include <cmath>

namespace hypergen {
namespace {

Rational factorial_ratio(std::initializer_list<std::int64_t> num,
                         std::initializer_list<std::int64_t> den) {
  Integer top = 1;
  Integer bottom = 1;
  for (auto v : num) top *= factorial(v);
  for (auto v : den) bottom *= factorial(v);
  return Rational(top, bottom);
}

}  // namespace

std::string_view branch_name(BranchTag tag) {
  switch (tag) {
    case BranchTag::ThmA: return "ThmA";
    case BranchTag::ThmB: return "ThmB";
    case BranchTag::Cor1a: return "Cor1a";
    case BranchTag::Cor1b: return "Cor1b";
    case BranchTag::Cor2a: return "Cor2a";
    case BranchTag::Cor2b: return "Cor2b";
  }
  return "?";
}

std::optional<BranchTag> parse_branch(std::string_view name) {
  for (auto tag : kAllBranches) {
    if (branch_name(tag) == name) return tag;
  }
  return std::nullopt;
}

bool is_corollary(BranchTag tag) {
  return tag != BranchTag::ThmA && tag != BranchTag::ThmB;
}

bool branch_admits(const HypergeomParams& p, BranchTag tag) {
  const auto n = p.sample();
  const auto K = p.white();
  const auto black = p.black();
  switch (tag) {
    case BranchTag::ThmA:
    case BranchTag::Cor1a: return n <= black;
    case BranchTag::ThmB:
    case BranchTag::Cor2b: return n >= black;
    case BranchTag::Cor1b: return n >= K;
    case BranchTag::Cor2a: return n <= K;
  }
  return false;
}

std::vector<BranchTag> classify_regions(const HypergeomParams& p) {
  std::vector<BranchTag> out;
  for (auto tag : kAllBranches) {
    if (branch_admits(p, tag)) out.push_back(tag);
  }
  return out;
}

BranchTag canonical_branch(const HypergeomParams& p) {
  return p.sample() <= p.black() ? BranchTag::ThmA : BranchTag::ThmB;
}

BranchForm branch_form(const HypergeomParams& p, BranchTag tag) {
  if (!branch_admits(p, tag)) {
    throw DomainError(std::string(branch_name(tag)) + " is not defined for " + p.to_string());
  }
  const auto N = p.population();
  const auto K = p.white();
  const auto n = p.sample();
  switch (tag) {
    case BranchTag::ThmA:
    case BranchTag::Cor1a:
      return {tag, factorial_ratio({N - n, N - K}, {N, N - K - n}), 0,
              Terminating2F1::make(-n, -K, N - K - n + 1), false};
    case BranchTag::ThmB:
    case BranchTag::Cor2b: {
      const auto shift = n + K - N;
      return {tag, factorial_ratio({n, K}, {N, shift}), shift,
              Terminating2F1::make(n - N, K - N, shift + 1), false};
    }
    case BranchTag::Cor1b:
      return {tag, factorial_ratio({n, N - K}, {N, n - K}), K,
              Terminating2F1::make(n - N, -K, n - K + 1), true};
    case BranchTag::Cor2a:
      return {tag, factorial_ratio({N - n, K}, {N, K - n}), n,
              Terminating2F1::make(-n, K - N, K - n + 1), true};
  }
  throw DomainError("unknown branch");
}

Rational pmf(const HypergeomParams& p, std::int64_t k) {
  return Rational(binomial(p.white(), k) * binomial(p.black(), p.sample() - k),
                  binomial(p.population(), p.sample()));
}

PgfPolynomial pgf_polynomial(const HypergeomParams& p) {
  return pgf_polynomial_via(p, canonical_branch(p));
}

PgfPolynomial pgf_polynomial_via(const HypergeomParams& p, BranchTag tag) {
  const auto form = branch_form(p, tag);
  const auto terms = series_coefficients(form.series);
  const auto width = static_cast<std::size_t>(form.power) + 1 +
                     (form.inverse_argument ? 0 : terms.size());
  std::vector<Rational> coeffs(width, Rational(0));
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const auto index = form.inverse_argument ? static_cast<std::size_t>(form.power) - j
                                             : static_cast<std::size_t>(form.power) + j;
    coeffs[index] = form.prefactor * terms[j];
  }
  return PgfPolynomial(std::move(coeffs));
}

Rational legacy_pgf_prefactor(const HypergeomParams& p) {
  const auto N = p.population();
  const auto K = p.white();
  const auto n = p.sample();
  if (n >= N - K + 1) {
    throw IndeterminateLegacyFormula(
        "legacy PGF prefactor (N-n)!(N-K)!/(N!(N-K-n)!) is indeterminate for n ≥ N-K+1 at " +
        p.to_string());
  }
  return factorial_ratio({N - n, N - K}, {N, N - K - n});
}

Rational pgf_eval(const HypergeomParams& p, const Rational& z) {
  return pgf_eval_branch(p, z, canonical_branch(p));
}

Rational pgf_eval_branch(const HypergeomParams& p, const Rational& z, BranchTag tag) {
  const auto form = branch_form(p, tag);
  if (form.inverse_argument) {
    if (z.is_zero()) {
      throw DomainError(std::string(branch_name(tag)) + " evaluates 2F1 at 1/z; z must be ≠ 0");
    }
    return form.prefactor * pow(z, form.power) *
           eval_terminating_2f1(form.series, Rational(1) / z);
  }
  return form.prefactor * pow(z, form.power) * eval_terminating_2f1(form.series, z);
}

Rational pgf_eval_corollary(const HypergeomParams& p, const Rational& z, BranchTag which) {
  if (!is_corollary(which)) {
    throw DomainError(std::string(branch_name(which)) + " is not an alternative-form branch");
  }
  return pgf_eval_branch(p, z, which);
}

double mgf_eval(const PgfPolynomial& pgf, double t) {
  if (!std::isfinite(t)) throw DomainError("t must be finite");
  const double z = std::exp(t);
  if (!std::isfinite(z)) throw OverflowError("e^t overflows at t = " + std::to_string(t));
  const double value = pgf.evaluate(z);
  if (!std::isfinite(value)) throw OverflowError("M_X(t) overflows at t = " + std::to_string(t));
  return value;
}

double mgf_eval(const HypergeomParams& p, double t) { return mgf_eval(pgf_polynomial(p), t); }

ComplexF cf_eval(const PgfPolynomial& pgf, double t) {
  if (!std::isfinite(t)) throw DomainError("t must be finite");
  return pgf.evaluate(ComplexF(std::cos(t), std::sin(t)));
}

ComplexF cf_eval(const HypergeomParams& p, double t) { return cf_eval(pgf_polynomial(p), t); }

double cgf_eval(const HypergeomParams& p, double t) {
  if (!std::isfinite(t)) throw DomainError("t must be finite");
  const auto poly = pgf_polynomial(p);
  const auto range = support(p);
  const auto coeffs = poly.coeffs();
  // With w = e^{-|t|} <= 1 every power below stays in [0, 1].
  const double w = std::exp(-std::abs(t));
  double acc = 0.0;
  if (t <= 0) {
    for (auto k = range.hi; k >= range.lo; --k) {
      acc = acc * w + coeffs[static_cast<std::size_t>(k)].to_double();
    }
    return static_cast<double>(range.lo) * t + std::log(acc);
  }
  for (auto k = range.lo; k <= range.hi; ++k) {
    acc = acc * w + coeffs[static_cast<std::size_t>(k)].to_double();
  }
  return static_cast<double>(range.hi) * t + std::log(acc);
}

Rational legendre_case_pgf(std::int64_t m, const Rational& z) {
  if (m < 1) throw DomainError("Legendre case needs m ≥ 1");
  if (z == Rational(1)) {
    throw DomainError("Legendre form has a removable singularity at z = 1; use pgf_eval");
  }
  const Rational x = (z + Rational(1)) / (z - Rational(1));
  const Rational legendre =
      eval_terminating_2f1(Terminating2F1::make(-m, m + 1, 1), (Rational(1) - x) / Rational(2));
  const Rational scale(factorial(m) * factorial(m), factorial(2 * m));
  return scale * pow(z - Rational(1), m) * legendre;
}

}  // namespace hypergen
