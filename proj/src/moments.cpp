#include "hypergen/moments.hpp"

#include <algorithm>

#include "hypergen/distribution.hpp"
#include "hypergen/hyp2f1.hpp"

namespace hypergen {
namespace {

Integer falling(std::int64_t x, std::int64_t r) {
  Integer out = 1;
  for (std::int64_t i = 0; i < r; ++i) out *= static_cast<long>(x - i);
  return out;
}

}  // namespace

FactorialMoment factorial_moment_detail(const HypergeomParams& p, std::int64_t r) {
  if (r < 1) throw DomainError("factorial moment order must be ≥ 1");

  const auto tag = canonical_branch(p);
  const auto form = branch_form(p, tag);
  if (tag == BranchTag::ThmA) {
    const auto d = derivative_2f1(form.series, r);
    return {form.prefactor * d.scale * gauss_value_at_one(d.g), MomentPath::SeriesDerivative};
  }

  // G = Q z^{c-1} 2F1(a, b; c; z) with c - 1 = n + K - N >= 1.
  const auto a = form.series.a();
  const auto b = form.series.b();
  const auto c = form.series.c();
  if (r <= c - 1) {
    const auto d = derivative_z_power_2f1(a, b, c, r);
    // z^{power} is 1 at z = 1.
    return {form.prefactor * d.scale * gauss_value_at_one(d.g), MomentPath::PowerDerivative};
  }
  const auto d = prop1_derivative(a, b, c, r);
  return {form.prefactor * d.scale * gauss_value_at_one(d.g), MomentPath::Proposition1};
}

Rational factorial_moment(const HypergeomParams& p, std::int64_t r) {
  return factorial_moment_detail(p, r).value;
}

Rational factorial_moment_closed_form(const HypergeomParams& p, std::int64_t r) {
  if (r < 1) throw DomainError("factorial moment order must be ≥ 1");
  if (r > std::min(p.sample(), p.white())) return 0;
  return Rational(falling(p.sample(), r) * falling(p.white(), r), falling(p.population(), r));
}

Rational mean(const HypergeomParams& p) {
  if (p.population() == 0) return 0;
  return Rational(Integer(static_cast<long>(p.sample())) * static_cast<long>(p.white()),
                  Integer(static_cast<long>(p.population())));
}

Rational variance(const HypergeomParams& p) {
  const auto N = p.population();
  if (N <= 1) return 0;
  Integer num = static_cast<long>(p.sample());
  num *= static_cast<long>(N - p.sample());
  num *= static_cast<long>(p.white());
  num *= static_cast<long>(p.black());
  Integer den = static_cast<long>(N);
  den *= static_cast<long>(N);
  den *= static_cast<long>(N - 1);
  return Rational(num, den);
}

std::vector<std::vector<Integer>> stirling2_table(std::int64_t max_j) {
  if (max_j < 0) throw DomainError("Stirling table size must be ≥ 0");
  std::vector<std::vector<Integer>> rows;
  rows.reserve(static_cast<std::size_t>(max_j) + 1);
  rows.push_back({Integer(1)});
  for (std::int64_t j = 1; j <= max_j; ++j) {
    const auto& prev = rows.back();
    std::vector<Integer> row(static_cast<std::size_t>(j) + 1, Integer(0));
    for (std::int64_t s = 1; s <= j; ++s) {
      const auto us = static_cast<std::size_t>(s);
      Integer carry = us < prev.size() ? Integer(prev[us] * static_cast<long>(s)) : Integer(0);
      row[us] = carry + prev[us - 1];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Rational> raw_moments(const HypergeomParams& p, std::int64_t max_r) {
  if (max_r < 1) throw DomainError("max_r must be ≥ 1");
  const auto stirling = stirling2_table(max_r);
  std::vector<Rational> factorial_moments;
  factorial_moments.reserve(static_cast<std::size_t>(max_r));
  for (std::int64_t s = 1; s <= max_r; ++s) factorial_moments.push_back(factorial_moment(p, s));

  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(max_r));
  for (std::int64_t j = 1; j <= max_r; ++j) {
    Rational sum;
    for (std::int64_t s = 1; s <= j; ++s) {
      sum += Rational(stirling[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)]) *
             factorial_moments[static_cast<std::size_t>(s - 1)];
    }
    out.push_back(sum);
  }
  return out;
}

}  // namespace hypergen
