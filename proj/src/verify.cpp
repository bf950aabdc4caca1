#include "hypergen/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hypergen/distribution.hpp"
#include "hypergen/moments.hpp"

namespace hypergen::verify {
namespace {

struct TripleResult {
  std::vector<Failure> failures;
};

std::vector<HypergeomParams> grid(std::int64_t n_max) {
  std::vector<HypergeomParams> out;
  for (std::int64_t N = 0; N <= n_max; ++N) {
    for (std::int64_t K = 0; K <= N; ++K) {
      for (std::int64_t n = 0; n <= N; ++n) out.push_back(make_params(N, K, n));
    }
  }
  return out;
}

TripleResult check_triple(const HypergeomParams& p, const GridOptions& options) {
  TripleResult result;
  auto fail = [&](std::string check, std::string detail) {
    result.failures.push_back(
        {p.population(), p.white(), p.sample(), std::move(check), std::move(detail)});
  };
  auto guarded = [&](const std::string& check, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      fail(check, std::string("threw: ") + e.what());
    }
  };

  const auto reference = oracle::oracle_pgf(p, options.bound);

  guarded("pgf_coeffs", [&] {
    auto closed = pgf_polynomial(p);
    if (options.perturb) options.perturb(p, closed);
    if (closed != reference) {
      fail("pgf_coeffs", "closed form [" + closed.to_string() + "] vs oracle [" +
                             reference.to_string() + "]");
    }
  });

  for (const auto& z : sample_points()) {
    const auto expected = reference.evaluate(z);
    guarded("pgf_eval", [&] {
      const auto got = pgf_eval(p, z);
      if (got != expected) {
        fail("pgf_eval", "z=" + z.to_string() + ": " + got.to_string() + " vs oracle " +
                             expected.to_string());
      }
    });
    for (auto tag : classify_regions(p)) {
      const std::string check = "branch:" + std::string(branch_name(tag));
      guarded(check, [&] {
        const auto got = pgf_eval_branch(p, z, tag);
        if (got != expected) {
          fail(check, "z=" + z.to_string() + ": " + got.to_string() + " vs oracle " +
                          expected.to_string());
        }
      });
    }
  }

  const auto range = support(p);
  for (std::int64_t r = 1; r <= range.hi + 1; ++r) {
    guarded("factorial_moment", [&] {
      const auto got = factorial_moment(p, r);
      const auto expected = oracle::oracle_factorial_moment(p, r, options.bound);
      if (got != expected) {
        fail("factorial_moment", "r=" + std::to_string(r) + ": " + got.to_string() +
                                     " vs oracle " + expected.to_string());
      }
    });
  }

  if (p.sample() >= p.black()) {
    guarded("complement", [&] {
      const auto shift = p.sample() + p.white() - p.population();
      const auto shifted = oracle::oracle_pgf(complement(p), options.bound).shifted(shift);
      const auto closed = pgf_polynomial(p);
      if (shifted != closed) {
        fail("complement", "z^" + std::to_string(shift) + " G_X'(z) = [" + shifted.to_string() +
                               "] vs G_X = [" + closed.to_string() + "]");
      }
    });
  }
  return result;
}

}  // namespace

std::array<Rational, 6> sample_points() {
  return {Rational(-2), Rational(-1, 2), Rational(1, 3), Rational(1), Rational(2),
          Rational(7, 5)};
}

void to_json(nlohmann::json& j, const Failure& f) {
  j = nlohmann::json{{"N", f.N}, {"K", f.K}, {"n", f.n}, {"check", f.check}, {"detail", f.detail}};
}

void from_json(const nlohmann::json& j, Failure& f) {
  j.at("N").get_to(f.N);
  j.at("K").get_to(f.K);
  j.at("n").get_to(f.n);
  j.at("check").get_to(f.check);
  j.at("detail").get_to(f.detail);
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"n_checked", r.n_checked}, {"n_failed", r.n_failed}, {"failures", r.failures}};
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
  j.at("n_checked").get_to(r.n_checked);
  j.at("n_failed").get_to(r.n_failed);
  j.at("failures").get_to(r.failures);
}

VerificationReport oracle_grid_check(const GridOptions& options) {
  if (options.n_max < 0) throw DomainError("n_max must be ≥ 0");
  if (options.n_max > options.bound) {
    throw BoundExceeded("grid N ≤ " + std::to_string(options.n_max) +
                        " exceeds the oracle bound " + std::to_string(options.bound));
  }
  const auto triples = grid(options.n_max);
  std::vector<TripleResult> results(triples.size());

  const unsigned jobs = std::clamp<unsigned>(options.jobs, 1, 256);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < triples.size(); i = next++) {
      results[i] = check_triple(triples[i], options);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  VerificationReport report;
  report.n_checked = static_cast<std::int64_t>(triples.size());
  for (auto& r : results) {
    if (r.failures.empty()) continue;
    ++report.n_failed;
    for (auto& f : r.failures) {
      if (report.failures.size() >= options.max_failures) break;
      report.failures.push_back(std::move(f));
    }
  }
  return report;
}

VerificationReport oracle_grid_check(std::int64_t n_max) {
  GridOptions options;
  options.n_max = n_max;
  return oracle_grid_check(options);
}

}  // namespace hypergen::verify
