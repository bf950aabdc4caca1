#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hypergen/core.hpp"
#include "hypergen/hyp2f1.hpp"

namespace hypergen {

/// Closed forms for G_X(z).
///
///   ThmA   (N-n)!(N-K)!/(N!(N-K-n)!)   2F1(-n, -K; N-K-n+1; z)                n <= N-K
///   ThmB   n!K!/(N!(n+K-N)!) z^{n+K-N} 2F1(n-N, K-N; n+K-N+1; z)              n >= N-K
///   Cor1a  same expression as ThmA                                            n <= N-K
///   Cor1b  n!(N-K)!/(N!(n-K)!) z^K     2F1(n-N, -K; n-K+1; 1/z)               n >= K
///   Cor2a  (N-n)!K!/(N!(K-n)!) z^n     2F1(-n, K-N; K-n+1; 1/z)               n <= K
///   Cor2b  same expression as ThmB                                            n >= N-K
///
/// Each range is exactly where the lower parameter is a positive integer.
enum class BranchTag { ThmA, ThmB, Cor1a, Cor1b, Cor2a, Cor2b };

inline constexpr std::array<BranchTag, 6> kAllBranches = {
    BranchTag::ThmA,  BranchTag::ThmB,  BranchTag::Cor1a,
    BranchTag::Cor1b, BranchTag::Cor2a, BranchTag::Cor2b};

std::string_view branch_name(BranchTag tag);
std::optional<BranchTag> parse_branch(std::string_view name);

bool is_corollary(BranchTag tag);
bool branch_admits(const HypergeomParams& p, BranchTag tag);

/// Every branch whose range contains (n, K), in kAllBranches order.
std::vector<BranchTag> classify_regions(const HypergeomParams& p);

/// The branch pgf_eval and pgf_polynomial use: ThmA when n <= N-K, else ThmB.
BranchTag canonical_branch(const HypergeomParams& p);

/// A branch formula split into its parts:
/// value(z) = prefactor * z^power * 2F1(series; inverse_argument ? 1/z : z).
struct BranchForm {
  BranchTag tag;
  Rational prefactor;
  std::int64_t power;
  Terminating2F1 series;
  bool inverse_argument;
};

/// Throws DomainError when the branch does not admit p.
BranchForm branch_form(const HypergeomParams& p, BranchTag tag);

/// P(X = k); exactly 0 outside the support.
Rational pmf(const HypergeomParams& p, std::int64_t k);

/// G_X expanded from the canonical branch formula.
PgfPolynomial pgf_polynomial(const HypergeomParams& p);

/// G_X expanded from a specific admitted branch (DomainError otherwise).
PgfPolynomial pgf_polynomial_via(const HypergeomParams& p, BranchTag tag);

/// (N-n)!(N-K)!/(N!(N-K-n)!). Throws IndeterminateLegacyFormula when
/// n >= N-K+1, where (N-K-n)! and the series both diverge.
Rational legacy_pgf_prefactor(const HypergeomParams& p);

/// G_X(z) through the canonical branch's 2F1, not the expanded polynomial.
Rational pgf_eval(const HypergeomParams& p, const Rational& z);

/// G_X(z) through any admitted branch. DomainError when the branch does not
/// admit p, or z == 0 on an inverse-argument branch.
Rational pgf_eval_branch(const HypergeomParams& p, const Rational& z, BranchTag tag);

/// pgf_eval_branch restricted to the four Cor* tags (DomainError otherwise).
Rational pgf_eval_corollary(const HypergeomParams& p, const Rational& z, BranchTag which);

/// M_X(t) = G_X(e^t), Horner on the exact coefficients. OverflowError when
/// e^t or the result is not finite; DomainError for non-finite t.
double mgf_eval(const HypergeomParams& p, double t);

/// phi_X(t) = G_X(e^{it}).
ComplexF cf_eval(const HypergeomParams& p, double t);

/// The same evaluations on an already expanded PGF, for sweeping many t.
double mgf_eval(const PgfPolynomial& pgf, double t);
ComplexF cf_eval(const PgfPolynomial& pgf, double t);

/// K_X(t) = ln G_X(e^t). Factors out the dominant power of e^t, so it stays
/// finite where mgf_eval would overflow or underflow.
double cgf_eval(const HypergeomParams& p, double t);

/// (m!)^2/(2m)! (z-1)^m P_m((z+1)/(z-1)) with P_m(x) = 2F1(-m, m+1; 1; (1-x)/2).
/// This is G_X(z) for N = 2m, K = n = m. DomainError for m < 1 or z == 1.
Rational legendre_case_pgf(std::int64_t m, const Rational& z);

}  // namespace hypergen
