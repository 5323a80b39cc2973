#pragma once

// Telescoping identities built from tau_k = (q x_1, ..., q x_s; q)_k / (q y_1, ..., q y_s; q)_k.

#include <span>
#include <vector>

#include "qpi/bounds.hpp"
#include "qpi/rational.hpp"
#include "qpi/verification.hpp"

namespace qpi::telescoping {

struct TelescopeSpec {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  Rational q;

  [[nodiscard]] std::size_t s() const { return xs.size(); }
};

/// Throws DomainError unless |xs| = |ys| >= 1, 0 < q < 1 and no factor of
/// (q y_i; q)_k vanishes.
void validate(const TelescopeSpec& spec);

/// Coefficients c_0..c_n of prod_i (1 - r_i t) in t.
template <class T>
std::vector<T> product_coefficients(std::span<const T> roots) {
  std::vector<T> c{T(1)};
  for (const T& r : roots) {
    c.push_back(T(0));
    for (std::size_t j = c.size() - 1; j > 0; --j) c[j] -= r * c[j - 1];
  }
  return c;
}

/// deltas[j-1] = a_j - b_j, the coefficient of t^j in prod(1 - t x_i) - prod(1 - t y_i).
std::vector<Rational> coefficient_vector(const TelescopeSpec& spec);

/// tau_k for k >= 0; tau_{-1} = prod(1 - y_i) / prod(1 - x_i).
Rational tau(const TelescopeSpec& spec, long k);

/// Summand of the telescoping sum,
/// (x;q)_k / (q y;q)_k * {prod(1 - q^k x_i) - prod(1 - q^k y_i)}.
Rational summand(const TelescopeSpec& spec, long k);

/// tau_k - tau_{k-1} computed directly minus the closed form
/// summand(k) / prod(1 - x_i). Zero when the identity holds.
Rational nabla_check(const TelescopeSpec& spec, long k);

struct FiniteSum {
  Rational lhs;
  Rational rhs;
  Rational residual;
};

/// sum_{k=0}^n summand(k) against (x;q)_{n+1} / (q y;q)_n - prod(1 - y_i).
FiniteSum finite_sum_identity(const TelescopeSpec& spec, long n);

/// Left side of the infinite form, summed with a rigorous tail bound.
SeriesResult infinite_lhs(const TelescopeSpec& spec, int digits);
/// (x;q)_inf / (q y;q)_inf - prod(1 - y_i). Matching pairs x_i = y_j and
/// x_i = q y_j are cancelled exactly before the products are evaluated.
SeriesResult infinite_rhs(const TelescopeSpec& spec, int digits);

VerificationReport infinite_identity(const TelescopeSpec& spec, int digits, const BigReal& tolerance);

/// Throws DomainError if x = 0 or x = q^j for an integer j.
void require_off_q_lattice(const Rational& x, const Rational& q, const std::string& what);

// prod(x_i, q/x_i; q)_inf / (q, q^2; q)_inf^m as a series.
SeriesResult corollary_a_product(std::span<const Rational> xs, const Rational& q, int digits);
SeriesResult corollary_a_series(std::span<const Rational> xs, const Rational& q, int digits);
VerificationReport corollary_a(std::span<const Rational> xs, const Rational& q, int digits, const BigReal& tolerance);

// (q;q)_inf^{2m} / prod(x_i, q/x_i; q)_inf with the leading term 1/prod(1 - q/x_i).
SeriesResult corollary_b_product(std::span<const Rational> xs, const Rational& q, int digits);
SeriesResult corollary_b_series(std::span<const Rational> xs, const Rational& q, int digits);
VerificationReport corollary_b(std::span<const Rational> xs, const Rational& q, int digits, const BigReal& tolerance);

/// The substituted spec of corollary A: xs -> (x_i, q/x_i), ys -> (1, q).
TelescopeSpec corollary_a_spec(std::span<const Rational> xs, const Rational& q);

}  // namespace qpi::telescoping
