#pragma once

// Helpers shared by the catalog translation units.

#include <string>
#include <vector>

#include "qpi/catalog.hpp"
#include "qpi/errors.hpp"
#include "qpi/qpochhammer.hpp"
#include "qpi/series.hpp"

namespace qpi::catalog {

void add_q_main(std::vector<IdentityRecord>& out);
void add_proof_chain(std::vector<IdentityRecord>& out);
void add_telescoping(std::vector<IdentityRecord>& out);
void add_classical(std::vector<IdentityRecord>& out);

inline BigReal big(const Rational& r, int digits) { return to_bigreal(r, std::max(digits, BigReal::kMinDigits)); }

/// Throws DomainError unless 0 < point[name] < 1 (0 <= ... when allow_zero).
void require_unit_interval(const ParamPoint& point, const std::string& name = "q", bool allow_zero = false);

/// Throws DomainError when value is exactly zero.
void require_nonzero(const Rational& value, const std::string& what);

/// Throws DomainError if x * base^k = 1 for some k >= 0, i.e. if (x;base)_k
/// or (x;base)_inf has a vanishing factor. Requires 0 < base < 1.
void require_no_pole(const Rational& x, const Rational& base, const std::string& what);

/// Sums a series description at `digits`.
SeriesResult sum(const HyperSeriesSpec& spec, int digits);

/// Product of infinite q-Pochhammer powers, each factor (x; q^step)^power.
SeriesResult products(const std::vector<PowFactor>& factors, const BigReal& q, int digits);

/// Weights (w_0, ..., w_n) of the factor (1 - c q^{n k}) / (1 - c) as a
/// polynomial in q^k.
std::vector<BigReal> well_poised_weights(const BigReal& c, int n);

// LHS series reused across records (the bridge and specialisation records
// compare them against independently evaluated products or other series).
SeriesResult sun_series(const BigReal& q, int digits);
SeriesResult thm_b_series(const BigReal& q, int digits);
SeriesResult thm_e_series(const BigReal& q, int digits);

}  // namespace qpi::catalog
