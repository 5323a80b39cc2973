#pragma once

#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpi/bigreal.hpp"
#include "qpi/bounds.hpp"
#include "qpi/rational.hpp"

namespace qpi {

enum class Family { q_main, proof_chain, classical, telescoping };

std::string_view to_string(Family family);
/// Accepts "q-main", "q-proof-chain" (or "proof-chain"), "classical", "telescoping".
std::optional<Family> parse_family(std::string_view text);

/// Ordered assignment of rational values to parameter names.
class ParamPoint {
 public:
  ParamPoint() = default;
  ParamPoint(std::initializer_list<std::pair<std::string, Rational>> entries);

  void set(const std::string& name, Rational value);
  [[nodiscard]] bool has(std::string_view name) const;
  /// Throws DomainError when the parameter is missing.
  [[nodiscard]] const Rational& at(std::string_view name) const;
  /// at(name) as an integer; throws DomainError if not integral.
  [[nodiscard]] long integer(std::string_view name) const;
  [[nodiscard]] const std::vector<std::pair<std::string, Rational>>& entries() const { return entries_; }
  /// "q=1/2, a=1/3"
  [[nodiscard]] std::string str() const;

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;

 private:
  std::vector<std::pair<std::string, Rational>> entries_;
};

struct ParamSpec {
  std::string name;
  std::string domain;  // human-readable constraint, e.g. "0 < q < 1"
  bool fixed = false;  // constant of the display rather than a free symbol
};

/// One side of an identity at one precision. Finite sides that can be
/// evaluated in exact arithmetic also carry the exact value.
struct SideValue {
  SeriesResult approx;
  std::optional<Rational> exact;

  static SideValue from_exact(const Rational& value, int digits);
  static SideValue from_series(SeriesResult value) { return {std::move(value), std::nullopt}; }
};

using SideEvaluator = std::function<SideValue(const ParamPoint& point, int digits)>;

enum class Side { lhs, rhs };

struct VerifyDefaults {
  int digits = 60;
  int tolerance_exponent = -50;
  /// The record cannot be verified below this tolerance at its default
  /// parameters (classical partial sums); effective tolerance is the max.
  std::optional<int> tolerance_floor_exponent;
};

struct IdentityRecord {
  std::string id;
  Family family = Family::q_main;
  std::string anchor;   // short verbatim phrase locating the display
  std::string summary;  // one-line description of what the identity states
  std::vector<ParamSpec> params;
  /// Parameter points checked by default. Records whose only free symbol is
  /// q take their points from the run's q-grid instead (uses_q_grid).
  std::vector<ParamPoint> default_points;
  bool uses_q_grid = false;
  /// Throws DomainError for points outside the parameter domains.
  std::function<void(const ParamPoint&)> validate;
  SideEvaluator lhs;
  SideEvaluator rhs;
  VerifyDefaults defaults;
  /// The display is stored verbatim although it is suspected to contain a
  /// misprint; a numerical failure is reported as flagged, not silently fixed.
  bool display_sensitive = false;
  /// Normalisation exponent a for (1-q)^a * LHS as q -> 1, with the expected
  /// classical value, for q-main records.
  std::optional<int> limit_exponent;
  std::string limit_target;
  std::function<BigReal(int digits)> limit_value;

  [[nodiscard]] std::vector<std::string> param_names() const;
  [[nodiscard]] bool has_param(std::string_view name) const;
};

/// Immutable collection of records sorted by id.
class Registry {
 public:
  explicit Registry(std::vector<IdentityRecord> records);

  [[nodiscard]] const std::vector<IdentityRecord>& records() const { return records_; }
  [[nodiscard]] const IdentityRecord* find(std::string_view id) const;
  /// Throws DomainError for unknown ids.
  [[nodiscard]] const IdentityRecord& at(std::string_view id) const;
  [[nodiscard]] std::vector<const IdentityRecord*> list(std::optional<Family> filter = std::nullopt) const;

  /// Copy of the registry in which record `id` has its RHS multiplied by
  /// `factor`. Used to check that verification detects corruption.
  [[nodiscard]] Registry with_scaled_rhs(std::string_view id, const Rational& factor) const;

 private:
  std::vector<IdentityRecord> records_;
};

/// The built-in registry with every identity of the catalog.
const Registry& default_registry();

/// Evaluates one side at a point; validates the point first.
SideValue eval_side(const IdentityRecord& record, Side side, const ParamPoint& point, int digits);

/// Parameter points used when verifying a record with the given q-grid.
std::vector<ParamPoint> default_points(const IdentityRecord& record, const std::vector<Rational>& q_grid);

/// Default q-grid {1/4, 1/2, 3/4}.
std::vector<Rational> default_q_grid();

}  // namespace qpi
