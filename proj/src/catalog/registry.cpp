#include <algorithm>
#include <set>

#include "qpi/catalog.hpp"
#include "qpi/errors.hpp"
#include "records.hpp"

namespace qpi {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::q_main: return "q-main";
    case Family::proof_chain: return "q-proof-chain";
    case Family::classical: return "classical";
    case Family::telescoping: return "telescoping";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view text) {
  if (text == "q-main") return Family::q_main;
  if (text == "q-proof-chain" || text == "proof-chain") return Family::proof_chain;
  if (text == "classical") return Family::classical;
  if (text == "telescoping") return Family::telescoping;
  return std::nullopt;
}

ParamPoint::ParamPoint(std::initializer_list<std::pair<std::string, Rational>> entries) {
  for (const auto& [name, value] : entries) set(name, value);
}

void ParamPoint::set(const std::string& name, Rational value) {
  for (auto& entry : entries_) {
    if (entry.first == name) {
      entry.second = std::move(value);
      return;
    }
  }
  entries_.emplace_back(name, std::move(value));
}

bool ParamPoint::has(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == name; });
}

const Rational& ParamPoint::at(std::string_view name) const {
  for (const auto& entry : entries_) {
    if (entry.first == name) return entry.second;
  }
  throw DomainError("missing parameter '" + std::string(name) + "'");
}

long ParamPoint::integer(std::string_view name) const {
  const Rational& v = at(name);
  if (!v.is_integer() || !v.raw().get_num().fits_slong_p())
    throw DomainError("parameter '" + std::string(name) + "' must be an integer");
  return v.raw().get_num().get_si();
}

std::string ParamPoint::str() const {
  std::string out;
  for (const auto& [name, value] : entries_) {
    if (!out.empty()) out += ", ";
    out += name + "=" + value.str();
  }
  return out;
}

SideValue SideValue::from_exact(const Rational& value, int digits) {
  return {SeriesResult::exact(to_bigreal(value, std::max(digits, BigReal::kMinDigits))), value};
}

std::vector<std::string> IdentityRecord::param_names() const {
  std::vector<std::string> names;
  for (const ParamSpec& p : params) names.push_back(p.name);
  return names;
}

bool IdentityRecord::has_param(std::string_view name) const {
  return std::any_of(params.begin(), params.end(), [&](const ParamSpec& p) { return p.name == name; });
}

Registry::Registry(std::vector<IdentityRecord> records) : records_(std::move(records)) {
  std::sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  std::set<std::string> seen;
  for (const IdentityRecord& r : records_) {
    if (!seen.insert(r.id).second) throw std::logic_error("duplicate identity id '" + r.id + "'");
  }
}

const IdentityRecord* Registry::find(std::string_view id) const {
  auto it = std::lower_bound(records_.begin(), records_.end(), id, [](const IdentityRecord& r, std::string_view key) { return r.id < key; });
  return it != records_.end() && it->id == id ? &*it : nullptr;
}

const IdentityRecord& Registry::at(std::string_view id) const {
  const IdentityRecord* r = find(id);
  if (r == nullptr) throw DomainError("unknown identity '" + std::string(id) + "'");
  return *r;
}

std::vector<const IdentityRecord*> Registry::list(std::optional<Family> filter) const {
  std::vector<const IdentityRecord*> out;
  for (const IdentityRecord& r : records_) {
    if (!filter || r.family == *filter) out.push_back(&r);
  }
  return out;
}

Registry Registry::with_scaled_rhs(std::string_view id, const Rational& factor) const {
  std::vector<IdentityRecord> copy = records_;
  bool found = false;
  for (IdentityRecord& r : copy) {
    if (r.id != id) continue;
    found = true;
    SideEvaluator original = r.rhs;
    r.rhs = [original, factor](const ParamPoint& p, int digits) {
      SideValue v = original(p, digits);
      v.approx *= to_bigreal(factor, std::max(digits, BigReal::kMinDigits));
      if (v.exact) v.exact = *v.exact * factor;
      return v;
    };
  }
  if (!found) throw DomainError("unknown identity '" + std::string(id) + "'");
  return Registry(std::move(copy));
}

const Registry& default_registry() {
  static const Registry registry = [] {
    std::vector<IdentityRecord> records;
    catalog::add_q_main(records);
    catalog::add_proof_chain(records);
    catalog::add_telescoping(records);
    catalog::add_classical(records);
    return Registry(std::move(records));
  }();
  return registry;
}

SideValue eval_side(const IdentityRecord& record, Side side, const ParamPoint& point, int digits) {
  if (record.validate) record.validate(point);
  return side == Side::lhs ? record.lhs(point, digits) : record.rhs(point, digits);
}

std::vector<Rational> default_q_grid() { return {Rational(1, 4), Rational(1, 2), Rational(3, 4)}; }

std::vector<ParamPoint> default_points(const IdentityRecord& record, const std::vector<Rational>& q_grid) {
  if (!record.uses_q_grid) return record.default_points;
  std::vector<ParamPoint> out;
  for (const Rational& q : q_grid) {
    ParamPoint p;
    p.set("q", q);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace qpi
