#include "fcw/morse.hpp"

#include <algorithm>
#include <set>

#include "fcw/error.hpp"

namespace fcw {

MorseDatum::MorseDatum(std::vector<CriticalPoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw InvalidMorseDatum("no critical points");
  bool has_minimum = false;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (p.value < 0) {
      throw InvalidMorseDatum("critical point " + std::to_string(i) + " has negative value " +
                              to_string(p.value));
    }
    if (p.index < 0) {
      throw InvalidMorseDatum("critical point " + std::to_string(i) + " has negative index");
    }
    has_minimum = has_minimum || p.index == 0;
  }
  if (!has_minimum) throw InvalidMorseDatum("no critical point of index 0");
}

std::size_t MorseDatum::basepoint_index() const {
  std::size_t best = points_.size();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].index != 0) continue;
    if (best == points_.size() || points_[i].value < points_[best].value) best = i;
  }
  return best;
}

std::string critical_cell_id(std::size_t i) { return "c" + std::to_string(i); }

FilteredComplex morse_complex(const MorseDatum& datum, const std::optional<BoundaryMap>& boundaries) {
  const std::size_t base = datum.basepoint_index();
  std::vector<Cell> cells;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < datum.points().size(); ++i) {
    const auto& p = datum.points()[i];
    Cell c{critical_cell_id(i), p.index, Exponent(p.value), {}};
    if (i == base) c.weight = Exponent::neg_inf();
    ids.insert(c.id);
    cells.push_back(std::move(c));
  }

  if (boundaries) {
    for (const auto& [id, chain] : *boundaries) {
      if (!ids.contains(id)) throw InvalidBoundaries("boundary given for unknown cell '" + id + "'");
    }
    for (auto& c : cells) {
      if (auto it = boundaries->find(c.id); it != boundaries->end()) c.boundary = it->second;
    }
  }

  FilteredComplex x(critical_cell_id(base), std::move(cells));
  if (auto violations = validate(x); !violations.empty()) {
    const auto& v = violations.front();
    throw InvalidBoundaries(std::string(name(v.kind)) + " at cell '" + v.cell + "': " + v.message);
  }
  return x;
}

Rational bound_size_spheres(const MorseDatum& datum) {
  Rational sum = 0;
  for (const auto& p : datum.points()) sum += p.value;
  return sum;
}

Rational bound_size_wedges(const MorseDatum& datum) {
  std::set<Rational> values;
  for (const auto& p : datum.points()) values.insert(p.value);
  Rational sum = 0;
  for (const auto& v : values) sum += v;
  return sum;
}

Linearization::Linearization(std::vector<LinearizationEntry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.weight < 0) throw NegativeWeight("linearization weight " + to_string(e.weight) + " < 0");
    if (e.sphere_dim < 0) throw std::invalid_argument("negative sphere dimension");
  }
  std::stable_sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.sphere_dim < b.sphere_dim;
  });
}

Linearization canonical_linearization(const FilteredComplex& x) {
  std::vector<LinearizationEntry> entries;
  for (const auto& c : x.cells()) {
    if (x.is_basepoint(c) || c.weight.is_neg_inf()) continue;
    if (c.dim == 0) {
      throw UnsupportedCell("0-cell '" + c.id + "' has finite weight; it would attach along S^-1");
    }
    if (c.weight < Exponent(0)) {
      throw NegativeWeight("cell '" + c.id + "' has weight " + to_string(c.weight) + " < 0");
    }
    entries.push_back({c.dim - 1, c.weight.value()});
  }
  return Linearization(std::move(entries));
}

LinearizationStats linearization_stats(const Linearization& l) {
  LinearizationStats s;
  for (const auto& e : l.entries()) s.lambda_poly += LambdaPoly::monomial(1, e.weight);
  s.count = eval_at_one(s.lambda_poly);
  s.weight = eval_at_one(derivative(s.lambda_poly));
  return s;
}

LambdaPoly euler_poly_rel(const Linearization& l) {
  LambdaPoly out;
  for (const auto& e : l.entries()) {
    out += LambdaPoly::monomial(e.sphere_dim % 2 == 0 ? -1 : 1, e.weight);
  }
  return out;
}

}  // namespace fcw
