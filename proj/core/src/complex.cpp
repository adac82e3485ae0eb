#include "fcw/complex.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "fcw/error.hpp"

namespace fcw {

namespace {

bool cell_order(const Cell& a, const Cell& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.id < b.id;
}

std::string pair_id(const std::string& a, const std::string& b) { return "(" + a + "*" + b + ")"; }

Exponent pair_weight(const Exponent& a, const Exponent& b, ProductVariant variant) {
  if (variant == ProductVariant::naive) return std::max(a, b);
  return add_absorbing(a, b);
}

void require_unique_ids(const std::vector<Cell>& cells) {
  std::unordered_set<std::string> seen;
  for (const auto& c : cells) {
    if (!seen.insert(c.id).second) {
      throw IdCollision("constructed cell id '" + c.id + "' is not unique");
    }
  }
}

}  // namespace

std::vector<std::string> reduce_mod2(std::vector<std::string> chain) {
  std::sort(chain.begin(), chain.end());
  std::vector<std::string> out;
  out.reserve(chain.size());
  for (std::size_t i = 0; i < chain.size();) {
    std::size_t j = i;
    while (j < chain.size() && chain[j] == chain[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(std::move(chain[i]));
    i = j;
  }
  return out;
}

FilteredComplex::FilteredComplex(std::string basepoint, std::vector<Cell> cells)
    : basepoint_(std::move(basepoint)), cells_(std::move(cells)) {
  for (auto& c : cells_) c.boundary = reduce_mod2(std::move(c.boundary));
  std::stable_sort(cells_.begin(), cells_.end(), cell_order);
  index_.reserve(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) index_.try_emplace(cells_[i].id, i);
}

const Cell* FilteredComplex::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &cells_[it->second];
}

FilteredComplex FilteredComplex::renamed(
    const std::function<std::string(const std::string&)>& rename) const {
  std::vector<Cell> cells;
  cells.reserve(cells_.size());
  for (const auto& c : cells_) {
    Cell r{rename(c.id), c.dim, c.weight, {}};
    for (const auto& b : c.boundary) r.boundary.push_back(rename(b));
    cells.push_back(std::move(r));
  }
  return FilteredComplex(rename(basepoint_), std::move(cells));
}

bool is_valid_cell_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '.' || c == '-' || c == '*' || c == '(' || c == ')';
  });
}

std::string_view name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::InvalidCellId: return "InvalidCellId";
    case ViolationKind::DuplicateCellId: return "DuplicateCellId";
    case ViolationKind::MissingBasepoint: return "MissingBasepoint";
    case ViolationKind::BasepointNotEternalPoint: return "BasepointNotEternalPoint";
    case ViolationKind::NegativeDimension: return "NegativeDimension";
    case ViolationKind::InfiniteWeight: return "InfiniteWeight";
    case ViolationKind::UnresolvedBoundary: return "UnresolvedBoundary";
    case ViolationKind::BoundaryDimensionMismatch: return "BoundaryDimensionMismatch";
    case ViolationKind::WeightMonotonicityViolation: return "WeightMonotonicityViolation";
    case ViolationKind::BoundaryNotClosed: return "BoundaryNotClosed";
  }
  return "Unknown";
}

std::vector<Violation> validate(const FilteredComplex& x) {
  std::vector<Violation> out;
  auto report = [&out](ViolationKind kind, const std::string& cell, std::string message) {
    out.push_back({kind, cell, std::move(message)});
  };

  std::set<std::string> seen;
  for (const auto& c : x.cells()) {
    if (!is_valid_cell_id(c.id)) report(ViolationKind::InvalidCellId, c.id, "illegal characters in id");
    if (!seen.insert(c.id).second) report(ViolationKind::DuplicateCellId, c.id, "id used more than once");
    if (c.dim < 0) report(ViolationKind::NegativeDimension, c.id, "dimension " + std::to_string(c.dim));
    if (c.weight.is_pos_inf()) report(ViolationKind::InfiniteWeight, c.id, "weight +inf is not a level");
  }

  const Cell* base = x.find(x.basepoint());
  if (base == nullptr) {
    report(ViolationKind::MissingBasepoint, x.basepoint(), "basepoint is not a cell");
  } else if (base->dim != 0 || !base->weight.is_neg_inf() || !base->boundary.empty()) {
    report(ViolationKind::BasepointNotEternalPoint, base->id,
           "basepoint must be a 0-cell of weight -inf with empty boundary");
  }

  for (const auto& c : x.cells()) {
    bool resolved = true;
    for (const auto& b : c.boundary) {
      const Cell* face = x.find(b);
      if (face == nullptr) {
        report(ViolationKind::UnresolvedBoundary, c.id, "boundary refers to unknown cell '" + b + "'");
        resolved = false;
        continue;
      }
      if (face->dim != c.dim - 1) {
        report(ViolationKind::BoundaryDimensionMismatch, c.id,
               "boundary cell '" + b + "' has dimension " + std::to_string(face->dim));
      }
      if (c.weight < face->weight) {
        report(ViolationKind::WeightMonotonicityViolation, c.id,
               "boundary cell '" + b + "' has weight " + to_string(face->weight) + " > " +
                   to_string(c.weight));
      }
    }
    if (!resolved || c.boundary.empty()) continue;

    std::vector<std::string> dd;
    bool dd_resolved = true;
    for (const auto& b : c.boundary) {
      const Cell* face = x.find(b);
      for (const auto& bb : face->boundary) {
        if (x.find(bb) == nullptr) dd_resolved = false;
        dd.push_back(bb);
      }
    }
    if (dd_resolved && !reduce_mod2(std::move(dd)).empty()) {
      report(ViolationKind::BoundaryNotClosed, c.id, "boundary of the boundary is nonzero mod 2");
    }
  }
  return out;
}

FilteredComplex sublevel(const FilteredComplex& x, const Exponent& r) {
  std::vector<Cell> cells;
  for (const auto& c : x.cells()) {
    if (x.is_basepoint(c) || c.weight <= r) cells.push_back(c);
  }
  return FilteredComplex(x.basepoint(), std::move(cells));
}

std::vector<Rational> spectrum(const FilteredComplex& x) {
  std::set<Rational> values;
  for (const auto& c : x.cells()) {
    if (c.weight.is_finite()) values.insert(c.weight.value());
  }
  return {values.begin(), values.end()};
}

FilteredComplex shift(const FilteredComplex& x, const Rational& a) {
  std::vector<Cell> cells(x.cells().begin(), x.cells().end());
  for (auto& c : cells) {
    if (c.weight.is_finite()) c.weight = Rational(c.weight.value() + a);
  }
  return FilteredComplex(x.basepoint(), std::move(cells));
}

FilteredComplex cutoff(const FilteredComplex& x, const Rational& a) {
  std::vector<Cell> cells(x.cells().begin(), x.cells().end());
  for (auto& c : cells) {
    if (c.id != x.basepoint()) c.weight = std::max(c.weight, Exponent(a));
  }
  return FilteredComplex(x.basepoint(), std::move(cells));
}

FilteredComplex wedge(const FilteredComplex& x, const FilteredComplex& y) {
  const std::string base = "pt";
  std::vector<Cell> cells;
  cells.push_back({base, 0, Exponent::neg_inf(), {}});
  auto append = [&](const FilteredComplex& z, const std::string& prefix) {
    auto rename = [&](const std::string& id) { return id == z.basepoint() ? base : prefix + id; };
    for (const auto& c : z.cells()) {
      if (z.is_basepoint(c)) continue;
      Cell r{rename(c.id), c.dim, c.weight, {}};
      for (const auto& b : c.boundary) r.boundary.push_back(rename(b));
      cells.push_back(std::move(r));
    }
  };
  append(x, "l.");
  append(y, "r.");
  return FilteredComplex(base, std::move(cells));
}

FilteredComplex product(const FilteredComplex& x, const FilteredComplex& y, ProductVariant variant) {
  std::vector<Cell> cells;
  cells.reserve(x.size() * y.size());
  for (const auto& a : x.cells()) {
    for (const auto& b : y.cells()) {
      Cell c{pair_id(a.id, b.id), a.dim + b.dim, pair_weight(a.weight, b.weight, variant), {}};
      for (const auto& da : a.boundary) c.boundary.push_back(pair_id(da, b.id));
      for (const auto& db : b.boundary) c.boundary.push_back(pair_id(a.id, db));
      cells.push_back(std::move(c));
    }
  }
  require_unique_ids(cells);
  return FilteredComplex(pair_id(x.basepoint(), y.basepoint()), std::move(cells));
}

FilteredComplex smash(const FilteredComplex& x, const FilteredComplex& y, ProductVariant variant) {
  const std::string base = "pt";
  std::vector<Cell> cells;
  cells.push_back({base, 0, Exponent::neg_inf(), {}});
  for (const auto& a : x.cells()) {
    if (x.is_basepoint(a)) continue;
    for (const auto& b : y.cells()) {
      if (y.is_basepoint(b)) continue;
      Cell c{pair_id(a.id, b.id), a.dim + b.dim, pair_weight(a.weight, b.weight, variant), {}};
      for (const auto& da : a.boundary) {
        if (da != x.basepoint()) c.boundary.push_back(pair_id(da, b.id));
      }
      for (const auto& db : b.boundary) {
        if (db != y.basepoint()) c.boundary.push_back(pair_id(a.id, db));
      }
      cells.push_back(std::move(c));
    }
  }
  require_unique_ids(cells);
  return FilteredComplex(base, std::move(cells));
}

FilteredComplex suspend(const FilteredComplex& x) {
  std::vector<Cell> cells;
  cells.reserve(x.size());
  for (const auto& c : x.cells()) {
    if (x.is_basepoint(c)) {
      cells.push_back(c);
      continue;
    }
    Cell s{c.id, c.dim + 1, c.weight, {}};
    for (const auto& b : c.boundary) {
      if (b != x.basepoint()) s.boundary.push_back(b);
    }
    cells.push_back(std::move(s));
  }
  return FilteredComplex(x.basepoint(), std::move(cells));
}

FilteredComplex sphere(int k, const Exponent& l) {
  return FilteredComplex("pt", {{"pt", 0, Exponent::neg_inf(), {}}, {"e", k, l, {}}});
}

FilteredComplex point() { return FilteredComplex("pt", {{"pt", 0, Exponent::neg_inf(), {}}}); }

FilteredComplex torus(const Exponent& a, const Exponent& b, const Exponent& c) {
  return FilteredComplex("pt", {{"pt", 0, Exponent::neg_inf(), {}},
                                {"a", 1, a, {}},
                                {"b", 1, b, {}},
                                {"f", 2, c, {}}});
}

long long euler_char_sublevel(const FilteredComplex& x, const Exponent& r) {
  long long chi = 0;
  for (const auto& c : x.cells()) {
    if (c.weight <= r) chi += (c.dim % 2 == 0) ? 1 : -1;
  }
  return chi;
}

}  // namespace fcw
