#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fcw/extended.hpp"

namespace fcw {

/// One cell of a filtered CW complex.
///
/// `weight` is the first filtration level at which the cell is present
/// (-inf for eternal cells). `boundary` is the mod-2 cellular boundary chain,
/// kept as a sorted list of cell ids with no repeats.
struct Cell {
  std::string id;
  int dim = 0;
  Exponent weight = Exponent::neg_inf();
  std::vector<std::string> boundary;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Finite pointed cell complex with a cell-wise filtration.
///
/// The constructor only normalizes (cells sorted by (dim, id), boundary
/// chains reduced mod 2); it does not check the complex invariants. Use
/// validate() for that. All other operations take a valid complex.
class FilteredComplex {
 public:
  FilteredComplex(std::string basepoint, std::vector<Cell> cells);

  const std::string& basepoint() const noexcept { return basepoint_; }
  std::span<const Cell> cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }

  /// nullptr when no cell has this id.
  const Cell* find(std::string_view id) const;
  bool is_basepoint(const Cell& cell) const { return cell.id == basepoint_; }

  /// Same complex with every id passed through `rename` (boundaries too).
  FilteredComplex renamed(const std::function<std::string(const std::string&)>& rename) const;

  friend bool operator==(const FilteredComplex& a, const FilteredComplex& b) {
    return a.basepoint_ == b.basepoint_ && a.cells_ == b.cells_;
  }

 private:
  std::string basepoint_;
  std::vector<Cell> cells_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Mod-2 normal form of a chain: sorted, pairs of equal ids cancel.
std::vector<std::string> reduce_mod2(std::vector<std::string> chain);

/// True when `id` is a legal cell id: nonempty, characters from
/// [A-Za-z0-9_.-] plus `*()` used by product ids.
bool is_valid_cell_id(std::string_view id);

enum class ViolationKind {
  InvalidCellId,
  DuplicateCellId,
  MissingBasepoint,
  BasepointNotEternalPoint,
  NegativeDimension,
  InfiniteWeight,
  UnresolvedBoundary,
  BoundaryDimensionMismatch,
  WeightMonotonicityViolation,
  BoundaryNotClosed,
};

std::string_view name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string cell;
  std::string message;
};

/// Every violated invariant, with the offending cell id. Empty means valid.
std::vector<Violation> validate(const FilteredComplex& x);

/// Cells of weight <= r, basepoint always included.
FilteredComplex sublevel(const FilteredComplex& x, const Exponent& r);

/// Sorted distinct finite weights.
std::vector<Rational> spectrum(const FilteredComplex& x);

/// Raises every finite weight by `a`; -inf stays -inf.
FilteredComplex shift(const FilteredComplex& x, const Rational& a);

/// Every non-basepoint weight becomes max(weight, a).
FilteredComplex cutoff(const FilteredComplex& x, const Rational& a);

/// One-point union. Non-basepoint ids get `l.` / `r.` prefixes and the
/// merged basepoint is `pt`.
FilteredComplex wedge(const FilteredComplex& x, const FilteredComplex& y);

enum class ProductVariant { naive, filtered };

/// All pairs of cells (basepoint pairs included) with id `(a*b)`.
/// Weight is max(w(a), w(b)) for naive, w(a) + w(b) (-inf absorbing) for
/// filtered. Throws IdCollision if user ids make pair ids ambiguous.
FilteredComplex product(const FilteredComplex& x, const FilteredComplex& y, ProductVariant variant);

/// Pairs of non-basepoint cells plus a fresh basepoint `pt`; the boundary
/// drops every term with a basepoint factor.
FilteredComplex smash(const FilteredComplex& x, const FilteredComplex& y, ProductVariant variant);

/// Reduced suspension: dimension + 1, same weight, basepoint terms dropped
/// from boundaries. Agrees with smash(sphere(1, 0), x, filtered).
FilteredComplex suspend(const FilteredComplex& x);

/// Basepoint `pt` plus one k-cell `e` of weight l with empty boundary.
FilteredComplex sphere(int k, const Exponent& l);

/// The one-cell complex.
FilteredComplex point();

/// Cell model of the filtered torus: 1-cells `a`, `b` and 2-cell `f` at the
/// given weights, all boundaries zero mod 2.
FilteredComplex torus(const Exponent& a, const Exponent& b, const Exponent& c);

/// Unreduced Euler characteristic of X(r): sum of (-1)^dim over all cells of
/// weight <= r, basepoint and eternal cells included.
long long euler_char_sublevel(const FilteredComplex& x, const Exponent& r);

}  // namespace fcw
