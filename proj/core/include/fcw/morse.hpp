#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fcw/complex.hpp"
#include "fcw/lambda_ring.hpp"

namespace fcw {

struct CriticalPoint {
  Rational value;  // critical value, >= 0
  int index = 0;   // Morse index

  friend bool operator==(const CriticalPoint&, const CriticalPoint&) = default;
};

/// Critical points of a non-negative Morse function on a compact manifold.
class MorseDatum {
 public:
  /// Throws InvalidMorseDatum when empty, when a value is negative or an
  /// index is negative, or when there is no index-0 point.
  explicit MorseDatum(std::vector<CriticalPoint> points);

  const std::vector<CriticalPoint>& points() const noexcept { return points_; }

  /// Position of the lowest-valued index-0 point (first one on ties).
  std::size_t basepoint_index() const;

 private:
  std::vector<CriticalPoint> points_;
};

/// Cell id used for the i-th critical point in morse_complex().
std::string critical_cell_id(std::size_t i);

/// Boundary chains by cell id.
using BoundaryMap = std::map<std::string, std::vector<std::string>>;

/// One cell per critical point: point i becomes cell `c<i>` of dimension
/// index and weight value, except the lowest minimum which becomes the
/// basepoint. Boundaries are empty unless supplied; supplied boundaries that
/// break the complex invariants raise InvalidBoundaries.
FilteredComplex morse_complex(const MorseDatum& datum, const std::optional<BoundaryMap>& boundaries = std::nullopt);

/// Upper bound on the sphere-fragmentation size: sum of all critical values.
Rational bound_size_spheres(const MorseDatum& datum);

/// Same bound when all cells at one level attach at once: sum of distinct
/// critical values.
Rational bound_size_wedges(const MorseDatum& datum);

struct LinearizationEntry {
  int sphere_dim = 0;
  Rational weight;

  friend bool operator==(const LinearizationEntry&, const LinearizationEntry&) = default;
};

/// Ordered sphere attachments (S^{k_i} at level r_i) building a complex,
/// kept sorted by (weight, sphere_dim).
class Linearization {
 public:
  Linearization() = default;
  /// Throws NegativeWeight for r_i < 0 and std::invalid_argument for k_i < 0.
  explicit Linearization(std::vector<LinearizationEntry> entries);

  const std::vector<LinearizationEntry>& entries() const noexcept { return entries_; }

  friend bool operator==(const Linearization&, const Linearization&) = default;

 private:
  std::vector<LinearizationEntry> entries_;
};

/// Each non-eternal d-cell attached at weight w contributes (d - 1, w).
/// Throws UnsupportedCell for a finite-weight 0-cell and NegativeWeight for
/// a negative weight.
Linearization canonical_linearization(const FilteredComplex& x);

struct LinearizationStats {
  LambdaPoly lambda_poly;  // sum t^{r_i}
  Rational count;          // number of entries
  Rational weight;         // sum r_i
};

LinearizationStats linearization_stats(const Linearization& l);

/// sum (-1)^{k_i + 1} t^{r_i}.
LambdaPoly euler_poly_rel(const Linearization& l);

}  // namespace fcw
