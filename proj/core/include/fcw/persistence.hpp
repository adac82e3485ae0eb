#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcw/complex.hpp"

namespace fcw {

/// Half-open interval [birth, death) in homological degree `dim`.
/// birth may be -inf (eternal class), death may be +inf (essential class).
struct Bar {
  int dim = 0;
  Extended birth;
  Extended death = Extended::pos_inf();

  friend bool operator==(const Bar&, const Bar&) = default;
  friend auto operator<=>(const Bar& a, const Bar& b) {
    if (auto c = a.dim <=> b.dim; c != 0) return c;
    if (auto c = a.birth <=> b.birth; c != 0) return c;
    return a.death <=> b.death;
  }
};

/// Multiset of bars, held sorted by (dim, birth, death).
class Barcode {
 public:
  Barcode() = default;
  /// Throws std::invalid_argument for a bar with birth >= death.
  explicit Barcode(std::vector<Bar> bars);

  const std::vector<Bar>& bars() const noexcept { return bars_; }
  std::size_t size() const noexcept { return bars_.size(); }

  /// Bars of one degree.
  Barcode restricted_to(int dim) const;

  friend bool operator==(const Barcode&, const Barcode&) = default;

 private:
  std::vector<Bar> bars_;
};

/// Sublevel persistent homology over the two-element field.
///
/// Cells are ordered by (weight, dim, id) and the boundary matrix is reduced
/// column by column. A pair whose cells share a weight has length zero and is
/// dropped; unpaired creator cells give bars ending at +inf.
Barcode barcode(const FilteredComplex& x);

/// sum_k (-1)^k #{dim-k bars with birth <= r < death}.
long long euler_from_barcode(const Barcode& b, const Exponent& r);

/// Exact bottleneck distance between the dim-restricted barcodes, or the
/// maximum over all degrees when `dim` is absent. Returns +inf when an
/// infinite bar has no partner.
Extended bottleneck(const Barcode& a, const Barcode& b, std::optional<int> dim = std::nullopt);

/// `dim\tbirth\tdeath` header followed by one row per bar.
std::string to_tsv(const Barcode& b);

}  // namespace fcw
