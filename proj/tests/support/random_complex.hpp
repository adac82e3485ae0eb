#pragma once

// Seeded generators for valid filtered complexes, polynomials and barcodes.

#include <random>
#include <string>
#include <vector>

#include "f2.hpp"
#include "fcw/complex.hpp"
#include "fcw/lambda_ring.hpp"
#include "fcw/persistence.hpp"

namespace fcw::testing {

struct ComplexShape {
  int max_cells = 12;  // including the basepoint
  int max_dim = 3;
  double eternal_probability = 0.15;
  bool nonnegative_weights = false;
  bool finite_zero_cells = true;  // finite-weight 0-cells besides the basepoint
  int weight_denominator = 4;
  int weight_min = -4;  // numerators
  int weight_max = 12;
};

inline Rational random_rational(std::mt19937_64& rng, int lo, int hi, int den) {
  std::uniform_int_distribution<int> num(lo, hi);
  return Rational(num(rng), den);
}

/// A random complex satisfying every invariant checked by validate().
/// Boundaries of cells of dimension >= 2 are random mod-2 cycles among the
/// eligible faces, so boundary-of-boundary vanishes by construction.
inline FilteredComplex random_complex(std::mt19937_64& rng, const ComplexShape& shape = {}) {
  std::vector<Cell> cells{{"pt", 0, Exponent::neg_inf(), {}}};
  std::uniform_int_distribution<int> count(1, shape.max_cells);
  std::uniform_real_distribution<double> unit(0, 1);
  const int n = count(rng);
  int lo = shape.nonnegative_weights ? 0 : shape.weight_min;
  for (int i = 1; i < n; ++i) {
    int dim = std::uniform_int_distribution<int>(shape.finite_zero_cells ? 0 : 1, shape.max_dim)(rng);
    Exponent weight = unit(rng) < shape.eternal_probability
                          ? Exponent::neg_inf()
                          : Exponent(random_rational(rng, lo, shape.weight_max, shape.weight_denominator));
    if (dim == 0 && !shape.finite_zero_cells) weight = Exponent::neg_inf();

    std::vector<const Cell*> faces;
    for (const auto& c : cells) {
      if (c.dim == dim - 1 && c.weight <= weight) faces.push_back(&c);
    }
    std::vector<std::string> boundary;
    if (dim == 1) {
      for (const Cell* f : faces) {
        if (unit(rng) < 0.4) boundary.push_back(f->id);
      }
    } else if (dim >= 2 && !faces.empty()) {
      // Cycles among the faces: kernel of their boundary map.
      std::vector<std::string> ids;
      for (const auto& c : cells) {
        if (c.dim == dim - 2) ids.push_back(c.id);
      }
      std::vector<BitVector> columns;
      for (const Cell* f : faces) {
        BitVector col(ids.size());
        for (const auto& b : f->boundary) {
          for (std::size_t k = 0; k < ids.size(); ++k) {
            if (ids[k] == b) col.flip(k);
          }
        }
        columns.push_back(col);
      }
      BitVector chosen(faces.size());
      for (const auto& z : kernel(columns)) {
        if (unit(rng) < 0.5) chosen ^= z;
      }
      for (std::size_t k = 0; k < faces.size(); ++k) {
        if (chosen.get(k)) boundary.push_back(faces[k]->id);
      }
    }
    cells.push_back({"c" + std::to_string(i), dim, weight, std::move(boundary)});
  }
  return FilteredComplex("pt", std::move(cells));
}

inline LambdaPoly random_poly(std::mt19937_64& rng, int max_terms = 5) {
  LambdaPoly p;
  const int terms = std::uniform_int_distribution<int>(0, max_terms)(rng);
  for (int i = 0; i < terms; ++i) {
    p.add_term(random_rational(rng, -8, 8, 4), random_rational(rng, -6, 6, 3));
  }
  return p;
}

/// Random bars on a coarse grid so that coincidences (and ties) are common.
inline Barcode random_barcode(std::mt19937_64& rng, int max_bars, int max_dim = 1) {
  std::vector<Bar> bars;
  const int n = std::uniform_int_distribution<int>(0, max_bars)(rng);
  std::uniform_real_distribution<double> unit(0, 1);
  for (int i = 0; i < n; ++i) {
    Bar b;
    b.dim = std::uniform_int_distribution<int>(0, max_dim)(rng);
    b.birth = unit(rng) < 0.1 ? Extended::neg_inf() : Extended(random_rational(rng, -4, 8, 2));
    if (unit(rng) < 0.15) {
      b.death = Extended::pos_inf();
    } else {
      Rational start = b.birth.is_finite() ? b.birth.value() : Rational(-5);
      b.death = Extended(Rational(start + random_rational(rng, 1, 8, 2)));
    }
    bars.push_back(b);
  }
  return Barcode(std::move(bars));
}

}  // namespace fcw::testing
