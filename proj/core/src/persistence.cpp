#include "fcw/persistence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace fcw {

Barcode::Barcode(std::vector<Bar> bars) : bars_(std::move(bars)) {
  for (const auto& bar : bars_) {
    if (!(bar.birth < bar.death)) {
      throw std::invalid_argument("bar [" + to_string(bar.birth) + ", " + to_string(bar.death) +
                                  ") is empty");
    }
  }
  std::sort(bars_.begin(), bars_.end());
}

Barcode Barcode::restricted_to(int dim) const {
  std::vector<Bar> out;
  for (const auto& bar : bars_) {
    if (bar.dim == dim) out.push_back(bar);
  }
  return Barcode(std::move(out));
}

Barcode barcode(const FilteredComplex& x) {
  std::vector<const Cell*> order;
  order.reserve(x.size());
  for (const auto& c : x.cells()) order.push_back(&c);
  std::sort(order.begin(), order.end(), [](const Cell* a, const Cell* b) {
    if (a->weight != b->weight) return a->weight < b->weight;
    if (a->dim != b->dim) return a->dim < b->dim;
    return a->id < b->id;
  });

  std::unordered_map<std::string, int> position;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) position.emplace(order[i]->id, i);

  const int n = static_cast<int>(order.size());
  std::vector<std::vector<int>> columns(n);
  for (int j = 0; j < n; ++j) {
    for (const auto& face : order[j]->boundary) columns[j].push_back(position.at(face));
    std::sort(columns[j].begin(), columns[j].end());
  }

  std::vector<int> pivot_column(n, -1);  // row -> column whose lowest entry it is
  std::vector<bool> paired(n, false);
  std::vector<Bar> bars;
  std::vector<int> scratch;

  for (int j = 0; j < n; ++j) {
    auto& col = columns[j];
    while (!col.empty() && pivot_column[col.back()] != -1) {
      const auto& other = columns[pivot_column[col.back()]];
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(scratch));
      col.swap(scratch);
    }
    if (col.empty()) continue;
    const int low = col.back();
    pivot_column[low] = j;
    paired[low] = paired[j] = true;
    const Cell& creator = *order[low];
    const Cell& destroyer = *order[j];
    if (creator.weight < destroyer.weight) {
      bars.push_back({creator.dim, creator.weight, destroyer.weight});
    }
  }

  for (int i = 0; i < n; ++i) {
    if (!paired[i]) bars.push_back({order[i]->dim, order[i]->weight, Extended::pos_inf()});
  }
  return Barcode(std::move(bars));
}

long long euler_from_barcode(const Barcode& b, const Exponent& r) {
  long long chi = 0;
  for (const auto& bar : b.bars()) {
    if (bar.birth <= r && r < bar.death) chi += (bar.dim % 2 == 0) ? 1 : -1;
  }
  return chi;
}

namespace {

Extended endpoint_gap(const Extended& a, const Extended& b) {
  if (a.is_finite() && b.is_finite()) return Extended(Rational(abs(a.value() - b.value())));
  if (a.kind() == b.kind()) return Extended(0);
  return Extended::pos_inf();
}

Extended pair_cost(const Bar& a, const Bar& b) {
  return std::max(endpoint_gap(a.birth, b.birth), endpoint_gap(a.death, b.death));
}

Extended diagonal_cost(const Bar& a) {
  if (!a.birth.is_finite() || !a.death.is_finite()) return Extended::pos_inf();
  return Extended(Rational((a.death.value() - a.birth.value()) / 2));
}

// Kuhn's augmenting-path matching; sizes here are desk scale.
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(const std::vector<std::vector<int>>& adjacency, int right_size)
      : adjacency_(adjacency), match_right_(right_size, -1) {}

  bool perfect() {
    for (int u = 0; u < static_cast<int>(adjacency_.size()); ++u) {
      visited_.assign(match_right_.size(), false);
      if (!augment(u)) return false;
    }
    return true;
  }

 private:
  bool augment(int u) {
    for (int v : adjacency_[u]) {
      if (visited_[v]) continue;
      visited_[v] = true;
      if (match_right_[v] == -1 || augment(match_right_[v])) {
        match_right_[v] = u;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<int>>& adjacency_;
  std::vector<int> match_right_;
  std::vector<bool> visited_;
};

// Left vertices: bars of `a`, then diagonal copies of bars of `b`.
// Right vertices: bars of `b`, then diagonal copies of bars of `a`.
bool feasible(const std::vector<Bar>& a, const std::vector<Bar>& b, const Extended& delta) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  std::vector<std::vector<int>> adjacency(na + nb);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      if (pair_cost(a[i], b[j]) <= delta) adjacency[i].push_back(j);
    }
    if (diagonal_cost(a[i]) <= delta) adjacency[i].push_back(nb + i);
  }
  for (int j = 0; j < nb; ++j) {
    if (diagonal_cost(b[j]) <= delta) adjacency[na + j].push_back(j);
    for (int i = 0; i < na; ++i) adjacency[na + j].push_back(nb + i);
  }
  return BipartiteMatcher(adjacency, na + nb).perfect();
}

Extended bottleneck_same_dim(const std::vector<Bar>& a, const std::vector<Bar>& b) {
  std::set<Extended> candidates{Extended(0)};
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (auto c = pair_cost(x, y); c.is_finite()) candidates.insert(c);
    }
    if (auto c = diagonal_cost(x); c.is_finite()) candidates.insert(c);
  }
  for (const auto& y : b) {
    if (auto c = diagonal_cost(y); c.is_finite()) candidates.insert(c);
  }
  std::vector<Extended> sorted(candidates.begin(), candidates.end());

  // Feasibility is monotone in delta; find the least feasible candidate.
  std::size_t lo = 0;
  std::size_t hi = sorted.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible(a, b, sorted[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo == sorted.size() ? Extended::pos_inf() : sorted[lo];
}

}  // namespace

Extended bottleneck(const Barcode& a, const Barcode& b, std::optional<int> dim) {
  std::set<int> dims;
  if (dim) {
    dims.insert(*dim);
  } else {
    for (const auto& bar : a.bars()) dims.insert(bar.dim);
    for (const auto& bar : b.bars()) dims.insert(bar.dim);
  }
  Extended worst(0);
  for (int d : dims) {
    worst = std::max(worst, bottleneck_same_dim(a.restricted_to(d).bars(), b.restricted_to(d).bars()));
  }
  return worst;
}

std::string to_tsv(const Barcode& b) {
  std::string out = "dim\tbirth\tdeath\n";
  for (const auto& bar : b.bars()) {
    out += std::to_string(bar.dim) + "\t" + to_string(bar.birth) + "\t" + to_string(bar.death) + "\n";
  }
  return out;
}

}  // namespace fcw
