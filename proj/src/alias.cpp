#include "netembed/alias.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace netembed {

AliasTable::AliasTable(std::span<const double> weights) {
  if (weights.empty()) throw std::invalid_argument("empty weight vector");
  double total = 0.0;
  for (const double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw std::invalid_argument("weights must be nonnegative and finite");
    total += w;
  }
  if (total <= 0.0) throw std::invalid_argument("weights sum to zero");

  const std::size_t k = weights.size();
  prob_.resize(k);
  alias_.resize(k);
  std::vector<double> scaled(k);
  std::vector<std::size_t> small, large;
  for (std::size_t i = 0; i < k; ++i) {
    scaled[i] = weights[i] * static_cast<double>(k) / total;
    (scaled[i] < 1.0 ? small : large).push_back(i);
  }
  while (!small.empty() && !large.empty()) {
    const std::size_t s = small.back();
    const std::size_t l = large.back();
    small.pop_back();
    large.pop_back();
    prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] -= 1.0 - scaled[s];
    (scaled[l] < 1.0 ? small : large).push_back(l);
  }
  // Leftovers are exactly 1 up to rounding.
  for (const std::size_t i : large) {
    prob_[i] = 1.0;
    alias_[i] = i;
  }
  for (const std::size_t i : small) {
    prob_[i] = 1.0;
    alias_[i] = i;
  }
}

double AliasTable::probability(std::size_t i) const {
  double p = prob_[i];
  for (std::size_t j = 0; j < prob_.size(); ++j)
    if (alias_[j] == i && j != i) p += 1.0 - prob_[j];
  return p / static_cast<double>(prob_.size());
}

}  // namespace netembed
