#pragma once

#include <span>
#include <vector>

#include "netembed/rng.hpp"

namespace netembed {

// Walker alias table for O(1) draws from a discrete distribution
// proportional to nonnegative weights.
class AliasTable {
 public:
  // Throws std::invalid_argument when weights are empty, contain a negative
  // or non-finite entry, or sum to zero.
  explicit AliasTable(std::span<const double> weights);

  std::size_t sample(Rng& rng) const {
    const std::size_t slot = static_cast<std::size_t>(rng.next_below(prob_.size()));
    return rng.next_real() < prob_[slot] ? slot : alias_[slot];
  }

  std::size_t size() const noexcept { return prob_.size(); }

  // Exact probability of drawing index i (reconstructed from the table).
  double probability(std::size_t i) const;

 private:
  std::vector<double> prob_;
  std::vector<std::size_t> alias_;
};

}  // namespace netembed
