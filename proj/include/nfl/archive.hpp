#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nfl/bit_genotype.hpp"
#include "nfl/rng.hpp"

namespace nfl {

/// Set of all distinct solutions visited during one run. Members are never
/// removed and the size is bounded by the step budget of the run.
///
/// Open-addressing hash set keyed on the raw bit pattern; membership tests
/// sit on the innermost engine loop.
class Archive {
 public:
  explicit Archive(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) throw std::invalid_argument("archive capacity must be positive");
    std::size_t slots = 16;
    while (slots < capacity * 2) slots *= 2;
    slots_.assign(slots, kEmpty);
  }

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return size_; }
  bool full() const { return size_ == capacity_; }

  bool contains(const BitGenotype& g) const {
    const std::uint64_t key = g.bits();
    std::size_t i = slot_of(key);
    while (slots_[i] != kEmpty) {
      if (slots_[i] == key) return true;
      i = (i + 1) & (slots_.size() - 1);
    }
    return false;
  }

  /// Adds g if absent. Returns true iff g was inserted. Inserting a new
  /// member into a full archive is a run-termination condition and throws.
  bool insert(const BitGenotype& g) {
    const std::uint64_t key = g.bits();
    std::size_t i = slot_of(key);
    while (slots_[i] != kEmpty) {
      if (slots_[i] == key) return false;
      i = (i + 1) & (slots_.size() - 1);
    }
    if (size_ == capacity_)
      throw std::length_error("archive capacity exceeded");
    slots_[i] = key;
    ++size_;
    return true;
  }

 private:
  // Genotypes are at most 32 bits, so any value above 2^32 works as the
  // empty-slot marker.
  static constexpr std::uint64_t kEmpty = ~0ull;

  std::size_t slot_of(std::uint64_t key) const {
    return RngStream::mix64(key) & (slots_.size() - 1);
  }

  std::size_t capacity_;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> slots_;
};

}  // namespace nfl
