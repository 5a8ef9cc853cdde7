#include "nfl/algorithms.hpp"

#include <array>
#include <stdexcept>

#include "nfl/encoding.hpp"

namespace nfl {

void validate(const AlgorithmSpec& spec) {
  if (spec.encoding_length < 1 || spec.encoding_length > 32)
    throw std::invalid_argument("encoding length must be in [1, 32]");
  if (const auto* g = std::get_if<GaussianMutation>(&spec.mutation)) {
    if (!(g->sigma > 0.0))
      throw std::invalid_argument("gaussian sigma must be positive");
    if (spec.encoding_length != 32)
      throw std::invalid_argument("gaussian mutation requires 32-bit encoding");
  } else if (const auto* p = std::get_if<PerBitMutation>(&spec.mutation)) {
    if (p->rate < 0.0 || p->rate > 1.0)
      throw std::invalid_argument("per-bit rate must be in [0, 1]");
  } else if (const auto* k = std::get_if<KFlipsMutation>(&spec.mutation)) {
    if (k->flips < 1 || k->flips > spec.encoding_length)
      throw std::invalid_argument("flip count must be in [1, L]");
  }
}

BitGenotype apply_gaussian_delta(const BitGenotype& g, double delta) {
  return encode_unit_interval(decode_unit_interval(g) + delta);
}

BitGenotype mutate_gaussian(const BitGenotype& g, double sigma, RngStream& rng) {
  return apply_gaussian_delta(g, rng.normal(0.0, sigma));
}

BitGenotype mutate_per_bit(const BitGenotype& g, double rate, RngStream& rng) {
  std::uint32_t bits = g.bits();
  for (int i = 0; i < g.length(); ++i)
    if (rng.uniform01() < rate) bits ^= (1u << i);
  return BitGenotype(bits, g.length());
}

BitGenotype mutate_k_flips(const BitGenotype& g, int flips, RngStream& rng) {
  const int length = g.length();
  // Partial Fisher-Yates over the bit positions.
  std::array<int, 32> pos{};
  for (int i = 0; i < length; ++i) pos[i] = i;
  std::uint32_t bits = g.bits();
  for (int i = 0; i < flips; ++i) {
    const int j =
        i + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(length - i)));
    std::swap(pos[i], pos[j]);
    bits ^= (1u << pos[i]);
  }
  return BitGenotype(bits, length);
}

BitGenotype mutate(const AlgorithmSpec& spec, const BitGenotype& g, RngStream& rng) {
  if (const auto* gm = std::get_if<GaussianMutation>(&spec.mutation))
    return mutate_gaussian(g, gm->sigma, rng);
  if (const auto* pb = std::get_if<PerBitMutation>(&spec.mutation))
    return mutate_per_bit(g, pb->rate, rng);
  return mutate_k_flips(g, std::get<KFlipsMutation>(spec.mutation).flips, rng);
}

AlgorithmSpec b_preset(int k, bool per_bit_b) {
  if (k < 1 || k > 16) throw std::invalid_argument("B index must be in [1, 16]");
  AlgorithmSpec spec;
  spec.name = "B" + std::to_string(k);
  spec.encoding_length = 16;
  if (per_bit_b)
    spec.mutation = PerBitMutation{static_cast<double>(k) / 16.0};
  else
    spec.mutation = KFlipsMutation{k};
  spec.acceptance = Acceptance::kElitist;
  return spec;
}

std::optional<AlgorithmSpec> algorithm_preset(const std::string& name,
                                              bool per_bit_b) {
  if (name == "A1") return AlgorithmSpec{"A1", 32, GaussianMutation{0.001}, Acceptance::kElitist};
  if (name == "A2") return AlgorithmSpec{"A2", 32, GaussianMutation{0.01}, Acceptance::kElitist};
  if (name == "A3") return AlgorithmSpec{"A3", 32, PerBitMutation{0.3}, Acceptance::kElitist};
  if (name == "A4") return AlgorithmSpec{"A4", 32, PerBitMutation{0.1}, Acceptance::kElitist};
  if (name.size() >= 2 && name[0] == 'B') {
    int k = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return std::nullopt;
      k = k * 10 + (name[i] - '0');
    }
    if (k >= 1 && k <= 16) return b_preset(k, per_bit_b);
  }
  return std::nullopt;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"A1", "A2", "A3", "A4"};
    for (int k = 1; k <= 16; ++k) v.push_back("B" + std::to_string(k));
    return v;
  }();
  return names;
}

}  // namespace nfl
