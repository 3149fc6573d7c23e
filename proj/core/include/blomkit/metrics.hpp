#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blomkit/field.hpp"
#include "blomkit/scheme.hpp"

namespace blomkit {

/// Number of distinct values among the pairwise keys K_ij, i < j (diagonal
/// excluded; keys are symmetric so unordered pairs are the natural unit).
std::size_t unique_key_count(const Network& network);

struct SweepRecord {
  std::uint32_t t = 0;
  std::uint32_t m = 0;
  std::uint64_t seed = 0;
  std::size_t unique_keys = 0;
};

struct SweepPoint {
  std::uint32_t t = 0;
  std::uint32_t m = 0;
  double mean_unique_keys = 0.0;
};

struct SweepResult {
  std::uint32_t network_size = 0;
  std::uint64_t modulus = 0;
  std::vector<SweepRecord> records;    // per (t, seed), ordered by t then seed
  std::vector<SweepPoint> aggregates;  // per t, mean over seeds
};

/// Provisions a modified-Hadamard network for each (t, seed) with m = t and
/// records unique-key counts. Deterministic given the seed list.
SweepResult sweep_t(std::uint32_t network_size, Prime q, const std::vector<std::uint32_t>& t_values,
                    const std::vector<std::uint64_t>& seeds);

/// The t at which the largest single-step increase of the aggregated series
/// occurs (the upper endpoint of the step). Requires >= 2 aggregate points.
std::uint32_t largest_jump_t(const SweepResult& sweep);

/// N/2 + 1 with integer halving (odd N rounds the half down).
std::uint32_t recommended_t(std::uint32_t network_size);

/// Per-variant storage and per-key work. The modified variant does no general
/// multiplications: its public-column entries are 1 or q-1, so each product
/// is a keep-or-negate, counted as a sign op.
struct VariantCost {
  Variant variant = Variant::classic_vandermonde;
  std::uint32_t stored_field_elements_per_node = 0;
  std::uint32_t stored_bits_per_node = 0;
  std::uint32_t mults_per_key = 0;
  std::uint32_t sign_ops_per_key = 0;
  std::uint32_t adds_per_key = 0;
  std::uint32_t column_synthesis_ops = 0;
};

VariantCost cost_model(const SchemeParams& params);

/// ceil(log2 q), the width of one stored field element.
std::uint32_t bits_per_element(Prime q);

}  // namespace blomkit
