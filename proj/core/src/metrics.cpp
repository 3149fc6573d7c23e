#include "blomkit/metrics.hpp"

#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace blomkit {

std::size_t unique_key_count(const Network& network) {
  FieldMatrix keys = full_key_matrix(network);
  std::set<FieldElement> distinct;
  for (std::size_t i = 0; i < keys.rows(); ++i) {
    for (std::size_t j = i + 1; j < keys.cols(); ++j) distinct.insert(keys(i, j));
  }
  // A single node has no pair; count the empty set as zero distinct keys.
  return distinct.size();
}

SweepResult sweep_t(std::uint32_t network_size, Prime q, const std::vector<std::uint32_t>& t_values,
                    const std::vector<std::uint64_t>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("sweep needs at least one seed");
  SweepResult result;
  result.network_size = network_size;
  result.modulus = q.value();
  for (std::uint32_t t : t_values) {
    if (t < 1 || t > network_size) {
      throw std::invalid_argument("sweep parameter t=" + std::to_string(t) + " out of range [1, " +
                                  std::to_string(network_size) + "]");
    }
    const std::uint32_t m = t;  // module default mapping
    double sum = 0.0;
    for (std::uint64_t seed : seeds) {
      SchemeParams params{Variant::modified_hadamard, network_size, m, q, seed};
      std::size_t unique = unique_key_count(provision(params));
      result.records.push_back(SweepRecord{t, m, seed, unique});
      sum += static_cast<double>(unique);
    }
    result.aggregates.push_back(SweepPoint{t, m, sum / static_cast<double>(seeds.size())});
  }
  return result;
}

std::uint32_t largest_jump_t(const SweepResult& sweep) {
  if (sweep.aggregates.size() < 2) {
    throw std::invalid_argument("jump location needs at least two sweep points");
  }
  std::uint32_t best_t = sweep.aggregates[1].t;
  double best_step = sweep.aggregates[1].mean_unique_keys - sweep.aggregates[0].mean_unique_keys;
  for (std::size_t k = 2; k < sweep.aggregates.size(); ++k) {
    double step = sweep.aggregates[k].mean_unique_keys - sweep.aggregates[k - 1].mean_unique_keys;
    if (step > best_step) {
      best_step = step;
      best_t = sweep.aggregates[k].t;
    }
  }
  return best_t;
}

std::uint32_t recommended_t(std::uint32_t network_size) {
  if (network_size < 2) throw std::invalid_argument("recommended t needs a network of at least 2");
  return network_size / 2 + 1;
}

std::uint32_t bits_per_element(Prime q) {
  return std::bit_width(q.value() - 1);
}

VariantCost cost_model(const SchemeParams& params) {
  const std::uint32_t m = params.row_count;
  if (m == 0) throw std::invalid_argument("row count must be positive");
  const std::uint32_t bits = bits_per_element(params.modulus);
  VariantCost cost;
  cost.variant = params.variant;
  cost.adds_per_key = m - 1;
  if (params.variant == Variant::classic_vandermonde) {
    // Each node stores its private row plus its own public column.
    cost.stored_field_elements_per_node = 2 * m;
    cost.mults_per_key = m;
    cost.sign_ops_per_key = 0;
    cost.column_synthesis_ops = 0;
  } else {
    cost.stored_field_elements_per_node = m;
    cost.mults_per_key = 0;
    cost.sign_ops_per_key = m;
    cost.column_synthesis_ops = m;
  }
  cost.stored_bits_per_node = cost.stored_field_elements_per_node * bits;
  return cost;
}

}  // namespace blomkit
