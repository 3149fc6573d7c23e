#include "blomkit/resilience.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "blomkit/rng.hpp"

namespace blomkit {

std::size_t symmetric_unknown_index(std::uint32_t a, std::uint32_t b, std::uint32_t m) {
  assert(a <= b && b < m);
  // Unknowns (0,0)..(0,m-1), (1,1)..(1,m-1), ...
  std::size_t row_start = static_cast<std::size_t>(a) * m - static_cast<std::size_t>(a) * (a - 1) / 2;
  // For a = 0 the expression above relies on unsigned wrap; spell it out.
  if (a == 0) row_start = 0;
  return row_start + (b - a);
}

ConstraintSystem constraint_system(const FieldMatrix& public_matrix,
                                   const std::vector<NodeShare>& compromised, Prime q) {
  const std::uint32_t m = static_cast<std::uint32_t>(public_matrix.rows());
  const std::size_t unknowns = static_cast<std::size_t>(m) * (m + 1) / 2;

  std::unordered_set<std::uint32_t> seen;
  for (const NodeShare& share : compromised) {
    if (share.index < 1 || share.index > public_matrix.cols()) {
      throw std::invalid_argument("compromised node index " + std::to_string(share.index) +
                                  " outside public matrix");
    }
    if (!seen.insert(share.index).second) {
      throw std::invalid_argument("duplicate compromised node index " + std::to_string(share.index));
    }
    if (share.private_row.size() != m) {
      throw std::invalid_argument("private row length does not match public-matrix row count");
    }
    for (FieldElement v : share.private_row) {
      if (v >= q.value()) throw std::invalid_argument("private row entry not reduced mod q");
    }
  }

  ConstraintSystem system;
  system.matrix_size = m;
  system.unknown_count = unknowns;
  system.rows = FieldMatrix(compromised.size() * m, unknowns);
  system.rhs.reserve(compromised.size() * m);

  std::size_t eq = 0;
  for (const NodeShare& share : compromised) {
    const std::size_t col = share.index - 1;
    // Row r of the share pins sum_a S[r][a] * P[a][node] to a known value.
    for (std::uint32_t r = 0; r < m; ++r) {
      for (std::uint32_t a = 0; a < m; ++a) {
        std::size_t unknown = symmetric_unknown_index(std::min(r, a), std::max(r, a), m);
        system.rows(eq, unknown) = public_matrix(a, col);
      }
      system.rhs.push_back(share.private_row[r]);
      ++eq;
    }
  }
  return system;
}

KeyFunctional key_functional(const FieldMatrix& public_matrix, std::uint32_t i, std::uint32_t j,
                             Prime q) {
  const std::uint32_t m = static_cast<std::uint32_t>(public_matrix.rows());
  if (i < 1 || i > public_matrix.cols() || j < 1 || j > public_matrix.cols()) {
    throw std::invalid_argument("node id outside public matrix");
  }
  const std::size_t ci = i - 1;
  const std::size_t cj = j - 1;
  KeyFunctional f;
  f.coefficients.assign(static_cast<std::size_t>(m) * (m + 1) / 2, 0);
  for (std::uint32_t a = 0; a < m; ++a) {
    f.coefficients[symmetric_unknown_index(a, a, m)] =
        mul_mod(public_matrix(a, ci), public_matrix(a, cj), q);
    for (std::uint32_t b = a + 1; b < m; ++b) {
      FieldElement cross = add_mod(mul_mod(public_matrix(a, ci), public_matrix(b, cj), q),
                                   mul_mod(public_matrix(b, ci), public_matrix(a, cj), q), q);
      f.coefficients[symmetric_unknown_index(a, b, m)] = cross;
    }
  }
  return f;
}

Determination is_key_determined(const ConstraintSystem& system, const KeyFunctional& functional,
                                Prime q) {
  if (functional.coefficients.size() != system.unknown_count) {
    throw std::invalid_argument("functional width does not match unknown count");
  }
  // Honest shares always yield a consistent system; reject garbage inputs.
  if (system.rows.rows() > 0) {
    FieldMatrix augmented(system.rows.rows(), system.unknown_count + 1);
    for (std::size_t r = 0; r < system.rows.rows(); ++r) {
      for (std::size_t c = 0; c < system.unknown_count; ++c) augmented(r, c) = system.rows(r, c);
      augmented(r, system.unknown_count) = system.rhs[r];
    }
    if (rank(system.rows, q) != rank(augmented, q)) {
      throw std::invalid_argument("constraint system is inconsistent");
    }
  }
  std::optional<std::vector<FieldElement>> combination =
      in_row_space(system.rows, functional.coefficients, q);
  if (!combination) return {};
  FieldElement value = 0;
  for (std::size_t k = 0; k < combination->size(); ++k) {
    value = add_mod(value, mul_mod((*combination)[k], system.rhs[k], q), q);
  }
  return {true, value};
}

std::set<FieldElement> brute_force_key_values(const ConstraintSystem& system,
                                              const KeyFunctional& functional, Prime q) {
  if (functional.coefficients.size() != system.unknown_count) {
    throw std::invalid_argument("functional width does not match unknown count");
  }
  double instance_size = 1.0;
  for (std::size_t k = 0; k < system.unknown_count; ++k) {
    instance_size *= static_cast<double>(q.value());
    if (instance_size > 1e7) {
      throw std::invalid_argument("brute-force instance too large: q^" +
                                  std::to_string(system.unknown_count) + " exceeds 10^7");
    }
  }

  std::set<FieldElement> values;
  std::vector<FieldElement> assignment(system.unknown_count, 0);
  while (true) {
    bool satisfied = true;
    for (std::size_t e = 0; e < system.rows.rows() && satisfied; ++e) {
      FieldElement acc = 0;
      for (std::size_t k = 0; k < system.unknown_count; ++k) {
        acc = add_mod(acc, mul_mod(system.rows(e, k), assignment[k], q), q);
      }
      satisfied = acc == system.rhs[e];
    }
    if (satisfied) {
      FieldElement key = 0;
      for (std::size_t k = 0; k < system.unknown_count; ++k) {
        key = add_mod(key, mul_mod(functional.coefficients[k], assignment[k], q), q);
      }
      values.insert(key);
    }
    // Odometer step over GF(q)^unknowns.
    std::size_t pos = 0;
    while (pos < assignment.size()) {
      if (++assignment[pos] < q.value()) break;
      assignment[pos] = 0;
      ++pos;
    }
    if (pos == assignment.size()) break;
  }
  return values;
}

namespace {

// Advances a k-subset of {1..n} in lexicographic order; returns false after
// the last subset.
bool next_combination(std::vector<std::uint32_t>& subset, std::uint32_t n) {
  const std::size_t k = subset.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i-- > 0) {
    if (subset[i] < n - (k - 1 - i)) {
      ++subset[i];
      for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::uint32_t> first_combination(std::size_t k) {
  std::vector<std::uint32_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = static_cast<std::uint32_t>(i + 1);
  return subset;
}

// First determined key between uncompromised nodes under this coalition, with
// pairs scanned in lexicographic order.
std::optional<ThresholdReport> probe_coalition(const Network& network,
                                               const std::vector<std::uint32_t>& subset) {
  const std::uint32_t n = network.params.network_size;
  const Prime q = network.params.modulus;
  std::vector<bool> compromised(n + 1, false);
  std::vector<NodeShare> coalition_shares;
  coalition_shares.reserve(subset.size());
  for (std::uint32_t node : subset) {
    compromised[node] = true;
    coalition_shares.push_back(network.shares[node - 1]);
  }
  ConstraintSystem system = constraint_system(network.public_matrix, coalition_shares, q);
  for (std::uint32_t i = 1; i <= n; ++i) {
    if (compromised[i]) continue;
    for (std::uint32_t j = i + 1; j <= n; ++j) {
      if (compromised[j]) continue;
      Determination d =
          is_key_determined(system, key_functional(network.public_matrix, i, j, q), q);
      if (d.determined) {
        ThresholdReport report;
        report.attack_found = true;
        report.coalition_size = static_cast<std::uint32_t>(subset.size());
        report.witness_subset = subset;
        report.witness_i = i;
        report.witness_j = j;
        report.determined_value = d.value;
        return report;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ThresholdReport resilience_threshold(const Network& network, bool exhaustive,
                                     ThresholdSearchOptions options) {
  const std::uint32_t n = network.params.network_size;
  if (exhaustive && n > 16) {
    throw std::invalid_argument("exhaustive subset search is limited to N <= 16");
  }
  if (n < 3) return {};  // no coalition can leave a testable pair

  const std::uint32_t max_size = n - 2;  // at least two uncompromised nodes must remain
  if (exhaustive) {
    for (std::uint32_t size = 1; size <= max_size; ++size) {
      std::vector<std::uint32_t> subset = first_combination(size);
      do {
        if (auto report = probe_coalition(network, subset)) return *report;
      } while (next_combination(subset, n));
    }
    return {};
  }

  SeededRng rng(options.sample_seed);
  for (std::uint32_t size = 1; size <= max_size; ++size) {
    for (std::size_t trial = 0; trial < options.samples_per_size; ++trial) {
      // Partial Fisher-Yates over 1..n, keeping the first `size` entries.
      std::vector<std::uint32_t> pool(n);
      for (std::uint32_t i = 0; i < n; ++i) pool[i] = i + 1;
      for (std::uint32_t i = 0; i < size; ++i) {
        std::size_t pick = i + static_cast<std::size_t>(rng.next_below(n - i));
        std::swap(pool[i], pool[pick]);
      }
      std::vector<std::uint32_t> subset(pool.begin(), pool.begin() + size);
      std::sort(subset.begin(), subset.end());
      if (auto report = probe_coalition(network, subset)) return *report;
    }
  }
  return {};
}

std::vector<std::vector<std::optional<FieldElement>>> determination_matrix(
    const Network& network, const std::vector<std::uint32_t>& compromised) {
  const std::uint32_t n = network.params.network_size;
  const Prime q = network.params.modulus;
  std::vector<bool> is_compromised(n + 1, false);
  std::vector<NodeShare> coalition_shares;
  for (std::uint32_t node : compromised) {
    if (node < 1 || node > n) {
      throw std::invalid_argument("compromised node id out of range [1, " + std::to_string(n) + "]");
    }
    is_compromised[node] = true;
    coalition_shares.push_back(network.shares[node - 1]);
  }
  ConstraintSystem system = constraint_system(network.public_matrix, coalition_shares, q);

  std::vector<std::vector<std::optional<FieldElement>>> out(
      n, std::vector<std::optional<FieldElement>>(n));
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = i; j <= n; ++j) {
      std::optional<FieldElement> value;
      if (is_compromised[i] || is_compromised[j]) {
        // The coalition holds at least one endpoint's private row and can
        // synthesize the other endpoint's public column.
        const NodeShare& share =
            is_compromised[i] ? network.shares[i - 1] : network.shares[j - 1];
        std::uint32_t peer = is_compromised[i] ? j : i;
        value = derive_key(share, network.public_matrix.column(peer - 1), q);
      } else {
        Determination d =
            is_key_determined(system, key_functional(network.public_matrix, i, j, q), q);
        if (d.determined) value = d.value;
      }
      out[i - 1][j - 1] = value;
      out[j - 1][i - 1] = value;
    }
  }
  return out;
}

}  // namespace blomkit
