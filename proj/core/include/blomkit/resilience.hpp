#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "blomkit/field.hpp"
#include "blomkit/scheme.hpp"

namespace blomkit {

/// Index of unknown S[a][b] (0-based, a <= b) in the row-major upper-triangle
/// layout of the m(m+1)/2 free entries of a symmetric m x m matrix.
std::size_t symmetric_unknown_index(std::uint32_t a, std::uint32_t b, std::uint32_t m);

/// What a coalition of compromised nodes knows about the secret matrix: each
/// compromised node contributes m linear equations over the free entries.
struct ConstraintSystem {
  std::uint32_t matrix_size = 0;  // m
  std::size_t unknown_count = 0;  // m(m+1)/2
  FieldMatrix rows;               // equations x unknown_count coefficients
  std::vector<FieldElement> rhs;
};

ConstraintSystem constraint_system(const FieldMatrix& public_matrix,
                                   const std::vector<NodeShare>& compromised, Prime q);

/// K_ij as a linear form in the free entries of S.
struct KeyFunctional {
  std::vector<FieldElement> coefficients;
};

KeyFunctional key_functional(const FieldMatrix& public_matrix, std::uint32_t i, std::uint32_t j,
                             Prime q);

struct Determination {
  bool determined = false;
  FieldElement value = 0;  // meaningful only when determined
};

/// Exact decision: the key is information-theoretically fixed iff the
/// functional lies in the row space of the constraint coefficients; the value
/// then falls out of the combination applied to the right-hand sides.
Determination is_key_determined(const ConstraintSystem& system, const KeyFunctional& functional,
                                Prime q);

/// Independent oracle: enumerates every symmetric S consistent with the
/// system and collects the key values it produces. Singleton iff determined.
/// Refuses instances with q^(m(m+1)/2) > 10^7.
std::set<FieldElement> brute_force_key_values(const ConstraintSystem& system,
                                              const KeyFunctional& functional, Prime q);

struct ThresholdSearchOptions {
  std::uint64_t sample_seed = 0;
  std::size_t samples_per_size = 200;  // randomized mode only
};

struct ThresholdReport {
  bool attack_found = false;
  std::uint32_t coalition_size = 0;
  std::vector<std::uint32_t> witness_subset;
  std::uint32_t witness_i = 0;
  std::uint32_t witness_j = 0;
  FieldElement determined_value = 0;
};

/// Minimum coalition size that determines some key between two uncompromised
/// nodes. Subset sizes ascend; subsets and pairs are scanned in lexicographic
/// order, so the witness is reproducible. Exhaustive search requires N <= 16;
/// otherwise a seeded sample of subsets per size is used.
ThresholdReport resilience_threshold(const Network& network, bool exhaustive,
                                     ThresholdSearchOptions options = {});

/// Attacker's view of every pairwise key under a fixed compromise set: keys
/// adjacent to a compromised node come straight from its share; keys between
/// uncompromised nodes go through the exact determination test. nullopt means
/// information-theoretically open.
std::vector<std::vector<std::optional<FieldElement>>> determination_matrix(
    const Network& network, const std::vector<std::uint32_t>& compromised);

}  // namespace blomkit
