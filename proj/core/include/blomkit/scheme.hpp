#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "blomkit/field.hpp"

namespace blomkit {

/// Raised when a derived quantity violates a structural guarantee of the
/// scheme (e.g. the two directions of a pairwise key disagree).
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Variant {
  classic_vandermonde,
  modified_hadamard,
};

std::string_view to_string(Variant v);
Variant variant_from_string(std::string_view s);

struct SchemeParams {
  Variant variant = Variant::modified_hadamard;
  std::uint32_t network_size = 0;  // N
  std::uint32_t row_count = 0;     // m, rows of the public matrix
  Prime modulus;                   // q, must exceed N
  std::uint64_t seed = 0;

  void validate() const;

  bool operator==(const SchemeParams&) const = default;
};

/// The authority's m x m symmetric matrix over GF(q).
class SecretMatrix {
 public:
  SecretMatrix(FieldMatrix entries, Prime q);

  const FieldMatrix& matrix() const { return entries_; }
  std::size_t size() const { return entries_.rows(); }

  bool operator==(const SecretMatrix&) const = default;

 private:
  FieldMatrix entries_;
};

struct NodeShare {
  std::uint32_t index = 0;                 // node id, 1-based
  std::vector<FieldElement> private_row;   // row `index` of A = (S*P)^T

  bool operator==(const NodeShare&) const = default;
};

struct PairwiseKey {
  FieldElement value = 0;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
};

/// A fully provisioned deployment. The secret matrix is retained so the
/// resilience analyzer and golden tests can reach it; redacted() models what
/// actually leaves the authority.
struct Network {
  SchemeParams params;
  FieldMatrix public_matrix;  // m x N
  std::vector<NodeShare> shares;
  std::optional<SecretMatrix> secret;

  Network redacted() const;

  bool operator==(const Network&) const = default;
};

/// Symmetric matrix with entries uniform over GF(q); the upper triangle is
/// drawn row-major from SeededRng(seed) and mirrored.
SecretMatrix generate_secret(std::uint32_t row_count, Prime q, std::uint64_t seed);
SecretMatrix generate_secret(const SchemeParams& params);

/// A = (S * P)^T, one private row per node.
FieldMatrix compute_private_rows(const SecretMatrix& secret, const FieldMatrix& public_matrix,
                                 Prime q);

/// The public matrix a provision run would build for these parameters:
/// Vandermonde on points 1..N, or the first m rows and N columns of the
/// Sylvester Hadamard matrix of order next_power_of_two(N).
FieldMatrix public_matrix_for(const SchemeParams& params);

Network provision(const SchemeParams& params);
Network provision_with_secret(const SchemeParams& params, SecretMatrix secret);

/// Dot product of a private row with a peer's public column.
FieldElement derive_key(const NodeShare& share, std::span<const FieldElement> peer_column, Prime q);

/// Runs key derivation in both directions and checks they agree. For the
/// modified variant the peer column is synthesized on the fly, never read
/// from network.public_matrix.
PairwiseKey establish(const Network& network, std::uint32_t i, std::uint32_t j);

/// K = A * P mod q (N x N, symmetric).
FieldMatrix full_key_matrix(const Network& network);

}  // namespace blomkit
