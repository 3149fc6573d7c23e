#include "blomkit/scheme.hpp"

#include <utility>

#include "blomkit/matrices.hpp"
#include "blomkit/rng.hpp"

namespace blomkit {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::classic_vandermonde:
      return "classic-vandermonde";
    case Variant::modified_hadamard:
      return "modified-hadamard";
  }
  throw std::logic_error("unknown variant");
}

Variant variant_from_string(std::string_view s) {
  if (s == "classic-vandermonde") return Variant::classic_vandermonde;
  if (s == "modified-hadamard") return Variant::modified_hadamard;
  throw std::invalid_argument("unknown variant '" + std::string(s) +
                              "' (expected classic-vandermonde or modified-hadamard)");
}

void SchemeParams::validate() const {
  if (network_size == 0) {
    throw std::invalid_argument("network size must be positive");
  }
  if (modulus.value() <= network_size) {
    throw std::invalid_argument("prime modulus q=" + std::to_string(modulus.value()) +
                                " is too small: it must exceed network size N=" +
                                std::to_string(network_size));
  }
  if (row_count == 0 || row_count > network_size) {
    throw std::invalid_argument("public-matrix row count m=" + std::to_string(row_count) +
                                " must be in [1, N=" + std::to_string(network_size) + "]");
  }
}

SecretMatrix::SecretMatrix(FieldMatrix entries, Prime q) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("secret matrix must be square");
  }
  for (std::size_t r = 0; r < entries_.rows(); ++r) {
    for (std::size_t c = 0; c < entries_.cols(); ++c) {
      if (entries_(r, c) >= q.value()) {
        throw std::invalid_argument("secret matrix entry not reduced mod q");
      }
      if (c > r && entries_(r, c) != entries_(c, r)) {
        throw std::invalid_argument("secret matrix is not symmetric");
      }
    }
  }
}

Network Network::redacted() const {
  Network out = *this;
  out.secret.reset();
  return out;
}

SecretMatrix generate_secret(std::uint32_t row_count, Prime q, std::uint64_t seed) {
  SeededRng rng(seed);
  FieldMatrix s(row_count, row_count);
  for (std::uint32_t a = 0; a < row_count; ++a) {
    for (std::uint32_t b = a; b < row_count; ++b) {
      FieldElement v = rng.next_below(q.value());
      s(a, b) = v;
      s(b, a) = v;
    }
  }
  return SecretMatrix(std::move(s), q);
}

SecretMatrix generate_secret(const SchemeParams& params) {
  return generate_secret(params.row_count, params.modulus, params.seed);
}

FieldMatrix compute_private_rows(const SecretMatrix& secret, const FieldMatrix& public_matrix,
                                 Prime q) {
  if (secret.size() != public_matrix.rows()) {
    throw std::invalid_argument("secret matrix size does not match public-matrix row count");
  }
  return mat_mul(secret.matrix(), public_matrix, q).transposed();
}

FieldMatrix public_matrix_for(const SchemeParams& params) {
  params.validate();
  switch (params.variant) {
    case Variant::classic_vandermonde:
      return vandermonde(VandermondeSpec::with_default_points(params.network_size,
                                                              params.row_count, params.modulus));
    case Variant::modified_hadamard: {
      const std::uint32_t order = next_power_of_two(params.network_size);
      HadamardSpec spec{order, params.row_count, params.modulus};
      return nonbinary_hadamard(spec).top_left(params.row_count, params.network_size);
    }
  }
  throw std::logic_error("unknown variant");
}

Network provision_with_secret(const SchemeParams& params, SecretMatrix secret) {
  params.validate();
  if (secret.size() != params.row_count) {
    throw std::invalid_argument("secret matrix size does not match row count m");
  }
  Network network;
  network.params = params;
  network.public_matrix = public_matrix_for(params);
  FieldMatrix private_rows = compute_private_rows(secret, network.public_matrix, params.modulus);
  network.shares.reserve(params.network_size);
  for (std::uint32_t node = 1; node <= params.network_size; ++node) {
    std::span<const FieldElement> row = private_rows.row(node - 1);
    network.shares.push_back(NodeShare{node, {row.begin(), row.end()}});
  }
  network.secret = std::move(secret);
  return network;
}

Network provision(const SchemeParams& params) {
  params.validate();
  return provision_with_secret(params, generate_secret(params));
}

FieldElement derive_key(const NodeShare& share, std::span<const FieldElement> peer_column,
                        Prime q) {
  if (share.private_row.size() != peer_column.size()) {
    throw std::invalid_argument("private row and peer column lengths differ");
  }
  FieldElement acc = 0;
  for (std::size_t k = 0; k < peer_column.size(); ++k) {
    acc = add_mod(acc, mul_mod(share.private_row[k], peer_column[k], q), q);
  }
  return acc;
}

namespace {

std::vector<FieldElement> peer_column_for(const Network& network, std::uint32_t node) {
  const SchemeParams& p = network.params;
  if (p.variant == Variant::modified_hadamard) {
    return hadamard_column(next_power_of_two(p.network_size), node, p.row_count, p.modulus);
  }
  return network.public_matrix.column(node - 1);
}

}  // namespace

PairwiseKey establish(const Network& network, std::uint32_t i, std::uint32_t j) {
  const std::uint32_t n = network.params.network_size;
  if (network.shares.size() != n) {
    throw std::invalid_argument("network share count does not match N");
  }
  if (i < 1 || i > n || j < 1 || j > n) {
    throw std::invalid_argument("node id out of range [1, " + std::to_string(n) + "]");
  }
  const Prime q = network.params.modulus;
  FieldElement k_ij = derive_key(network.shares[i - 1], peer_column_for(network, j), q);
  FieldElement k_ji = derive_key(network.shares[j - 1], peer_column_for(network, i), q);
  if (k_ij != k_ji) {
    throw consistency_error("pairwise key mismatch for nodes " + std::to_string(i) + " and " +
                            std::to_string(j) + ": " + std::to_string(k_ij) +
                            " != " + std::to_string(k_ji));
  }
  return PairwiseKey{k_ij, i, j};
}

FieldMatrix full_key_matrix(const Network& network) {
  const SchemeParams& p = network.params;
  FieldMatrix private_rows(p.network_size, p.row_count);
  for (std::uint32_t node = 0; node < p.network_size; ++node) {
    const NodeShare& share = network.shares[node];
    for (std::uint32_t k = 0; k < p.row_count; ++k) private_rows(node, k) = share.private_row[k];
  }
  return mat_mul(private_rows, network.public_matrix, p.modulus);
}

}  // namespace blomkit
