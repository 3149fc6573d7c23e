// Acceptance suite: one test per release criterion, each printing a PASS/FAIL
// line with its elapsed time. Run via ctest or directly for the full report.
#include <gtest/gtest.h>

#include <chrono>
#include <cstdio>
#include <set>
#include <vector>

#include "blomkit/matrices.hpp"
#include "blomkit/metrics.hpp"
#include "blomkit/resilience.hpp"
#include "blomkit/scheme.hpp"
#include "golden_example.hpp"

using namespace blomkit;

namespace {

class Criterion {
 public:
  Criterion(int id, const char* name, double limit_seconds)
      : id_(id), name_(name), limit_seconds_(limit_seconds), start_(std::chrono::steady_clock::now()) {}

  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void check_runtime() const { EXPECT_LT(elapsed_seconds(), limit_seconds_) << name_; }

  ~Criterion() {
    std::printf("[acceptance] criterion %d (%s): %s (%.3f s, limit %.0f s)\n", id_, name_,
                ::testing::Test::HasFailure() ? "FAIL" : "PASS", elapsed_seconds(), limit_seconds_);
    std::fflush(stdout);
  }

 private:
  int id_;
  const char* name_;
  double limit_seconds_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<NodeShare> shares_for(const Network& network, const std::vector<std::uint32_t>& ids) {
  std::vector<NodeShare> out;
  for (std::uint32_t id : ids) out.push_back(network.shares[id - 1]);
  return out;
}

}  // namespace

TEST(Acceptance, C1GoldenExampleExact) {
  Criterion criterion(1, "golden example exact", 1.0);

  Network network = golden::network();
  // Private rows, entry for entry.
  FieldMatrix expected_rows = golden::private_rows();
  ASSERT_EQ(network.shares.size(), 8u);
  for (std::uint32_t node = 1; node <= 8; ++node) {
    for (std::uint32_t k = 0; k < 6; ++k) {
      EXPECT_EQ(network.shares[node - 1].private_row[k], expected_rows(node - 1, k))
          << "A[" << node << "][" << k + 1 << "]";
    }
  }
  // Full key matrix, entry for entry.
  EXPECT_EQ(full_key_matrix(network), golden::key_matrix());

  // K_2,8 via the plain integer sum 787 and K_8,2 via 1190.
  std::uint64_t plain_28 = 0, plain_82 = 0;
  std::vector<FieldElement> col8 = hadamard_column(8, 8, 6, golden::modulus());
  std::vector<FieldElement> col2 = hadamard_column(8, 2, 6, golden::modulus());
  for (std::size_t k = 0; k < 6; ++k) {
    plain_28 += network.shares[1].private_row[k] * col8[k];
    plain_82 += network.shares[7].private_row[k] * col2[k];
  }
  EXPECT_EQ(plain_28, 787u);
  EXPECT_EQ(plain_82, 1190u);
  EXPECT_EQ(establish(network, 2, 8).value, 787u % 31u);
  EXPECT_EQ(establish(network, 8, 2).value, 1190u % 31u);
  EXPECT_EQ(establish(network, 2, 8).value, 12u);

  criterion.check_runtime();
}

TEST(Acceptance, C2NonbinaryHadamardGeneratorAndSynthesis) {
  Criterion criterion(2, "non-binary Hadamard generator and column synthesis", 1.0);

  Prime q(31);
  EXPECT_EQ(nonbinary_hadamard({4, 4, q}), FieldMatrix::from_rows({
                                               {1, 1, 1, 1},
                                               {1, 30, 1, 30},
                                               {1, 1, 30, 30},
                                               {1, 30, 30, 1},
                                           }));

  for (std::uint32_t order : {1u, 2u, 4u, 8u, 16u}) {
    FieldMatrix h = nonbinary_hadamard({order, order, q});
    for (std::uint32_t m : {order, (order + 1) / 2}) {
      if (m == 0) continue;
      for (std::uint32_t col = 1; col <= order; ++col) {
        std::vector<FieldElement> synthesized = hadamard_column(order, col, m, q);
        ASSERT_EQ(synthesized.size(), m);
        for (std::uint32_t r = 0; r < m; ++r) {
          EXPECT_EQ(synthesized[r], h(r, col - 1)) << "order=" << order << " col=" << col;
        }
      }
    }
  }

  criterion.check_runtime();
}

TEST(Acceptance, C3SymmetrySuite) {
  Criterion criterion(3, "symmetry across seeded networks", 30.0);

  struct Config {
    std::uint32_t n;
    std::uint64_t q;
  };
  const std::vector<Config> configs = {{4, 5},   {6, 7},   {8, 31},  {12, 13},  {16, 17},
                                       {16, 101}, {20, 23}, {24, 29}, {32, 37},  {32, 1009},
                                       {31, 751}, {10, 11}};
  std::size_t networks_checked = 0;
  for (std::uint64_t seed = 0; seed < 104; ++seed) {
    const Config& config = configs[seed % configs.size()];
    Variant variant = (seed % 2 == 0) ? Variant::classic_vandermonde : Variant::modified_hadamard;
    std::uint32_t m = 1 + static_cast<std::uint32_t>(seed * 7 % config.n);
    SchemeParams params{variant, config.n, m, Prime(config.q), seed};
    Network network = provision(params);
    FieldMatrix k = full_key_matrix(network);
    ASSERT_EQ(k, k.transposed()) << "seed " << seed;
    for (std::uint32_t i = 1; i <= config.n; ++i) {
      for (std::uint32_t j = i; j <= config.n; ++j) {
        FieldElement forward = establish(network, i, j).value;
        FieldElement backward = establish(network, j, i).value;
        ASSERT_EQ(forward, backward) << "seed " << seed << " pair " << i << "," << j;
        ASSERT_EQ(forward, k(i - 1, j - 1)) << "seed " << seed << " pair " << i << "," << j;
      }
    }
    ++networks_checked;
  }
  EXPECT_GE(networks_checked, 100u);

  criterion.check_runtime();
}

TEST(Acceptance, C4OracleEquivalence) {
  Criterion criterion(4, "rank analyzer vs brute-force oracle", 60.0);

  struct Instance {
    std::uint64_t q;
    std::uint32_t n;
    std::uint32_t m;
  };
  const std::vector<Instance> instances = {
      {5, 4, 2}, {5, 4, 3}, {5, 3, 2}, {5, 3, 3}, {3, 2, 2}};
  std::size_t cases = 0;
  for (const Instance& instance : instances) {
    for (std::uint64_t seed = 0; seed < 9; ++seed) {
      Prime q(instance.q);
      Network network =
          provision({Variant::classic_vandermonde, instance.n, instance.m, q, seed});
      const std::uint32_t n = instance.n;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::uint32_t> coalition;
        std::vector<bool> compromised(n + 1, false);
        for (std::uint32_t node = 1; node <= n; ++node) {
          if (mask & (1u << (node - 1))) {
            coalition.push_back(node);
            compromised[node] = true;
          }
        }
        if (coalition.size() > n - 2) continue;
        ConstraintSystem system =
            constraint_system(network.public_matrix, shares_for(network, coalition), q);
        for (std::uint32_t i = 1; i <= n; ++i) {
          if (compromised[i]) continue;
          for (std::uint32_t j = i + 1; j <= n; ++j) {
            if (compromised[j]) continue;
            KeyFunctional functional = key_functional(network.public_matrix, i, j, q);
            Determination fast = is_key_determined(system, functional, q);
            std::set<FieldElement> slow = brute_force_key_values(system, functional, q);
            ASSERT_EQ(fast.determined, slow.size() == 1)
                << "q=" << instance.q << " N=" << n << " m=" << instance.m << " mask=" << mask
                << " pair " << i << "," << j;
            if (fast.determined) {
              ASSERT_EQ(slow, std::set<FieldElement>{fast.value});
              ASSERT_EQ(fast.value, full_key_matrix(network)(i - 1, j - 1));
            } else {
              ASSERT_TRUE(slow.count(full_key_matrix(network)(i - 1, j - 1)));
            }
            ++cases;
          }
        }
      }
    }
  }
  EXPECT_GE(cases, 500u);

  criterion.check_runtime();
}

TEST(Acceptance, C5ClassicBlomThreshold) {
  Criterion criterion(5, "classic collusion threshold equals row count", 120.0);

  for (std::uint64_t qv : {11ull, 13ull}) {
    for (auto [n, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {4, 2}, {6, 2}, {6, 3}, {6, 4}, {8, 2}, {8, 3}, {8, 4}}) {
      SchemeParams params{Variant::classic_vandermonde, n, m, Prime(qv), 17 + n + m};
      ThresholdReport report = resilience_threshold(provision(params), true);
      ASSERT_TRUE(report.attack_found) << "N=" << n << " m=" << m << " q=" << qv;
      EXPECT_EQ(report.coalition_size, m) << "N=" << n << " m=" << m << " q=" << qv;
    }
  }

  criterion.check_runtime();
}

TEST(Acceptance, C6SweepJumpLocations) {
  Criterion criterion(6, "sweep jump at half the network size", 60.0);

  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 10; ++s) seeds.push_back(s);

  std::vector<std::uint32_t> t32;
  for (std::uint32_t t = 1; t <= 32; ++t) t32.push_back(t);
  SweepResult sweep32 = sweep_t(32, Prime(751), t32, seeds);
  std::uint32_t jump32 = largest_jump_t(sweep32);
  EXPECT_TRUE(jump32 == 16 || jump32 == 17 || jump32 == 18) << "jump at t=" << jump32;

  std::vector<std::uint32_t> t64;
  for (std::uint32_t t = 1; t <= 64; ++t) t64.push_back(t);
  SweepResult sweep64 = sweep_t(64, Prime(1181), t64, seeds);
  std::uint32_t jump64 = largest_jump_t(sweep64);
  EXPECT_TRUE(jump64 == 32 || jump64 == 33 || jump64 == 34) << "jump at t=" << jump64;

  std::printf("[acceptance] sweep jumps: N=32 at t=%u, N=64 at t=%u\n", jump32, jump64);

  criterion.check_runtime();
}

TEST(Acceptance, C7CostClaims) {
  Criterion criterion(7, "storage halving and multiplication-free derivation", 1.0);

  for (std::uint64_t qv : {31ull, 751ull, 1181ull}) {
    for (std::uint32_t m : {2u, 6u, 17u, 33u}) {
      Prime q(qv);
      VariantCost classic = cost_model({Variant::classic_vandermonde, m, m, q, 0});
      VariantCost modified = cost_model({Variant::modified_hadamard, m, m, q, 0});
      EXPECT_EQ(modified.stored_field_elements_per_node * 2, classic.stored_field_elements_per_node);
      EXPECT_EQ(modified.stored_bits_per_node * 2, classic.stored_bits_per_node);
      EXPECT_EQ(modified.mults_per_key, 0u);
      EXPECT_EQ(classic.mults_per_key, m);
    }
  }

  criterion.check_runtime();
}

TEST(Acceptance, C8GoldenNetworkResilienceMeasurement) {
  Criterion criterion(8, "measured resilience of the reference network", 300.0);

  // Exhaustive measurement on the full N=8, m=6, q=31 network.
  Network network = golden::network();
  ThresholdReport measured = resilience_threshold(network, true);
  ASSERT_TRUE(measured.attack_found);
  // Regression pin from the first exhaustive run: three colluders suffice.
  // The 6-row truncation of the order-8 Hadamard matrix has the column
  // dependency P7 = P1 + P3 - P5, so coalition {1,3,5} spans node 7's column
  // and fixes every key node 7 holds with the remaining nodes.
  EXPECT_EQ(measured.coalition_size, 3u);
  EXPECT_EQ(measured.witness_subset, (std::vector<std::uint32_t>{1, 3, 5}));
  EXPECT_EQ(measured.witness_i, 2u);
  EXPECT_EQ(measured.witness_j, 7u);
  std::printf(
      "[acceptance] measured resilience threshold of the N=8/m=6/q=31 network: %u "
      "(nominal level m-1=5 would require 6; half-size rule suggests %u)\n",
      measured.coalition_size, recommended_t(8));
  std::printf("[acceptance] witness coalition {");
  for (std::size_t k = 0; k < measured.witness_subset.size(); ++k) {
    std::printf("%s%u", k ? "," : "", measured.witness_subset[k]);
  }
  std::printf("} determines key of pair (%u,%u)\n", measured.witness_i, measured.witness_j);

  // Cross-check the analyzer against the brute-force oracle on the m=2
  // truncation of the same network (m=3 would need 31^6 candidate matrices,
  // beyond the oracle's feasibility bound).
  Prime q = golden::modulus();
  SchemeParams truncated_params{Variant::modified_hadamard, 8, 2, q, 0};
  Network truncated =
      provision_with_secret(truncated_params, SecretMatrix(golden::secret_entries().top_left(2, 2), q));

  std::uint32_t oracle_threshold = 0;
  bool done = false;
  for (std::uint32_t size = 1; size <= 3 && !done; ++size) {
    std::vector<std::uint32_t> subset(size);
    for (std::uint32_t k = 0; k < size; ++k) subset[k] = k + 1;
    auto advance = [&]() {
      std::uint32_t k = size;
      while (k-- > 0) {
        if (subset[k] < 8 - (size - 1 - k)) {
          ++subset[k];
          for (std::uint32_t j = k + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
          return true;
        }
      }
      return false;
    };
    do {
      std::vector<bool> compromised(9, false);
      for (std::uint32_t node : subset) compromised[node] = true;
      ConstraintSystem system =
          constraint_system(truncated.public_matrix, shares_for(truncated, subset), q);
      for (std::uint32_t i = 1; i <= 8; ++i) {
        if (compromised[i]) continue;
        for (std::uint32_t j = i + 1; j <= 8; ++j) {
          if (compromised[j]) continue;
          KeyFunctional functional = key_functional(truncated.public_matrix, i, j, q);
          Determination fast = is_key_determined(system, functional, q);
          std::set<FieldElement> slow = brute_force_key_values(system, functional, q);
          ASSERT_EQ(fast.determined, slow.size() == 1)
              << "truncated instance, coalition size " << size;
          if (fast.determined) {
            ASSERT_EQ(slow, std::set<FieldElement>{fast.value});
          }
          if (slow.size() == 1 && oracle_threshold == 0) oracle_threshold = size;
        }
      }
    } while (advance());
    if (oracle_threshold != 0) done = true;
  }
  ThresholdReport truncated_report = resilience_threshold(truncated, true);
  ASSERT_TRUE(truncated_report.attack_found);
  EXPECT_EQ(truncated_report.coalition_size, oracle_threshold)
      << "analyzer and brute-force oracle disagree on the truncated instance";
  // With two rows only the column parity survives, so one colluder already
  // owns a duplicate of some uncompromised column.
  EXPECT_EQ(oracle_threshold, 1u);

  std::printf("[acceptance] truncated (m=2) instance: analyzer threshold %u, oracle threshold %u\n",
              truncated_report.coalition_size, oracle_threshold);

  criterion.check_runtime();
}
