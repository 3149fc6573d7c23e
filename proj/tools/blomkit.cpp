// blomkit: key predistribution toolkit CLI.
//
// Subcommands: provision, establish, keymatrix, attack, sweep, cost.
// Exit codes: 0 success, 2 validation error, 3 internal-consistency failure.
// All output is deterministic: identical invocations produce identical bytes.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "blomkit/field.hpp"
#include "blomkit/matrices.hpp"
#include "blomkit/metrics.hpp"
#include "blomkit/resilience.hpp"
#include "blomkit/scheme.hpp"
#include "blomkit/serialization.hpp"

namespace {

using namespace blomkit;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file '" + output_path + "'");
  out << text;
}

struct RowCountOption {
  std::optional<std::uint32_t> m;
  std::optional<std::uint32_t> t;
  bool blom_strict = false;

  void attach(CLI::App* cmd) {
    auto* m_opt = cmd->add_option("--m", m, "Public-matrix row count");
    auto* t_opt =
        cmd->add_option("--t", t, "Secure parameter; maps to m = t (or m = t+1 with --blom-strict)");
    cmd->add_flag("--blom-strict", blom_strict, "Interpret --t as m = t+1");
    m_opt->excludes(t_opt);
    t_opt->excludes(m_opt);
  }

  std::uint32_t resolve() const {
    if (m && t) throw std::invalid_argument("supply exactly one of --m and --t");
    if (m) {
      if (blom_strict) throw std::invalid_argument("--blom-strict applies only with --t");
      return *m;
    }
    if (t) return blom_strict ? *t + 1 : *t;
    throw std::invalid_argument("supply exactly one of --m and --t");
  }
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string matrix_table(const FieldMatrix& m, Prime q) {
  int width = static_cast<int>(std::to_string(q.value() - 1).size());
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      out << std::string(width - std::to_string(m(r, c)).size(), ' ') << m(r, c);
    }
    out << '\n';
  }
  return out.str();
}

std::string matrix_csv(const FieldMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ',';
      out << m(r, c);
    }
    out << '\n';
  }
  return out.str();
}

std::string sweep_csv(const SweepResult& sweep) {
  std::ostringstream out;
  out << "t,m,q,N,seed,unique_keys\n";
  for (const SweepRecord& rec : sweep.records) {
    out << rec.t << ',' << rec.m << ',' << sweep.modulus << ',' << sweep.network_size << ','
        << rec.seed << ',' << rec.unique_keys << '\n';
  }
  out << "\nt,mean_unique_keys\n";
  for (const SweepPoint& point : sweep.aggregates) {
    out << point.t << ',' << format_double(point.mean_unique_keys) << '\n';
  }
  return out.str();
}

std::string sweep_table(const SweepResult& sweep) {
  std::ostringstream out;
  out << "sweep: N=" << sweep.network_size << " q=" << sweep.modulus << "\n";
  out << "  t    m        seed  unique_keys\n";
  for (const SweepRecord& rec : sweep.records) {
    char line[128];
    std::snprintf(line, sizeof(line), "%3u  %3u  %10llu  %11zu\n", rec.t, rec.m,
                  static_cast<unsigned long long>(rec.seed), rec.unique_keys);
    out << line;
  }
  out << "\n  t    m  mean_unique_keys\n";
  for (const SweepPoint& point : sweep.aggregates) {
    char line[128];
    std::snprintf(line, sizeof(line), "%3u  %3u  %s\n", point.t, point.m,
                  format_double(point.mean_unique_keys).c_str());
    out << line;
  }
  return out.str();
}

std::string sweep_json(const SweepResult& sweep) {
  std::ostringstream out;
  out << "{\n  \"N\": " << sweep.network_size << ",\n  \"q\": " << sweep.modulus
      << ",\n  \"records\": [\n";
  for (std::size_t k = 0; k < sweep.records.size(); ++k) {
    const SweepRecord& rec = sweep.records[k];
    out << "    {\"t\": " << rec.t << ", \"m\": " << rec.m << ", \"seed\": " << rec.seed
        << ", \"unique_keys\": " << rec.unique_keys << '}' << (k + 1 < sweep.records.size() ? "," : "")
        << '\n';
  }
  out << "  ],\n  \"aggregates\": [\n";
  for (std::size_t k = 0; k < sweep.aggregates.size(); ++k) {
    const SweepPoint& point = sweep.aggregates[k];
    out << "    {\"t\": " << point.t << ", \"mean_unique_keys\": "
        << format_double(point.mean_unique_keys) << '}'
        << (k + 1 < sweep.aggregates.size() ? "," : "") << '\n';
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string cost_table(const std::vector<VariantCost>& costs, Prime q) {
  std::ostringstream out;
  out << "cost model at q=" << q.value() << " (" << bits_per_element(q) << " bits/element)\n";
  for (const VariantCost& c : costs) {
    out << to_string(c.variant) << ":\n"
        << "  stored elements/node: " << c.stored_field_elements_per_node << '\n'
        << "  stored bits/node:     " << c.stored_bits_per_node << '\n'
        << "  mults/key:            " << c.mults_per_key << '\n'
        << "  sign ops/key:         " << c.sign_ops_per_key << '\n'
        << "  adds/key:             " << c.adds_per_key << '\n'
        << "  column synthesis ops: " << c.column_synthesis_ops << '\n';
  }
  return out.str();
}

std::vector<std::uint32_t> parse_t_range(const std::string& text, std::uint32_t network_size) {
  std::uint32_t lo = 0, hi = 0;
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      lo = hi = static_cast<std::uint32_t>(std::stoul(text));
    } else {
      lo = static_cast<std::uint32_t>(std::stoul(text.substr(0, colon)));
      hi = static_cast<std::uint32_t>(std::stoul(text.substr(colon + 1)));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse t-range '" + text + "' (expected LO:HI)");
  }
  if (lo < 1 || hi < lo || hi > network_size) {
    throw std::invalid_argument("t-range " + std::to_string(lo) + ":" + std::to_string(hi) +
                                " out of bounds [1, " + std::to_string(network_size) + "]");
  }
  std::vector<std::uint32_t> values;
  for (std::uint32_t t = lo; t <= hi; ++t) values.push_back(t);
  return values;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Key predistribution toolkit: Blom and Hadamard-modified Blom schemes over GF(q)"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "default";
  std::string output_path;
  app.add_option("--format", format, "Output format: table, csv, or json")
      ->check(CLI::IsMember({"default", "table", "csv", "json"}));
  app.add_option("--output", output_path, "Write output to a file instead of stdout");

  // provision
  auto* provision_cmd = app.add_subcommand("provision", "Build a network and write its document");
  std::string variant_name = "modified-hadamard";
  std::uint32_t network_size = 0;
  std::uint64_t modulus_value = 0;
  std::uint64_t seed = 0;
  RowCountOption provision_rows;
  std::string secret_file;
  bool redact = false;
  provision_cmd->add_option("--variant", variant_name, "classic-vandermonde or modified-hadamard");
  provision_cmd->add_option("--N", network_size, "Network size")->required();
  provision_rows.attach(provision_cmd);
  provision_cmd->add_option("--q", modulus_value, "Prime modulus, must exceed N")->required();
  provision_cmd->add_option("--seed", seed, "RNG seed for the secret matrix");
  provision_cmd->add_option("--secret-file", secret_file,
                            "JSON matrix file to use as the secret instead of generating one");
  provision_cmd->add_flag("--redact", redact, "Drop the secret matrix from the document");
  provision_cmd->callback([&] {
    SchemeParams params{variant_from_string(variant_name), network_size,
                        provision_rows.resolve(), Prime(modulus_value), seed};
    Network network;
    if (!secret_file.empty()) {
      network = provision_with_secret(
          params, SecretMatrix(matrix_from_json(read_file(secret_file)), params.modulus));
    } else {
      network = provision(params);
    }
    if (redact) network = network.redacted();
    emit(network_to_json(network), output_path);
  });

  // establish
  auto* establish_cmd = app.add_subcommand("establish", "Derive the pairwise key for two nodes");
  std::string network_file;
  std::uint32_t node_i = 0, node_j = 0;
  establish_cmd->add_option("--network", network_file, "Network document")->required();
  establish_cmd->add_option("-i", node_i, "First node id")->required();
  establish_cmd->add_option("-j", node_j, "Second node id")->required();
  establish_cmd->callback([&] {
    Network network = network_from_json(read_file(network_file));
    PairwiseKey key = establish(network, node_i, node_j);
    if (format == "json") {
      std::ostringstream out;
      out << "{\"i\": " << key.i << ", \"j\": " << key.j << ", \"key\": " << key.value << "}\n";
      emit(out.str(), output_path);
    } else {
      emit(std::to_string(key.value) + "\n", output_path);
    }
  });

  // keymatrix
  auto* keymatrix_cmd = app.add_subcommand("keymatrix", "Emit the full pairwise key matrix K");
  std::string keymatrix_network_file;
  keymatrix_cmd->add_option("--network", keymatrix_network_file, "Network document")->required();
  keymatrix_cmd->callback([&] {
    Network network = network_from_json(read_file(keymatrix_network_file));
    FieldMatrix keys = full_key_matrix(network);
    if (format == "json") {
      emit(matrix_to_json(keys), output_path);
    } else if (format == "csv") {
      emit(matrix_csv(keys), output_path);
    } else {
      emit(matrix_table(keys, network.params.modulus), output_path);
    }
  });

  // attack
  auto* attack_cmd = app.add_subcommand("attack", "Collusion analysis for a network document");
  std::string attack_network_file;
  std::vector<std::uint32_t> compromised;
  std::vector<std::uint32_t> pair_ids;
  bool threshold_mode = false;
  std::uint64_t search_seed = 0;
  std::size_t samples_per_size = 200;
  attack_cmd->add_option("--network", attack_network_file, "Network document")->required();
  attack_cmd->add_option("--compromise", compromised, "Comma-separated compromised node ids")
      ->delimiter(',');
  attack_cmd->add_option("--pair", pair_ids, "Target pair i,j to test for determination")
      ->delimiter(',')
      ->expected(2);
  attack_cmd->add_flag("--threshold", threshold_mode,
                       "Search for the minimum coalition that determines some key");
  attack_cmd->add_option("--search-seed", search_seed, "Seed for sampled threshold search (N > 16)");
  attack_cmd->add_option("--samples", samples_per_size,
                         "Subsets sampled per coalition size when N > 16");
  attack_cmd->callback([&] {
    Network network = network_from_json(read_file(attack_network_file));
    AttackReport report;
    report.params = network.params;
    report.compromised = compromised;
    if (threshold_mode) {
      if (!compromised.empty() || !pair_ids.empty()) {
        throw std::invalid_argument("--threshold searches all coalitions; drop --compromise/--pair");
      }
      bool exhaustive = network.params.network_size <= 16;
      report.threshold = resilience_threshold(network, exhaustive,
                                              ThresholdSearchOptions{search_seed, samples_per_size});
    } else {
      if (compromised.empty()) {
        throw std::invalid_argument("supply --compromise ids or --threshold");
      }
      if (!pair_ids.empty()) {
        std::vector<NodeShare> shares;
        for (std::uint32_t node : compromised) {
          if (node < 1 || node > network.params.network_size) {
            throw std::invalid_argument("compromised node id out of range");
          }
          shares.push_back(network.shares[node - 1]);
        }
        ConstraintSystem system =
            constraint_system(network.public_matrix, shares, network.params.modulus);
        KeyFunctional functional = key_functional(network.public_matrix, pair_ids[0], pair_ids[1],
                                                  network.params.modulus);
        Determination d = is_key_determined(system, functional, network.params.modulus);
        PairAttackOutcome outcome;
        outcome.i = pair_ids[0];
        outcome.j = pair_ids[1];
        outcome.determined = d.determined;
        if (d.determined) outcome.value = d.value;
        report.pair = outcome;
      } else {
        report.determination = determination_matrix(network, compromised);
      }
    }
    if (format == "table") {
      std::ostringstream out;
      if (report.threshold) {
        if (report.threshold->attack_found) {
          out << "threshold: " << report.threshold->coalition_size << " (pair "
              << report.threshold->witness_i << ',' << report.threshold->witness_j << " key "
              << report.threshold->determined_value << ")\n";
        } else {
          out << "threshold: no attack possible\n";
        }
      } else if (report.pair) {
        if (report.pair->determined) {
          out << "pair " << report.pair->i << ',' << report.pair->j << ": determined, key "
              << *report.pair->value << "\n";
        } else {
          out << "pair " << report.pair->i << ',' << report.pair->j << ": undetermined\n";
        }
      } else {
        const auto& matrix = *report.determination;
        std::size_t open = 0, fixed = 0;
        for (std::size_t i = 0; i < matrix.size(); ++i) {
          for (std::size_t j = i + 1; j < matrix.size(); ++j) {
            if (matrix[i][j]) {
              ++fixed;
            } else {
              ++open;
            }
          }
        }
        out << "determined pairs: " << fixed << ", open pairs: " << open << "\n";
      }
      emit(out.str(), output_path);
    } else {
      emit(attack_report_to_json(report), output_path);
    }
  });

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Unique-key counts across a range of t");
  std::uint32_t sweep_network_size = 0;
  std::uint64_t sweep_modulus = 0;
  std::string t_range = "";
  std::uint32_t seed_count = 10;
  std::uint64_t seed_base = 0;
  sweep_cmd->add_option("--N", sweep_network_size, "Network size")->required();
  sweep_cmd->add_option("--q", sweep_modulus, "Prime modulus, must exceed N")->required();
  sweep_cmd->add_option("--t-range", t_range, "Inclusive range LO:HI (or a single t)")->required();
  sweep_cmd->add_option("--seeds", seed_count, "Number of seeds per t (seed_base..seed_base+n-1)");
  sweep_cmd->add_option("--seed-base", seed_base, "First seed value");
  sweep_cmd->callback([&] {
    if (seed_count == 0) throw std::invalid_argument("need at least one seed");
    Prime q(sweep_modulus);
    std::vector<std::uint32_t> t_values = parse_t_range(t_range, sweep_network_size);
    std::vector<std::uint64_t> seeds;
    for (std::uint32_t k = 0; k < seed_count; ++k) seeds.push_back(seed_base + k);
    SweepResult sweep = sweep_t(sweep_network_size, q, t_values, seeds);
    if (format == "json") {
      emit(sweep_json(sweep), output_path);
    } else if (format == "table") {
      emit(sweep_table(sweep), output_path);
    } else {
      emit(sweep_csv(sweep), output_path);
    }
  });

  // cost
  auto* cost_cmd = app.add_subcommand("cost", "Storage and per-key work for the scheme variants");
  std::string cost_variant = "both";
  std::uint64_t cost_modulus = 0;
  RowCountOption cost_rows;
  cost_cmd->add_option("--variant", cost_variant,
                       "classic-vandermonde, modified-hadamard, or both");
  cost_rows.attach(cost_cmd);
  cost_cmd->add_option("--q", cost_modulus, "Prime modulus")->required();
  cost_cmd->callback([&] {
    Prime q(cost_modulus);
    std::uint32_t m = cost_rows.resolve();
    std::vector<VariantCost> costs;
    auto add_cost = [&](Variant variant) {
      // N is irrelevant to the cost model; use the smallest valid size.
      SchemeParams params{variant, m, m, q, 0};
      costs.push_back(cost_model(params));
    };
    if (cost_variant == "both") {
      add_cost(Variant::classic_vandermonde);
      add_cost(Variant::modified_hadamard);
    } else {
      add_cost(variant_from_string(cost_variant));
    }
    if (format == "table") {
      emit(cost_table(costs, q), output_path);
    } else {
      emit(cost_report_to_json(costs, q), output_path);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::string message = e.what();
    std::replace(message.begin(), message.end(), '\n', ';');
    std::cerr << "error: " << message << std::endl;
    return 2;
  } catch (const consistency_error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run_cli(argc, argv); }
