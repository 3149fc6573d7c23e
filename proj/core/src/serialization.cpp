#include "blomkit/serialization.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace blomkit {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json matrix_to_value(const FieldMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

FieldMatrix matrix_from_value(const ordered_json& value, Prime q) {
  if (!value.is_array()) throw std::invalid_argument("matrix must be an array of arrays");
  std::vector<std::vector<FieldElement>> rows;
  rows.reserve(value.size());
  for (const ordered_json& row : value) {
    if (!row.is_array()) throw std::invalid_argument("matrix must be an array of arrays");
    std::vector<FieldElement> entries;
    entries.reserve(row.size());
    for (const ordered_json& entry : row) {
      if (!entry.is_number_unsigned()) {
        throw std::invalid_argument("matrix entries must be nonnegative integers");
      }
      FieldElement v = entry.get<FieldElement>();
      if (v >= q.value()) throw std::invalid_argument("matrix entry not reduced mod q");
      entries.push_back(v);
    }
    rows.push_back(std::move(entries));
  }
  return FieldMatrix::from_rows(rows);
}

}  // namespace

std::string network_to_json(const Network& network) {
  const SchemeParams& p = network.params;
  ordered_json doc;
  doc["variant"] = std::string(to_string(p.variant));
  doc["N"] = p.network_size;
  doc["m"] = p.row_count;
  doc["q"] = p.modulus.value();
  doc["seed"] = p.seed;
  if (p.variant == Variant::classic_vandermonde) {
    doc["public_matrix"] = matrix_to_value(network.public_matrix);
  }
  ordered_json shares = ordered_json::array();
  for (const NodeShare& share : network.shares) {
    ordered_json entry;
    entry["index"] = share.index;
    entry["row"] = share.private_row;
    shares.push_back(std::move(entry));
  }
  doc["shares"] = std::move(shares);
  if (network.secret) {
    doc["secret"] = matrix_to_value(network.secret->matrix());
  }
  return doc.dump(2) + "\n";
}

Network network_from_json(const std::string& text) {
  ordered_json doc = ordered_json::parse(text);

  SchemeParams params{variant_from_string(doc.at("variant").get<std::string>()),
                      doc.at("N").get<std::uint32_t>(), doc.at("m").get<std::uint32_t>(),
                      Prime(doc.at("q").get<std::uint64_t>()),
                      doc.at("seed").get<std::uint64_t>()};
  params.validate();

  Network network;
  network.params = params;
  if (params.variant == Variant::classic_vandermonde) {
    network.public_matrix = matrix_from_value(doc.at("public_matrix"), params.modulus);
    if (network.public_matrix.rows() != params.row_count ||
        network.public_matrix.cols() != params.network_size) {
      throw std::invalid_argument("public matrix dimensions do not match m x N");
    }
  } else {
    if (doc.contains("public_matrix")) {
      throw std::invalid_argument("public_matrix must be omitted for modified-hadamard documents");
    }
    network.public_matrix = public_matrix_for(params);
  }

  const ordered_json& shares = doc.at("shares");
  if (!shares.is_array() || shares.size() != params.network_size) {
    throw std::invalid_argument("expected exactly N share entries");
  }
  network.shares.resize(params.network_size);
  std::vector<bool> seen(params.network_size + 1, false);
  for (const ordered_json& entry : shares) {
    std::uint32_t index = entry.at("index").get<std::uint32_t>();
    if (index < 1 || index > params.network_size) {
      throw std::invalid_argument("share index out of range [1, N]");
    }
    if (seen[index]) throw std::invalid_argument("duplicate share index " + std::to_string(index));
    seen[index] = true;
    const ordered_json& row = entry.at("row");
    if (!row.is_array() || row.size() != params.row_count) {
      throw std::invalid_argument("share row length must equal m");
    }
    NodeShare share;
    share.index = index;
    for (const ordered_json& v : row) {
      if (!v.is_number_unsigned() || v.get<FieldElement>() >= params.modulus.value()) {
        throw std::invalid_argument("share entries must be residues in [0, q)");
      }
      share.private_row.push_back(v.get<FieldElement>());
    }
    network.shares[index - 1] = std::move(share);
  }

  if (doc.contains("secret")) {
    FieldMatrix s = matrix_from_value(doc.at("secret"), params.modulus);
    if (s.rows() != params.row_count) {
      throw std::invalid_argument("secret matrix dimensions do not match m");
    }
    network.secret = SecretMatrix(std::move(s), params.modulus);
  }
  return network;
}

std::string matrix_to_json(const FieldMatrix& m) { return matrix_to_value(m).dump(2) + "\n"; }

FieldMatrix matrix_from_json(const std::string& text) {
  ordered_json doc = ordered_json::parse(text);
  if (!doc.is_array()) throw std::invalid_argument("matrix document must be an array of arrays");
  std::vector<std::vector<FieldElement>> rows;
  for (const ordered_json& row : doc) {
    if (!row.is_array()) throw std::invalid_argument("matrix document must be an array of arrays");
    std::vector<FieldElement> entries;
    for (const ordered_json& entry : row) {
      if (!entry.is_number_unsigned()) {
        throw std::invalid_argument("matrix entries must be nonnegative integers");
      }
      entries.push_back(entry.get<FieldElement>());
    }
    rows.push_back(std::move(entries));
  }
  return FieldMatrix::from_rows(rows);
}

namespace {

ordered_json optional_matrix_to_value(
    const std::vector<std::vector<std::optional<FieldElement>>>& m) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : m) {
    ordered_json out_row = ordered_json::array();
    for (const auto& cell : row) {
      if (cell) {
        out_row.push_back(*cell);
      } else {
        out_row.push_back(nullptr);
      }
    }
    rows.push_back(std::move(out_row));
  }
  return rows;
}

}  // namespace

std::string attack_report_to_json(const AttackReport& report) {
  ordered_json doc;
  doc["variant"] = std::string(to_string(report.params.variant));
  doc["N"] = report.params.network_size;
  doc["m"] = report.params.row_count;
  doc["q"] = report.params.modulus.value();
  doc["compromised"] = report.compromised;
  if (report.pair) {
    ordered_json pair;
    pair["i"] = report.pair->i;
    pair["j"] = report.pair->j;
    pair["determined"] = report.pair->determined;
    if (report.pair->value) {
      pair["value"] = *report.pair->value;
    } else {
      pair["value"] = nullptr;
    }
    doc["pair"] = std::move(pair);
  }
  if (report.determination) {
    doc["determination_matrix"] = optional_matrix_to_value(*report.determination);
  }
  if (report.threshold) {
    const ThresholdReport& t = *report.threshold;
    ordered_json th;
    th["attack_found"] = t.attack_found;
    if (t.attack_found) {
      th["c"] = t.coalition_size;
      th["witness_subset"] = t.witness_subset;
      th["witness_pair"] = ordered_json::array({t.witness_i, t.witness_j});
      th["determined_value"] = t.determined_value;
    }
    doc["threshold"] = std::move(th);
  }
  return doc.dump(2) + "\n";
}

std::string cost_report_to_json(const std::vector<VariantCost>& costs, Prime q) {
  ordered_json doc;
  doc["q"] = q.value();
  doc["bits_per_element"] = bits_per_element(q);
  ordered_json variants = ordered_json::array();
  for (const VariantCost& cost : costs) {
    ordered_json entry;
    entry["variant"] = std::string(to_string(cost.variant));
    entry["stored_field_elements_per_node"] = cost.stored_field_elements_per_node;
    entry["stored_bits_per_node"] = cost.stored_bits_per_node;
    entry["mults_per_key"] = cost.mults_per_key;
    entry["sign_ops_per_key"] = cost.sign_ops_per_key;
    entry["adds_per_key"] = cost.adds_per_key;
    entry["column_synthesis_ops"] = cost.column_synthesis_ops;
    variants.push_back(std::move(entry));
  }
  doc["variants"] = std::move(variants);
  return doc.dump(2) + "\n";
}

}  // namespace blomkit
