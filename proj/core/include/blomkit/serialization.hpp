#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blomkit/field.hpp"
#include "blomkit/metrics.hpp"
#include "blomkit/resilience.hpp"
#include "blomkit/scheme.hpp"

namespace blomkit {

/// Network document: objects/arrays/decimal integers, matrices as row-major
/// arrays of arrays. The public matrix is omitted for the modified variant
/// (nodes synthesize columns; the document stays lossless because P is a pure
/// function of the parameters) and required for the classic one.
std::string network_to_json(const Network& network);
Network network_from_json(const std::string& text);

/// Plain matrix document, used for secret-matrix fixtures.
std::string matrix_to_json(const FieldMatrix& m);
FieldMatrix matrix_from_json(const std::string& text);

struct PairAttackOutcome {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  bool determined = false;
  std::optional<FieldElement> value;
};

/// Attack report in the same document format as Network serialization.
/// Exactly one of the three payloads is filled, matching the CLI mode.
struct AttackReport {
  SchemeParams params;
  std::vector<std::uint32_t> compromised;
  std::optional<PairAttackOutcome> pair;
  std::optional<std::vector<std::vector<std::optional<FieldElement>>>> determination;
  std::optional<ThresholdReport> threshold;
};

std::string attack_report_to_json(const AttackReport& report);

std::string cost_report_to_json(const std::vector<VariantCost>& costs, Prime q);

}  // namespace blomkit
