#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "pearl/gate_model.hpp"
#include "pearl/scheduler.hpp"

// JSON documents emitted by the CLI. Requires the vendored nlohmann/json (json.hpp) on the include path.

namespace pearl {

inline nlohmann::json realization_json(const ConvRealization& realization) {
  nlohmann::json gates = nlohmann::json::array();
  for (const PlacedGate& gate : realization.gates) {
    nlohmann::json g;
    g["kind"] = std::string(kind_name(gate.kind));
    if (gate.sigma) g["source"] = gate.source;
    g["target"] = gate.target;
    if (gate.sigma) g["sigma"] = *gate.sigma;
    g["tau"] = gate.tau;
    gates.push_back(std::move(g));
  }
  return {{"frame_size", realization.frame_size},
          {"memory", realization.memory},
          {"gates", std::move(gates)}};
}

struct VerificationReport {
  std::int64_t dp_memory = 0;
  /// Empty when the brute force was skipped or found nothing within its bound.
  std::optional<std::int64_t> brute_force_memory;
  bool order_preserved = false;
  bool tableau_equal = false;
  int frame_size = 1;
  std::int64_t frames = 1;
  std::string divergence;
  std::string order_violation;
  std::string warning;

  bool passed(bool brute_force_ran) const {
    const bool minimal = !brute_force_ran ||
                         (brute_force_memory && *brute_force_memory == dp_memory);
    return minimal && order_preserved && tableau_equal;
  }
};

inline nlohmann::json report_json(const VerificationReport& report) {
  nlohmann::json out;
  out["minimality"] = {{"dp", report.dp_memory}, {"brute_force", nullptr}};
  if (report.brute_force_memory) out["minimality"]["brute_force"] = *report.brute_force_memory;
  out["order_preserved"] = report.order_preserved;
  out["tableau_equal"] = report.tableau_equal;
  out["window"] = {{"n", report.frame_size}, {"F", report.frames}};
  if (!report.divergence.empty()) out["divergence"] = report.divergence;
  if (!report.order_violation.empty()) out["order_violation"] = report.order_violation;
  if (!report.warning.empty()) out["warning"] = report.warning;
  return out;
}

}  // namespace pearl
