#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "netdecomp/controllability.hpp"
#include "netdecomp/observability.hpp"
#include "netdecomp/partition.hpp"
#include "netdecomp/structure.hpp"

namespace netdecomp {

inline constexpr const char* kToolName = "netdecomp";
inline constexpr const char* kToolVersion = "0.1.0";

// All machine output goes through ordered_json so key order, and therefore
// the emitted bytes, are identical across runs.
using Report = nlohmann::ordered_json;

std::string fingerprint_hex(std::uint64_t h);
std::vector<std::string> to_labels(const NetworkSystem& sys, const NodeSet& nodes);

Report mat_report(const Mat& m);  // array of rows of canonical rational strings
Report system_summary(const NetworkSystem& sys);
Report trace_report(const std::vector<IterationRecord>& trace);

Report observability_report(const NetworkSystem& sys, const ObservabilityResult& res,
                            bool emit_t);
Report controllability_report(const NetworkSystem& sys, const ControllabilityResult& res,
                              bool emit_t);
Report partition_cells(const NetworkSystem& sys, const NodePartition& p);
Report analysis_report(const NetworkSystem& sys, const ObservabilityResult& obs,
                       const ControllabilityResult& ctrl,
                       const std::vector<int>& choice_indices,
                       const std::vector<NodePartition>& partitions);
Report genericity_report(const NetworkSystem& sys, const GenericityReport& rep);
Report perturbation_frequency_report(const NetworkSystem& sys,
                                     const PerturbationFrequency& freq);

}  // namespace netdecomp
