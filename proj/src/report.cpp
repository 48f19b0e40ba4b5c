#include "netdecomp/report.hpp"

#include <cstdio>

namespace netdecomp {

std::string fingerprint_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<std::string> to_labels(const NetworkSystem& sys, const NodeSet& nodes) {
    std::vector<std::string> out;
    out.reserve(nodes.size());
    for (int v : nodes) out.push_back(sys.label(v));
    return out;
}

Report mat_report(const Mat& m) {
    Report rows = Report::array();
    for (int i = 0; i < m.rows(); ++i) {
        Report row = Report::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Report system_summary(const NetworkSystem& sys) {
    return Report{{"n", sys.node_count()},
                  {"m", sys.driver_count()},
                  {"p", sys.sensor_count()},
                  {"fingerprint", fingerprint_hex(sys.fingerprint())}};
}

Report trace_report(const std::vector<IterationRecord>& trace) {
    Report out = Report::array();
    for (const auto& rec : trace)
        out.push_back(Report{{"k", rec.k}, {"q_k", rec.q_k}, {"f_k", rec.f_k}});
    return out;
}

Report observability_report(const NetworkSystem& sys, const ObservabilityResult& res,
                            bool emit_t) {
    Report out;
    out["system"] = system_summary(sys);
    out["O"] = mat_report(res.O);
    out["q"] = res.q;
    out["observable"] = to_labels(sys, res.observable_set);
    out["observable_count"] = static_cast<int>(res.observable_set.size());
    Report h_cols = Report::array();
    for (int c : res.h_columns) h_cols.push_back(c + 1);
    out["h_columns"] = std::move(h_cols);
    out["trace"] = trace_report(res.trace);
    if (emit_t) out["T"] = mat_report(res.T);
    return out;
}

namespace {

Report choice_report(const NetworkSystem& sys, const ControllableChoice& choice,
                     const NodeSet& downstream, bool emit_t) {
    Report out;
    out["c2"] = to_labels(sys, choice.c2);
    out["c"] = to_labels(sys, choice.c);
    out["perturbed"] = to_labels(sys, choice.perturbed);
    out["w"] = Report{{"rows", to_labels(sys, choice.rest_nodes)},
                      {"cols", to_labels(sys, choice.c2)},
                      {"entries", mat_report(choice.w)}};
    out["downstream_outside_c"] = to_labels(sys, set_difference(downstream, choice.c));
    if (emit_t) {
        out["T"] = mat_report(choice.t);
        out["T_inv"] = mat_report(choice.t_inv);
    }
    return out;
}

}  // namespace

Report controllability_report(const NetworkSystem& sys, const ControllabilityResult& res,
                              bool emit_t) {
    const NodeSet downstream = downstream_of_drivers(sys);
    Report out;
    out["system"] = system_summary(sys);
    out["K"] = mat_report(res.K);
    out["q"] = res.q;
    out["h"] = res.h;
    out["c1"] = to_labels(sys, res.c1);
    Report choices = Report::array();
    for (const auto& choice : res.choices)
        choices.push_back(choice_report(sys, choice, downstream, emit_t));
    out["choices"] = std::move(choices);
    out["truncated"] = res.truncated;
    return out;
}

Report partition_cells(const NetworkSystem& sys, const NodePartition& p) {
    return Report{{"controllable_observable", to_labels(sys, p.controllable_observable)},
                  {"perturbed_observable", to_labels(sys, p.perturbed_observable)},
                  {"uncontrollable_observable", to_labels(sys, p.uncontrollable_observable)},
                  {"controllable_unobservable", to_labels(sys, p.controllable_unobservable)},
                  {"perturbed_unobservable", to_labels(sys, p.perturbed_unobservable)},
                  {"uncontrollable_unobservable",
                   to_labels(sys, p.uncontrollable_unobservable)}};
}

Report analysis_report(const NetworkSystem& sys, const ObservabilityResult& obs,
                       const ControllabilityResult& ctrl,
                       const std::vector<int>& choice_indices,
                       const std::vector<NodePartition>& partitions) {
    Report out;
    out["tool"] = kToolName;
    out["version"] = kToolVersion;
    out["system"] = system_summary(sys);
    out["seeds"] = Report::array();
    out["observability"] = Report{{"q", obs.q},
                                  {"observable", to_labels(sys, obs.observable_set)},
                                  {"trace", trace_report(obs.trace)}};
    out["controllability"] = Report{{"q", ctrl.q},
                                    {"h", ctrl.h},
                                    {"c1", to_labels(sys, ctrl.c1)},
                                    {"choice_count", static_cast<int>(ctrl.choices.size())},
                                    {"truncated", ctrl.truncated}};
    Report parts = Report::array();
    for (size_t i = 0; i < partitions.size(); ++i) {
        parts.push_back(Report{{"choice_index", choice_indices[i]},
                               {"c2", to_labels(sys, partitions[i].chosen_c2)},
                               {"cells", partition_cells(sys, partitions[i])}});
    }
    out["partitions"] = std::move(parts);
    return out;
}

Report genericity_report(const NetworkSystem& sys, const GenericityReport& rep) {
    Report out;
    out["system"] = system_summary(sys);
    out["samples"] = rep.samples;
    out["seed"] = rep.seed;
    out["agreement_fraction"] = rep.agreement_fraction.str();
    out["baseline"] = to_labels(sys, rep.baseline_set);
    Report disagreements = Report::array();
    for (const auto& [index, set] : rep.disagreeing_samples)
        disagreements.push_back(Report{{"sample", index}, {"observable", to_labels(sys, set)}});
    out["disagreements"] = std::move(disagreements);
    return out;
}

Report perturbation_frequency_report(const NetworkSystem& sys,
                                     const PerturbationFrequency& freq) {
    Report out = Report::array();
    for (const auto& [node, count] : freq.counts)
        out.push_back(Report{{"node", sys.label(node)},
                             {"fraction", Rational(count, freq.samples).str()}});
    return out;
}

}  // namespace netdecomp
