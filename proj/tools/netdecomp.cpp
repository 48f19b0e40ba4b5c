#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <string>

#include "netdecomp/errors.hpp"
#include "netdecomp/linalg.hpp"
#include "netdecomp/report.hpp"

namespace nd = netdecomp;

namespace {

void emit(const nd::Report& report) { std::cout << report.dump(2) << "\n"; }

std::string join_labels(const std::vector<std::string>& labels) {
    std::string out;
    for (const auto& l : labels) {
        if (!out.empty()) out += " ";
        out += l;
    }
    return out;
}

std::string set_str(const std::vector<std::string>& labels) {
    return "{" + join_labels(labels) + "}";
}

void print_system_line(const nd::NetworkSystem& sys) {
    std::cout << "system: n=" << sys.node_count() << " m=" << sys.driver_count()
              << " p=" << sys.sensor_count()
              << " fingerprint=" << nd::fingerprint_hex(sys.fingerprint()) << "\n";
}

void print_matrix(const std::string& name, const nd::Mat& m) {
    std::cout << name << " (" << m.rows() << "x" << m.cols() << "):\n";
    for (int i = 0; i < m.rows(); ++i) {
        std::cout << " ";
        for (int j = 0; j < m.cols(); ++j) std::cout << " " << m(i, j).str();
        std::cout << "\n";
    }
}

int cmd_observe(const std::string& file, bool json, bool emit_t) {
    nd::NetworkSystem sys = nd::load_system_file(file);
    nd::ObservabilityResult res = nd::analyze_observability(sys);
    if (nd::observable_oracle(sys) != res.observable_set)
        throw nd::InvariantViolation(
            "reduction and definition-level oracle disagree on the observable set");
    if (json) {
        emit(nd::observability_report(sys, res, emit_t));
        return 0;
    }
    print_system_line(sys);
    print_matrix("O", res.O);
    std::cout << "q = rank(O) = " << res.q << "\n";
    for (const auto& rec : res.trace)
        std::cout << "iteration " << rec.k << ": q_k=" << rec.q_k << " f_k=" << rec.f_k
                  << "\n";
    std::cout << "observable nodes (" << res.observable_set.size()
              << "): " << set_str(nd::to_labels(sys, res.observable_set)) << "\n";
    if (emit_t) print_matrix("T", res.T);
    return 0;
}

void print_choice(const nd::NetworkSystem& sys, int index, const nd::ControllableChoice& ch,
                  const nd::NodeSet& downstream, bool emit_t) {
    std::cout << "choice " << index << ": C2 = " << set_str(nd::to_labels(sys, ch.c2))
              << "  C = " << set_str(nd::to_labels(sys, ch.c))
              << "  perturbed = " << set_str(nd::to_labels(sys, ch.perturbed)) << "\n";
    for (int r = 0; r < ch.w.rows(); ++r) {
        bool any = false;
        std::string line;
        for (int c = 0; c < ch.w.cols(); ++c) {
            if (ch.w(r, c).is_zero()) continue;
            if (any) line += " + ";
            line += ch.w(r, c).str() + "*x[" + sys.label(ch.c2[c]) + "]";
            any = true;
        }
        if (any) std::cout << "  forced: x[" << sys.label(ch.rest_nodes[r]) << "] = " << line
                           << "\n";
    }
    std::cout << "  downstream outside C: "
              << set_str(nd::to_labels(sys, nd::set_difference(downstream, ch.c))) << "\n";
    if (emit_t) {
        print_matrix("  T", ch.t);
        print_matrix("  T_inv", ch.t_inv);
    }
}

int cmd_control(const std::string& file, bool json, bool all, std::uint64_t limit,
                bool emit_t) {
    nd::NetworkSystem sys = nd::load_system_file(file);
    nd::ControllabilityResult res =
        nd::analyze_controllability(sys, all ? ~std::uint64_t{0} : limit);
    if (json) {
        emit(nd::controllability_report(sys, res, emit_t));
        return 0;
    }
    print_system_line(sys);
    print_matrix("K", res.K);
    std::cout << "q = rank(K) = " << res.q << ", h = " << res.h << "\n";
    std::cout << "C1 (" << res.c1.size() << "): " << set_str(nd::to_labels(sys, res.c1))
              << "\n";
    const nd::NodeSet downstream = nd::downstream_of_drivers(sys);
    for (size_t i = 0; i < res.choices.size(); ++i)
        print_choice(sys, static_cast<int>(i), res.choices[i], downstream, emit_t);
    if (res.truncated)
        std::cout << "(enumeration truncated at " << res.choices.size()
                  << " choices; pass --all for the full list)\n";
    return 0;
}

int cmd_partition(const std::string& file, bool json, int choice_index,
                  std::uint64_t limit) {
    nd::NetworkSystem sys = nd::load_system_file(file);
    nd::ObservabilityResult obs = nd::analyze_observability(sys);
    nd::ControllabilityResult ctrl = nd::analyze_controllability(sys, limit);
    std::vector<int> indices;
    if (choice_index >= 0) {
        if (choice_index >= static_cast<int>(ctrl.choices.size()))
            throw nd::ValidationError("choice index " + std::to_string(choice_index) +
                                      " out of range; " +
                                      std::to_string(ctrl.choices.size()) +
                                      " choices available");
        indices.push_back(choice_index);
    } else {
        for (size_t i = 0; i < ctrl.choices.size(); ++i) indices.push_back(static_cast<int>(i));
    }
    std::vector<nd::NodePartition> parts;
    for (int i : indices) parts.push_back(nd::partition(obs, ctrl, ctrl.choices[i]));

    if (json) {
        emit(nd::analysis_report(sys, obs, ctrl, indices, parts));
        return 0;
    }
    print_system_line(sys);
    size_t width = 4;
    for (const auto& l : sys.labels()) width = std::max(width, l.size());
    for (size_t p = 0; p < parts.size(); ++p) {
        const auto& part = parts[p];
        std::cout << "choice " << indices[p]
                  << ": C2 = " << set_str(nd::to_labels(sys, part.chosen_c2)) << "\n";
        std::cout << std::left << std::setw(static_cast<int>(width) + 2) << "node"
                  << std::setw(16) << "control" << "observation\n";
        for (int node = 0; node < sys.node_count(); ++node) {
            const char* control = "uncontrollable";
            if (nd::set_contains(part.controllable_observable, node) ||
                nd::set_contains(part.controllable_unobservable, node))
                control = "controllable";
            else if (nd::set_contains(part.perturbed_observable, node) ||
                     nd::set_contains(part.perturbed_unobservable, node))
                control = "perturbed";
            const char* observation =
                nd::set_contains(obs.observable_set, node) ? "observable" : "unobservable";
            std::cout << std::left << std::setw(static_cast<int>(width) + 2)
                      << sys.label(node) << std::setw(16) << control << observation << "\n";
        }
    }
    return 0;
}

int cmd_oracle(const std::string& file, bool json, std::uint64_t cap) {
    nd::NetworkSystem sys = nd::load_system_file(file);
    nd::ObservabilityResult obs = nd::analyze_observability(sys);
    nd::NodeSet oracle_obs = nd::observable_oracle(sys);
    bool obs_agrees = oracle_obs == obs.observable_set;

    nd::Mat k_mat = nd::build_K(sys);
    std::vector<nd::NodeSet> oracle_sets = nd::controllable_oracle(k_mat, cap);
    nd::ControllabilityResult ctrl = nd::analyze_controllability(sys, cap);
    std::vector<nd::NodeSet> enumerated;
    for (const auto& ch : ctrl.choices) enumerated.push_back(ch.c);
    std::sort(enumerated.begin(), enumerated.end());
    bool ctrl_agrees = enumerated == oracle_sets;

    if (!obs_agrees || !ctrl_agrees)
        throw nd::InvariantViolation("oracle disagrees with the main algorithms");

    if (json) {
        nd::Report out;
        out["system"] = nd::system_summary(sys);
        out["observable_oracle"] = nd::to_labels(sys, oracle_obs);
        out["observability_agrees"] = obs_agrees;
        nd::Report sets = nd::Report::array();
        for (const auto& s : oracle_sets) sets.push_back(nd::to_labels(sys, s));
        out["controllable_sets"] = std::move(sets);
        out["controllability_agrees"] = ctrl_agrees;
        emit(out);
        return 0;
    }
    print_system_line(sys);
    std::cout << "observable (definition-level): "
              << set_str(nd::to_labels(sys, oracle_obs)) << "\n";
    std::cout << "maximal controllable sets (" << oracle_sets.size() << "):\n";
    for (const auto& s : oracle_sets)
        std::cout << "  " << set_str(nd::to_labels(sys, s)) << "\n";
    std::cout << "cross-check against main algorithms: ok\n";
    return 0;
}

int cmd_generic_rank(const std::string& file, bool json, const std::string& which) {
    nd::NetworkSystem sys = nd::load_system_file(file);
    nd::Mat m;
    if (which == "A")
        m = sys.a();
    else if (which == "O")
        m = nd::build_O(sys);
    else if (which == "K")
        m = nd::build_K(sys);
    else
        throw nd::ValidationError("--matrix must be one of A, O, K");
    nd::StructurePattern p = nd::pattern_of(m);
    int grank = nd::generic_rank(p);
    int exact = nd::rank(m);
    if (json) {
        emit(nd::Report{{"system", nd::system_summary(sys)},
                        {"matrix", which},
                        {"rows", m.rows()},
                        {"cols", m.cols()},
                        {"free_entries", p.free_count()},
                        {"generic_rank", grank},
                        {"rank", exact}});
        return 0;
    }
    print_system_line(sys);
    std::cout << "matrix " << which << ": " << m.rows() << "x" << m.cols() << ", "
              << p.free_count() << " free entries\n";
    std::cout << "generic rank = " << grank << ", rank of this instance = " << exact << "\n";
    return 0;
}

int cmd_probe(const std::string& file, bool json, int samples, std::uint64_t seed) {
    nd::NetworkSystem sys = nd::load_system_file(file);
    nd::GenericityReport rep = nd::genericity_probe(sys, samples, seed);
    const bool with_drivers = sys.driver_count() > 0;
    nd::PerturbationFrequency freq;
    if (with_drivers) freq = nd::perturbation_probe(sys, samples, seed);
    if (json) {
        nd::Report out = nd::genericity_report(sys, rep);
        if (with_drivers)
            out["perturbation_frequency"] = nd::perturbation_frequency_report(sys, freq);
        emit(out);
        return 0;
    }
    print_system_line(sys);
    std::cout << "samples=" << rep.samples << " seed=" << rep.seed
              << " agreement=" << rep.agreement_fraction.str() << "\n";
    std::cout << "baseline observable: "
              << set_str(nd::to_labels(sys, rep.baseline_set)) << "\n";
    for (const auto& [index, set] : rep.disagreeing_samples)
        std::cout << "disagreement at sample " << index << ": "
                  << set_str(nd::to_labels(sys, set)) << "\n";
    for (const auto& [node, count] : freq.counts)
        std::cout << "perturbed in " << count << "/" << rep.samples
                  << " samples: " << sys.label(node) << "\n";
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"node-level decomposition of linear dynamical networks"};
    app.require_subcommand(1);

    std::string file;
    bool json = false, emit_t = false, all = false;
    std::uint64_t limit = 64;
    int choice_index = -1;
    std::uint64_t cap = 1000000;
    std::string which = "A";
    int samples = 0;
    std::uint64_t seed = 0;

    auto* observe = app.add_subcommand("observe", "observable node set and reduction trace");
    observe->add_option("file", file)->required();
    observe->add_flag("--json", json);
    observe->add_flag("--emit-T", emit_t);

    auto* control = app.add_subcommand("control", "controllable sets, perturbed nodes, transforms");
    control->add_option("file", file)->required();
    control->add_flag("--json", json);
    control->add_flag("--emit-T", emit_t);
    control->add_flag("--all", all);
    control->add_option("--limit", limit);

    auto* part = app.add_subcommand("partition", "six-cell node decomposition");
    part->add_option("file", file)->required();
    part->add_flag("--json", json);
    part->add_option("--choice", choice_index);
    part->add_option("--limit", limit);

    auto* oracle = app.add_subcommand("oracle", "definition-level cross-checks");
    oracle->add_option("file", file)->required();
    oracle->add_flag("--json", json);
    oracle->add_option("--cap", cap);

    auto* grank = app.add_subcommand("generic-rank", "structured (generic) rank via matching");
    grank->add_option("file", file)->required();
    grank->add_flag("--json", json);
    grank->add_option("--matrix", which)->check(CLI::IsMember({"A", "O", "K"}));

    auto* probe = app.add_subcommand("probe", "observable-set stability under reweighting");
    probe->add_option("file", file)->required();
    probe->add_flag("--json", json);
    probe->add_option("--samples", samples)->required();
    probe->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    if (observe->parsed()) return cmd_observe(file, json, emit_t);
    if (control->parsed()) return cmd_control(file, json, all, limit, emit_t);
    if (part->parsed()) return cmd_partition(file, json, choice_index, limit);
    if (oracle->parsed()) return cmd_oracle(file, json, cap);
    if (grank->parsed()) return cmd_generic_rank(file, json, which);
    if (probe->parsed()) return cmd_probe(file, json, samples, seed);
    return 2;
}

struct ErrorInfo {
    std::string type;
    int exit_code;
};

ErrorInfo classify(const std::exception& e) {
    if (dynamic_cast<const nd::ParseError*>(&e)) return {"ParseError", 1};
    if (dynamic_cast<const nd::ValidationError*>(&e)) return {"ValidationError", 1};
    if (dynamic_cast<const nd::InvalidChoice*>(&e)) return {"InvalidChoice", 1};
    if (dynamic_cast<const nd::BudgetExceeded*>(&e)) return {"BudgetExceeded", 1};
    if (dynamic_cast<const nd::DimensionMismatch*>(&e)) return {"DimensionMismatch", 1};
    if (dynamic_cast<const nd::InvariantViolation*>(&e)) return {"InvariantViolation", 2};
    if (dynamic_cast<const nd::MismatchedSystem*>(&e)) return {"MismatchedSystem", 2};
    if (dynamic_cast<const nd::SingularMatrix*>(&e)) return {"SingularMatrix", 2};
    return {"InternalError", 2};
}

}  // namespace

int main(int argc, char** argv) {
    bool json = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--json") json = true;
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        ErrorInfo info = classify(e);
        if (json) {
            nd::Report payload{{"error", {{"type", info.type}, {"message", e.what()}}}};
            std::cout << payload.dump(2) << "\n";
        } else {
            std::cerr << "error (" << info.type << "): " << e.what() << "\n";
        }
        return info.exit_code;
    }
}
