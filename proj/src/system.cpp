#include "netdecomp/system.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "netdecomp/errors.hpp"

namespace netdecomp {

namespace {

using ordered_json = nlohmann::ordered_json;

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

Rational entry_from_json(const nlohmann::json& v, const std::string& where) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number())
        throw ParseError(where + ": non-integer JSON numbers lose exactness; "
                                 "quote the value as a string (e.g. \"0.25\")");
    throw ParseError(where + ": expected a rational string or integer");
}

int index_from_json(const nlohmann::json& v, int n, const std::string& where) {
    if (!v.is_number_integer())
        throw ParseError(where + ": expected a 1-based node index");
    long long i = v.get<long long>();
    if (i < 1 || i > n)
        throw ValidationError(where + ": node index " + std::to_string(i) +
                              " out of range 1.." + std::to_string(n));
    return static_cast<int>(i - 1);
}

}  // namespace

bool Graph::has_edge(int from, int to) const {
    for (const auto& e : out_[from])
        if (e.to == to) return true;
    return false;
}

NetworkSystem NetworkSystem::from_parts(Mat a, Mat b, Mat c,
                                        std::vector<std::string> labels) {
    if (a.rows() != a.cols())
        throw ValidationError("A must be square, got " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()));
    const int n = a.rows();
    if (b.cols() > 0 && b.rows() != n)
        throw ValidationError("B must have " + std::to_string(n) + " rows, got " +
                              std::to_string(b.rows()));
    if (b.cols() == 0) b = Mat(n, 0);
    if (c.rows() > 0 && c.cols() != n)
        throw ValidationError("C must have " + std::to_string(n) + " columns, got " +
                              std::to_string(c.cols()));
    if (c.rows() == 0) c = Mat(0, n);

    for (int j = 0; j < b.cols(); ++j) {
        int nonzeros = 0;
        for (int i = 0; i < n; ++i)
            if (!b(i, j).is_zero()) ++nonzeros;
        if (nonzeros != 1)
            throw ValidationError("column " + std::to_string(j + 1) + " of B has " +
                                  std::to_string(nonzeros) + " nonzero entries, expected 1");
    }
    for (int i = 0; i < c.rows(); ++i) {
        int nonzeros = 0;
        int where = -1;
        for (int j = 0; j < n; ++j)
            if (!c(i, j).is_zero()) {
                ++nonzeros;
                where = j;
            }
        if (nonzeros != 1 || !c(i, where).is_one())
            throw ValidationError("row " + std::to_string(i + 1) +
                                  " of C is not a versor with unit entry");
    }

    if (labels.empty()) {
        labels.reserve(n);
        for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
    }
    if (static_cast<int>(labels.size()) != n)
        throw ValidationError("expected " + std::to_string(n) + " node labels, got " +
                              std::to_string(labels.size()));
    std::set<std::string> unique(labels.begin(), labels.end());
    if (static_cast<int>(unique.size()) != n)
        throw ValidationError("node labels must be unique");

    NetworkSystem sys;
    sys.a_ = std::move(a);
    sys.b_ = std::move(b);
    sys.c_ = std::move(c);
    sys.labels_ = std::move(labels);
    sys.forward_ = Graph(n, GraphView::forward);
    sys.transposed_ = Graph(n, GraphView::transposed);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (sys.a_(i, j).is_zero()) continue;
            sys.forward_.add_edge(j, i, sys.a_(i, j));
            sys.transposed_.add_edge(i, j, sys.a_(i, j));
        }
    sys.fingerprint_ = fnv1a64(serialize_system(sys));
    return sys;
}

int NetworkSystem::sensor_node(int sensor_row) const {
    for (int j = 0; j < node_count(); ++j)
        if (!c_(sensor_row, j).is_zero()) return j;
    throw InvariantViolation("sensor row without a nonzero entry");
}

int NetworkSystem::driver_node(int driver_col) const {
    for (int i = 0; i < node_count(); ++i)
        if (!b_(i, driver_col).is_zero()) return i;
    throw InvariantViolation("driver column without a nonzero entry");
}

NetworkSystem load_system(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("missing integer field \"n\"");
    long long n_ll = doc["n"].get<long long>();
    if (n_ll < 0 || n_ll > 100000) throw ParseError("\"n\" out of range");
    const int n = static_cast<int>(n_ll);

    Mat a(n, n);
    if (!doc.contains("A") || !doc["A"].is_object())
        throw ParseError("missing object field \"A\"");
    const auto& a_doc = doc["A"];
    if (a_doc.contains("dense")) {
        const auto& rows = a_doc["dense"];
        if (!rows.is_array() || static_cast<int>(rows.size()) != n)
            throw ValidationError("A.dense must be an array of " + std::to_string(n) +
                                  " rows");
        for (int i = 0; i < n; ++i) {
            const auto& row = rows[i];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw ValidationError("row " + std::to_string(i + 1) + " of A.dense must have " +
                                      std::to_string(n) + " entries");
            for (int j = 0; j < n; ++j)
                a(i, j) = entry_from_json(row[j], "A.dense[" + std::to_string(i + 1) + "][" +
                                                      std::to_string(j + 1) + "]");
        }
    } else if (a_doc.contains("triplets")) {
        const auto& trip = a_doc["triplets"];
        if (!trip.is_array()) throw ParseError("A.triplets must be an array");
        std::set<std::pair<int, int>> seen;
        for (size_t t = 0; t < trip.size(); ++t) {
            const auto& item = trip[t];
            const std::string where = "A.triplets[" + std::to_string(t + 1) + "]";
            if (!item.is_array() || item.size() != 3)
                throw ParseError(where + ": expected [i, j, value]");
            int i = index_from_json(item[0], n, where);
            int j = index_from_json(item[1], n, where);
            if (!seen.insert({i, j}).second)
                throw ParseError(where + ": duplicate entry for (" + std::to_string(i + 1) +
                                 ", " + std::to_string(j + 1) + ")");
            a(i, j) = entry_from_json(item[2], where);
        }
    } else {
        throw ParseError("A must contain either \"dense\" or \"triplets\"");
    }

    Mat b(n, 0);
    if (doc.contains("B")) {
        if (!doc["B"].is_object() || !doc["B"].contains("drivers"))
            throw ParseError("B must be an object with a \"drivers\" array");
        const auto& drivers = doc["B"]["drivers"];
        if (!drivers.is_array()) throw ParseError("B.drivers must be an array");
        b = Mat(n, static_cast<int>(drivers.size()));
        for (size_t m = 0; m < drivers.size(); ++m) {
            const auto& d = drivers[m];
            const std::string where = "B.drivers[" + std::to_string(m + 1) + "]";
            if (!d.is_object() || !d.contains("node") || !d.contains("gain"))
                throw ParseError(where + ": expected {\"node\": i, \"gain\": value}");
            int node = index_from_json(d["node"], n, where);
            b(node, static_cast<int>(m)) = entry_from_json(d["gain"], where);
        }
    }

    Mat c(0, n);
    if (doc.contains("C")) {
        if (!doc["C"].is_object() || !doc["C"].contains("sensors"))
            throw ParseError("C must be an object with a \"sensors\" array");
        const auto& sensors = doc["C"]["sensors"];
        if (!sensors.is_array()) throw ParseError("C.sensors must be an array");
        c = Mat(static_cast<int>(sensors.size()), n);
        for (size_t p = 0; p < sensors.size(); ++p) {
            int node = index_from_json(sensors[p], n, "C.sensors[" + std::to_string(p + 1) + "]");
            c(static_cast<int>(p), node) = Rational(1);
        }
    }

    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array())
            throw ParseError("labels must be an array of strings");
        for (const auto& l : doc["labels"]) {
            if (!l.is_string()) throw ParseError("labels must be an array of strings");
            labels.push_back(l.get<std::string>());
        }
    }

    return NetworkSystem::from_parts(std::move(a), std::move(b), std::move(c),
                                     std::move(labels));
}

NetworkSystem load_system_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_system(buf.str());
}

std::string serialize_system(const NetworkSystem& sys) {
    const int n = sys.node_count();
    ordered_json doc;
    doc["n"] = n;
    doc["labels"] = sys.labels();
    ordered_json dense = ordered_json::array();
    for (int i = 0; i < n; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < n; ++j) row.push_back(sys.a()(i, j).str());
        dense.push_back(std::move(row));
    }
    doc["A"] = ordered_json{{"dense", std::move(dense)}};
    ordered_json drivers = ordered_json::array();
    for (int m = 0; m < sys.driver_count(); ++m) {
        int node = sys.driver_node(m);
        drivers.push_back(ordered_json{{"node", node + 1}, {"gain", sys.b()(node, m).str()}});
    }
    doc["B"] = ordered_json{{"drivers", std::move(drivers)}};
    ordered_json sensors = ordered_json::array();
    for (int p = 0; p < sys.sensor_count(); ++p) sensors.push_back(sys.sensor_node(p) + 1);
    doc["C"] = ordered_json{{"sensors", std::move(sensors)}};
    return doc.dump(2) + "\n";
}

namespace {

void walk_dfs(const Graph& g, int node, int target, int remaining,
              std::vector<GraphEdge>& stack, const Rational& weight,
              std::vector<Path>& out) {
    if (remaining == 0) {
        if (node == target) out.push_back({stack, weight});
        return;
    }
    for (const auto& e : g.out(node)) {
        stack.push_back(e);
        walk_dfs(g, e.to, target, remaining - 1, stack, weight * e.weight, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Path> paths_of_length(const NetworkSystem& sys, int from, int to, int k,
                                  GraphView view) {
    const int n = sys.node_count();
    if (from < 0 || from >= n || to < 0 || to >= n)
        throw DimensionMismatch("walk endpoints out of range");
    if (k < 1 || k > n - 1)
        throw DimensionMismatch("walk length must satisfy 1 <= k <= N-1");
    std::vector<Path> out;
    std::vector<GraphEdge> stack;
    walk_dfs(sys.graph(view), from, to, k, stack, Rational(1), out);
    return out;
}

PathIdentityCheck verify_path_identity(const NetworkSystem& sys, int sensor_row, int node,
                                       int k) {
    if (sensor_row < 0 || sensor_row >= sys.sensor_count())
        throw DimensionMismatch("sensor row out of range");
    Mat row = sys.c().row(sensor_row);
    for (int step = 0; step < k; ++step) row = row * sys.a();
    Rational lhs = row(0, node);

    Rational rhs;
    for (const auto& p :
         paths_of_length(sys, sys.sensor_node(sensor_row), node, k, GraphView::transposed))
        rhs += p.weight;

    return {lhs, rhs, lhs == rhs};
}

}  // namespace netdecomp
