#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netdecomp/matrix.hpp"

namespace netdecomp {

// Which orientation of the network graph an operation works on: the forward
// graph has an edge j -> i for every nonzero A(i,j); the transposed graph
// reverses every edge.
enum class GraphView { forward, transposed };

struct GraphEdge {
    int from;
    int to;
    Rational weight;
};

class Graph {
public:
    Graph() = default;
    Graph(int node_count, GraphView view) : view_(view), out_(node_count) {}

    int node_count() const { return static_cast<int>(out_.size()); }
    GraphView view() const { return view_; }
    const std::vector<GraphEdge>& out(int node) const { return out_[node]; }
    void add_edge(int from, int to, Rational weight) {
        out_[from].push_back({from, to, std::move(weight)});
    }
    bool has_edge(int from, int to) const;

private:
    GraphView view_ = GraphView::forward;
    std::vector<std::vector<GraphEdge>> out_;
};

// The validated triple (A, B, C) with its two graph views. Immutable after
// construction; safe to share across threads.
class NetworkSystem {
public:
    // Validates: A square, B is N x M with exactly one nonzero per column,
    // C is P x N with each row a versor (single entry equal to 1).
    static NetworkSystem from_parts(Mat a, Mat b, Mat c,
                                    std::vector<std::string> labels = {});

    int node_count() const { return a_.rows(); }
    int driver_count() const { return b_.cols(); }
    int sensor_count() const { return c_.rows(); }

    const Mat& a() const { return a_; }
    const Mat& b() const { return b_; }
    const Mat& c() const { return c_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int node) const { return labels_[node]; }

    const Graph& graph(GraphView view) const {
        return view == GraphView::forward ? forward_ : transposed_;
    }
    // Node index measured by sensor row / driver column.
    int sensor_node(int sensor_row) const;
    int driver_node(int driver_col) const;

    // Stable content hash over the canonical serialization.
    std::uint64_t fingerprint() const { return fingerprint_; }

private:
    NetworkSystem() = default;
    Mat a_, b_, c_;
    std::vector<std::string> labels_;
    Graph forward_, transposed_;
    std::uint64_t fingerprint_ = 0;
};

// Parses the JSON system document (see README for the grammar); throws
// ParseError on malformed input and ValidationError on invariant violations,
// naming the offending row/column.
NetworkSystem load_system(const std::string& text);
NetworkSystem load_system_file(const std::string& path);

// Canonical serialization; load_system(serialize_system(s)) == s exactly.
std::string serialize_system(const NetworkSystem& sys);

// A walk of exact length k: consecutive edges share the intermediate node,
// weight is the product of traversed edge weights.
struct Path {
    std::vector<GraphEdge> edges;
    Rational weight;
};

// Exhaustive enumeration of walks of length exactly k (nodes and edges may
// repeat) in the chosen graph view. Intended for verification at desk scale;
// requires 1 <= k <= N-1.
std::vector<Path> paths_of_length(const NetworkSystem& sys, int from, int to, int k,
                                  GraphView view);

struct PathIdentityCheck {
    Rational lhs;  // entry of C A^k
    Rational rhs;  // sum of walk weights in the transposed graph
    bool equal;
};

// Checks that (c_j A^k)_i equals the total weight of length-k walks from the
// j-th sensor's node to node i in the transposed graph.
PathIdentityCheck verify_path_identity(const NetworkSystem& sys, int sensor_row, int node,
                                       int k);

}  // namespace netdecomp
