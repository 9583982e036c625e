// graph.hpp
//
// Immutable simple undirected binary graph with optional bipartite part
// labels. Vertices are dense integer ids 0..n-1 carrying the original
// string labels from the input file.

#ifndef COMDET_GRAPH_HPP
#define COMDET_GRAPH_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace comdet {

/// Error in user-supplied input (malformed edge list, invalid request).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Breach of an internal invariant; indicates a bug, mapped to exit code 4.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

enum class Part : unsigned char { top, bottom };

enum class InputFormat { unipartite, bipartite };

class GraphBuilder;

class Graph {
public:
    Graph() = default;

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }

    /// Total number of edges m. Binary weights: every edge counts 1.
    long long edge_count() const { return m_; }

    /// k_v, the number of neighbors. Throws on out-of-range v.
    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adjacency_[v].size());
    }

    /// Sorted neighbor list of v.
    std::span<const int> neighbors(int v) const {
        check_vertex(v);
        return adjacency_[v];
    }

    /// A_uv as a boolean; O(log deg).
    bool has_edge(int u, int v) const;

    /// Edge set as (u, v) pairs with u < v, in insertion order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::string& label(int v) const {
        check_vertex(v);
        return labels_[v];
    }

    /// Id of the vertex with this label, if any. In bipartite graphs the two
    /// columns have separate namespaces; an unqualified lookup prefers the
    /// top part when the label occurs in both.
    std::optional<int> find_vertex(std::string_view label) const;
    std::optional<int> find_vertex(std::string_view label, Part part) const;

    bool is_bipartite() const { return !parts_.empty(); }

    /// Part label of v; only valid for bipartite graphs.
    Part part(int v) const {
        check_vertex(v);
        if (!is_bipartite()) throw InputError("graph has no part labels");
        return parts_[v];
    }

private:
    friend class GraphBuilder;

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
    }

    std::vector<std::vector<int>> adjacency_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::string> labels_;
    std::vector<Part> parts_;  // empty when unipartite
    std::unordered_map<std::string, int> index_;  // keyed label (part-qualified if bipartite)
    long long m_ = 0;
};

/// Incremental construction; validates no self-loops, no duplicates, and the
/// cross-part edge rule when parts are declared.
class GraphBuilder {
public:
    explicit GraphBuilder(bool bipartite = false) : bipartite_(bipartite) {}

    /// Get-or-create the vertex with this label (and part, when bipartite).
    int vertex(const std::string& label, Part part = Part::top);

    /// Declare an isolated vertex; same as vertex() but fails on re-declaration.
    int add_vertex(const std::string& label, Part part = Part::top);

    /// Returns false when the edge already exists (caller decides whether to
    /// warn). Throws InputError on self-loops and same-part bipartite edges.
    bool add_edge(int u, int v);

    Graph build();

private:
    std::string key(const std::string& label, Part part) const;

    bool bipartite_;
    Graph g_;
};

/// Parse an edge list: `U<ws>V` per line, `#` starts a comment, blank lines
/// ignored. In bipartite mode column position determines the part and the two
/// columns keep disjoint label namespaces. Duplicate edges are deduplicated
/// with a warning to `warnings` (when given); self-loops, weight columns and
/// malformed lines raise InputError with the line number.
Graph load_edge_list(std::istream& in, InputFormat format, std::ostream* warnings = nullptr);
Graph load_edge_list_file(const std::filesystem::path& path, InputFormat format,
                          std::ostream* warnings = nullptr);

/// Inverse of load_edge_list: one `U<TAB>V` line per edge. Bipartite graphs
/// are written top-column first, so a reload yields the identical graph.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace comdet

#endif  // COMDET_GRAPH_HPP
