#pragma once

#include "cag/quarter_value.hpp"
#include "cag/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cag {

/// Finite simple graph with unit-length edges, treated as a geodesic
/// metric space: points are the vertices plus the interiors of edges.
/// All-pairs vertex distances are cached eagerly at construction, so a
/// built graph is immutable and cheap to query from many threads.
class UnitGraph {
public:
    static constexpr int kInfinite = -1;

    UnitGraph() = default;
    UnitGraph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const { return adj_matrix_[static_cast<size_t>(u) * n_ + v]; }

    /// Hop distance between vertices; kInfinite across components.
    int dist(int u, int v) const { return dist_[static_cast<size_t>(u) * n_ + v]; }

    /// Index into edges() for edge {u, v}; -1 if absent.
    int edge_index(int u, int v) const;

    bool is_connected() const;

    UnitGraph induced_subgraph(const std::vector<int>& vertices) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;  // each u < v, sorted
    std::vector<std::vector<int>> adj_;
    std::vector<char> adj_matrix_;
    std::vector<int> dist_;
};

/// A point of the metric graph: either a vertex or a point interior to
/// an edge at an exact rational offset. Construction canonicalizes, so
/// two GraphPoints denoting the same physical point compare equal.
class GraphPoint {
public:
    GraphPoint() = default;  // vertex 0

    static GraphPoint at_vertex(int v);
    /// Offset measured from u along edge {u, v}; offsets 0 and 1
    /// collapse to the endpoint vertices.
    static GraphPoint on_edge(int u, int v, const Rational& offset);

    bool is_vertex() const { return vertex_ >= 0; }
    int vertex() const { return vertex_; }
    int edge_u() const { return u_; }
    int edge_v() const { return v_; }
    const Rational& offset() const { return offset_; }

    friend bool operator==(const GraphPoint& a, const GraphPoint& b) {
        if (a.is_vertex() != b.is_vertex()) return false;
        if (a.is_vertex()) return a.vertex_ == b.vertex_;
        return a.u_ == b.u_ && a.v_ == b.v_ && a.offset_ == b.offset_;
    }

    std::string str() const;

private:
    int vertex_ = 0;  // >= 0 for a vertex point
    int u_ = -1, v_ = -1;
    Rational offset_;
};

/// Exact geodesic distance between two points of the metric graph;
/// infinite across components. Throws input_error if a point references
/// an edge the graph does not have.
QuarterValue point_distance(const UnitGraph& g, const GraphPoint& p, const GraphPoint& q);

/// Maximum hop distance over vertex pairs.
QuarterValue diameter_vertices(const UnitGraph& g);

/// Supremum of point_distance over the whole metric graph. Distance
/// restricted to one edge is piecewise linear with breakpoints on the
/// quarter grid, so the supremum is attained among quarter-grid points
/// and the maximization below is exact, not approximate.
QuarterValue diameter_graph(const UnitGraph& g);

struct TDecomposition {
    std::vector<std::vector<int>> parts;  // vertex sets, each inducing one piece
    std::vector<int> cut_vertices;
};

/// Biconnected-component decomposition; isolated vertices become
/// singleton parts. Any two parts share at most one vertex and every
/// shared vertex is a cut vertex.
TDecomposition t_decomposition(const UnitGraph& g);

struct CycleList {
    std::vector<std::vector<int>> cycles;  // each canonical up to rotation/reflection
    bool saturated = false;               // hit max_count; list is partial
};

/// All simple cycles (length >= 3) by backtracking, truncated at
/// max_count with an explicit saturation flag, never silently.
CycleList enumerate_cycles(const UnitGraph& g, long long max_count);

/// Degree of v in the subgraph induced by the cycle's vertex set (this
/// counts chords, so the result may exceed 2). Throws input_error if v
/// is not on the cycle.
int cycle_degree(const UnitGraph& g, const std::vector<int>& cycle, int v);

/// Perfect-elimination-ordering test via lexicographic BFS.
bool is_chordal(const UnitGraph& g);

bool is_regular_of_degree(const UnitGraph& g, int k);

/// Edge-list text format: first line n, then one "u v" per line,
/// 0-based; '#' starts a comment.
UnitGraph read_edge_list(std::istream& in);
UnitGraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const UnitGraph& g);
std::string edge_list_to_string(const UnitGraph& g);

}  // namespace cag
