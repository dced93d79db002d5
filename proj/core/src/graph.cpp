#include "cag/graph.hpp"

#include "cag/errors.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <list>
#include <sstream>

namespace cag {

UnitGraph::UnitGraph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw input_error("negative vertex count");
    adj_.resize(n);
    adj_matrix_.assign(static_cast<size_t>(n) * n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw input_error("edge endpoint out of range");
        }
        if (u == v) throw input_error("loop edge rejected: graph must be simple");
        if (u > v) std::swap(u, v);
        if (adj_matrix_[static_cast<size_t>(u) * n + v]) {
            throw input_error("duplicate edge rejected: graph must be simple");
        }
        adj_matrix_[static_cast<size_t>(u) * n + v] = 1;
        adj_matrix_[static_cast<size_t>(v) * n + u] = 1;
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

    // Eager all-pairs BFS; distances are hop counts.
    dist_.assign(static_cast<size_t>(n) * n, kInfinite);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        int* d = dist_.data() + static_cast<size_t>(s) * n;
        d[s] = 0;
        queue.clear();
        queue.push_back(s);
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : adj_[x]) {
                if (d[y] == kInfinite) {
                    d[y] = d[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
}

int UnitGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool UnitGraph::is_connected() const {
    if (n_ <= 1) return true;
    for (int v = 1; v < n_; ++v) {
        if (dist(0, v) == kInfinite) return false;
    }
    return true;
}

UnitGraph UnitGraph::induced_subgraph(const std::vector<int>& vertices) const {
    std::vector<int> index(n_, -1);
    for (size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> sub_edges;
    for (auto [u, v] : edges_) {
        if (index[u] >= 0 && index[v] >= 0) sub_edges.emplace_back(index[u], index[v]);
    }
    return UnitGraph(static_cast<int>(vertices.size()), sub_edges);
}

GraphPoint GraphPoint::at_vertex(int v) {
    GraphPoint p;
    p.vertex_ = v;
    return p;
}

GraphPoint GraphPoint::on_edge(int u, int v, const Rational& offset) {
    if (offset < Rational(0) || offset > Rational(1)) {
        throw input_error("edge offset outside [0, 1]");
    }
    Rational off = offset;
    if (u > v) {
        std::swap(u, v);
        off = Rational(1) - off;
    }
    if (off == Rational(0)) return at_vertex(u);
    if (off == Rational(1)) return at_vertex(v);
    GraphPoint p;
    p.vertex_ = -1;
    p.u_ = u;
    p.v_ = v;
    p.offset_ = off;
    return p;
}

std::string GraphPoint::str() const {
    if (is_vertex()) return "v" + std::to_string(vertex_);
    return "(" + std::to_string(u_) + "," + std::to_string(v_) + ")@" + offset_.str();
}

namespace {

// Exits of a point: the vertices through which a path may leave it,
// with the exact cost of reaching each.
struct Exit {
    int vertex;
    Rational cost;
};

void collect_exits(const UnitGraph& g, const GraphPoint& p, Exit out[2], int& count) {
    if (p.is_vertex()) {
        if (p.vertex() < 0 || p.vertex() >= g.n()) throw input_error("vertex out of range");
        out[0] = {p.vertex(), Rational(0)};
        count = 1;
        return;
    }
    if (g.edge_index(p.edge_u(), p.edge_v()) < 0) {
        throw input_error("graph point on a non-edge");
    }
    out[0] = {p.edge_u(), p.offset()};
    out[1] = {p.edge_v(), Rational(1) - p.offset()};
    count = 2;
}

}  // namespace

QuarterValue point_distance(const UnitGraph& g, const GraphPoint& p, const GraphPoint& q) {
    Exit pe[2], qe[2];
    int pc = 0, qc = 0;
    collect_exits(g, p, pe, pc);
    collect_exits(g, q, qe, qc);

    std::optional<Rational> best;
    // Interior points of a common edge reach each other directly.
    if (!p.is_vertex() && !q.is_vertex() && p.edge_u() == q.edge_u() && p.edge_v() == q.edge_v()) {
        best = abs(p.offset() - q.offset());
    }
    for (int i = 0; i < pc; ++i) {
        for (int j = 0; j < qc; ++j) {
            int d = g.dist(pe[i].vertex, qe[j].vertex);
            if (d == UnitGraph::kInfinite) continue;
            Rational total = pe[i].cost + Rational(d) + qe[j].cost;
            if (!best || total < *best) best = total;
        }
    }
    if (!best) return QuarterValue::infinity();
    return QuarterValue(*best);
}

QuarterValue diameter_vertices(const UnitGraph& g) {
    int best = 0;
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            int d = g.dist(u, v);
            if (d == UnitGraph::kInfinite) return QuarterValue::infinity();
            best = std::max(best, d);
        }
    }
    return QuarterValue(Rational(best));
}

QuarterValue diameter_graph(const UnitGraph& g) {
    if (g.n() == 0) return QuarterValue(Rational(0));
    if (!g.is_connected() && g.n() > 1) return QuarterValue::infinity();
    std::vector<GraphPoint> grid;
    for (int v = 0; v < g.n(); ++v) grid.push_back(GraphPoint::at_vertex(v));
    for (auto [u, v] : g.edges()) {
        for (int k = 1; k <= 3; ++k) grid.push_back(GraphPoint::on_edge(u, v, Rational(k, 4)));
    }
    Rational best(0);
    for (size_t i = 0; i < grid.size(); ++i) {
        for (size_t j = i + 1; j < grid.size(); ++j) {
            QuarterValue d = point_distance(g, grid[i], grid[j]);
            if (d.is_infinite()) return QuarterValue::infinity();
            if (d.value() > best) best = d.value();
        }
    }
    return QuarterValue(best);
}

namespace {

struct BiconnectedState {
    const UnitGraph& g;
    std::vector<int> disc, low, parent;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> parts;
    std::vector<char> is_cut;
    int timer = 0;

    explicit BiconnectedState(const UnitGraph& graph)
        : g(graph),
          disc(graph.n(), -1),
          low(graph.n(), -1),
          parent(graph.n(), -1),
          is_cut(graph.n(), 0) {}

    void emit_component(const std::pair<int, int>& until) {
        std::vector<int> verts;
        auto add = [&verts](int v) {
            if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
        };
        while (!edge_stack.empty()) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            add(e.first);
            add(e.second);
            if (e == until) break;
        }
        std::sort(verts.begin(), verts.end());
        parts.push_back(std::move(verts));
    }

    // Iterative DFS; the explicit stack carries the neighbor cursor.
    void run(int root) {
        struct Frame {
            int v;
            size_t next = 0;
        };
        std::vector<Frame> stack{{root}};
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            int v = f.v;
            if (f.next < g.neighbors(v).size()) {
                int w = g.neighbors(v)[f.next++];
                if (disc[w] == -1) {
                    parent[w] = v;
                    if (v == root) ++root_children;
                    edge_stack.emplace_back(v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w});
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int u = stack.back().v;
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= disc[u]) {
                        emit_component({u, v});
                        if (u != root) is_cut[u] = 1;
                    }
                }
            }
        }
        if (root_children > 1) is_cut[root] = 1;
    }
};

}  // namespace

TDecomposition t_decomposition(const UnitGraph& g) {
    BiconnectedState state(g);
    for (int v = 0; v < g.n(); ++v) {
        if (state.disc[v] == -1) {
            if (g.degree(v) == 0) {
                state.parts.push_back({v});
                state.disc[v] = state.timer++;
            } else {
                state.run(v);
            }
        }
    }
    TDecomposition result;
    result.parts = std::move(state.parts);
    for (int v = 0; v < g.n(); ++v) {
        if (state.is_cut[v]) result.cut_vertices.push_back(v);
    }
    return result;
}

namespace {

// Cycles are emitted with the smallest vertex first and the smaller of
// the two rotation directions second, which makes each cycle unique up
// to rotation and reflection.
void cycle_backtrack(const UnitGraph& g, int start, std::vector<int>& path,
                     std::vector<char>& on_path, CycleList& out, long long max_count) {
    if (out.saturated) return;
    int v = path.back();
    for (int w : g.neighbors(v)) {
        if (out.saturated) return;
        if (w == start && path.size() >= 3) {
            if (path[1] < path.back()) {
                if (static_cast<long long>(out.cycles.size()) >= max_count) {
                    out.saturated = true;
                    return;
                }
                out.cycles.push_back(path);
            }
        } else if (w > start && !on_path[w]) {
            path.push_back(w);
            on_path[w] = 1;
            cycle_backtrack(g, start, path, on_path, out, max_count);
            on_path[w] = 0;
            path.pop_back();
        }
    }
}

}  // namespace

CycleList enumerate_cycles(const UnitGraph& g, long long max_count) {
    if (max_count < 1) throw input_error("cycle cap must be at least 1");
    CycleList out;
    std::vector<char> on_path(g.n(), 0);
    for (int s = 0; s < g.n() && !out.saturated; ++s) {
        std::vector<int> path{s};
        on_path[s] = 1;
        cycle_backtrack(g, s, path, on_path, out, max_count);
        on_path[s] = 0;
    }
    return out;
}

int cycle_degree(const UnitGraph& g, const std::vector<int>& cycle, int v) {
    if (std::find(cycle.begin(), cycle.end(), v) == cycle.end()) {
        throw input_error("vertex not on cycle");
    }
    int deg = 0;
    for (int w : cycle) {
        if (w != v && g.adjacent(v, w)) ++deg;
    }
    return deg;
}

bool is_chordal(const UnitGraph& g) {
    int n = g.n();
    if (n == 0) return true;
    // Lexicographic BFS by partition refinement.
    std::vector<int> order;
    order.reserve(n);
    std::list<std::vector<int>> partition;
    {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        partition.push_back(std::move(all));
    }
    std::vector<char> visited(n, 0);
    while (!partition.empty()) {
        int v = partition.front().back();
        partition.front().pop_back();
        if (partition.front().empty()) partition.pop_front();
        visited[v] = 1;
        order.push_back(v);
        for (auto it = partition.begin(); it != partition.end();) {
            std::vector<int> hit, miss;
            for (int x : *it) (g.adjacent(v, x) ? hit : miss).push_back(x);
            if (!hit.empty() && !miss.empty()) {
                *it = std::move(miss);
                partition.insert(it, std::move(hit));
                ++it;
            } else {
                ++it;
            }
        }
    }
    // order is a LexBFS order; its reverse is a perfect elimination
    // ordering iff the graph is chordal.
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        // Earlier-in-order neighbors of v; the latest of them must be
        // adjacent to all the others.
        std::vector<int> earlier;
        for (int w : g.neighbors(v)) {
            if (pos[w] < i) earlier.push_back(w);
        }
        if (earlier.empty()) continue;
        int pivot = *std::max_element(earlier.begin(), earlier.end(),
                                      [&pos](int a, int b) { return pos[a] < pos[b]; });
        for (int w : earlier) {
            if (w != pivot && !g.adjacent(pivot, w)) return false;
        }
    }
    return true;
}

bool is_regular_of_degree(const UnitGraph& g, int k) {
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) != k) return false;
    }
    return true;
}

UnitGraph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n)) continue;
            if (n < 0) throw input_error("edge list: negative vertex count");
        } else {
            int u, v;
            if (!(ls >> u)) continue;
            if (!(ls >> v)) throw input_error("edge list line " + std::to_string(lineno) + ": lone endpoint");
            edges.emplace_back(u, v);
        }
        std::string extra;
        if (ls >> extra) throw input_error("edge list line " + std::to_string(lineno) + ": trailing tokens");
    }
    if (n < 0) throw input_error("edge list: missing vertex count");
    return UnitGraph(n, edges);
}

UnitGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const UnitGraph& g) {
    out << g.n() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string edge_list_to_string(const UnitGraph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace cag
