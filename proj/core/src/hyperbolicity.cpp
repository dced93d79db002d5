#include "cag/hyperbolicity.hpp"

#include "cag/errors.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace cag {

AnchorSet anchor_set(const UnitGraph& g) {
    AnchorSet a;
    for (int v = 0; v < g.n(); ++v) a.points.push_back(GraphPoint::at_vertex(v));
    for (auto [u, v] : g.edges()) a.points.push_back(GraphPoint::on_edge(u, v, Rational(1, 2)));
    return a;
}

namespace {

// All interior arithmetic runs in integer eighths of an edge. A point
// is either a vertex or an interior position off8 in 1..7 on an edge,
// measured from the edge's smaller endpoint.
struct EPoint {
    int vertex = -1;  // >= 0 for a vertex point
    int edge = -1;
    int off8 = 0;

    bool is_vertex() const { return vertex >= 0; }
    friend bool operator==(const EPoint& a, const EPoint& b) {
        if (a.is_vertex() != b.is_vertex()) return false;
        return a.is_vertex() ? a.vertex == b.vertex : (a.edge == b.edge && a.off8 == b.off8);
    }
};

struct Geodesic {
    EPoint a, b;
    std::vector<int> verts;  // vertex chain; empty for a same-edge segment
    int len8 = 0;
    std::vector<EPoint> samples;                 // step grid, endpoints included
    std::vector<std::array<int, 3>> ranges;      // (edge, lo8, hi8), sorted by edge
    std::vector<int> vset;                       // sorted vertices visited
};

struct PairGeodesics {
    std::vector<Geodesic> geos;
    bool saturated = false;
};

class DeltaEngine {
public:
    DeltaEngine(const UnitGraph& g, long long cap, int step) : g_(g), cap_(cap), step_(step) {
        if (!g.is_connected()) throw input_error("delta engine requires a connected graph");
        n_ = g.n();
        m_ = g.m();
    }

    void set_anchors(std::vector<EPoint> anchors) {
        anchors_ = std::move(anchors);
        int a = static_cast<int>(anchors_.size());
        pair_dist_.assign(static_cast<size_t>(a) * a, 0);
        for (int i = 0; i < a; ++i) {
            for (int j = i + 1; j < a; ++j) {
                int d = d8(anchors_[i], anchors_[j]);
                pair_dist_[static_cast<size_t>(i) * a + j] = d;
                pair_dist_[static_cast<size_t>(j) * a + i] = d;
            }
        }
    }

    EPoint vertex_point(int v) const { return EPoint{v, -1, 0}; }
    EPoint edge_point(int e, int off8) const {
        if (off8 == 0) return vertex_point(g_.edges()[e].first);
        if (off8 == 8) return vertex_point(g_.edges()[e].second);
        return EPoint{-1, e, off8};
    }

    int point_id(const EPoint& p) const {
        return p.is_vertex() ? p.vertex : n_ + p.edge * 7 + (p.off8 - 1);
    }

    int d8(const EPoint& p, const EPoint& q) const {
        if (p.is_vertex() && q.is_vertex()) return 8 * g_.dist(p.vertex, q.vertex);
        if (p.is_vertex()) return d8_vertex_interior(p.vertex, q);
        if (q.is_vertex()) return d8_vertex_interior(q.vertex, p);
        auto [pu, pv] = g_.edges()[p.edge];
        auto [qu, qv] = g_.edges()[q.edge];
        int best = std::min({p.off8 + 8 * g_.dist(pu, qu) + q.off8,
                             p.off8 + 8 * g_.dist(pu, qv) + 8 - q.off8,
                             8 - p.off8 + 8 * g_.dist(pv, qu) + q.off8,
                             8 - p.off8 + 8 * g_.dist(pv, qv) + 8 - q.off8});
        if (p.edge == q.edge) best = std::min(best, std::abs(p.off8 - q.off8));
        return best;
    }

    int anchor_d8(int i, int j) const {
        return pair_dist_[static_cast<size_t>(i) * anchors_.size() + j];
    }

    bool saturated() const { return saturated_; }
    const std::vector<EPoint>& anchors() const { return anchors_; }

    // Highest thinness value over every triangle with anchor corners.
    // For fixed p on a side [xy], the best achievable distance to the
    // union of the two other sides splits as
    //   min( max_{geodesics yz} d(p, .), max_{geodesics zx} d(p, .) ),
    // so sides decouple and no per-triangle geodesic product is needed.
    int value_sweep() {
        int a = static_cast<int>(anchors_.size());
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < a; ++i) {
            for (int j = i + 1; j < a; ++j) pairs.emplace_back(i, j);
        }
        std::sort(pairs.begin(), pairs.end(), [this](const auto& l, const auto& r) {
            int dl = anchor_d8(l.first, l.second), dr = anchor_d8(r.first, r.second);
            if (dl != dr) return dl > dr;
            return l < r;
        });
        int best = 0;
        for (auto [xi, yi] : pairs) {
            int d = anchor_d8(xi, yi);
            if (d <= 2 * best) break;
            const PairGeodesics& pg = geodesics(xi, yi);
            std::vector<int> pts = unique_sample_ids(pg);
            for (int pid : pts) {
                EPoint p = point_from_id(pid);
                int to_x = d8(p, anchors_[xi]);
                int to_y = d8(p, anchors_[yi]);
                if (std::min(to_x, to_y) <= best) continue;
                int self = dstar(pid, p, xi, yi);
                best = std::max(best, std::min(self, std::max(to_x, to_y)));
                for (int zi = 0; zi < a; ++zi) {
                    if (zi == xi || zi == yi) continue;
                    if (d8(p, anchors_[zi]) <= best) continue;
                    int v = std::min(dstar(pid, p, yi, zi), dstar(pid, p, zi, xi));
                    best = std::max(best, v);
                }
            }
        }
        return best;
    }

    // Finds a triangle in the cycle family realizing the given value:
    // corners are anchors, sides geodesics, and the three sides meet
    // pairwise exactly in their shared corner.
    struct Witness {
        std::array<EPoint, 3> corners;
        std::array<const Geodesic*, 3> sides;  // nullptr marks a degenerate point side
        EPoint point;
    };

    std::optional<Witness> find_witness(int target) {
        if (target <= 0) return std::nullopt;
        int a = static_cast<int>(anchors_.size());
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < a; ++i) {
            for (int j = i + 1; j < a; ++j) {
                if (anchor_d8(i, j) >= 2 * target) pairs.emplace_back(i, j);
            }
        }
        std::sort(pairs.begin(), pairs.end(), [this](const auto& l, const auto& r) {
            int dl = anchor_d8(l.first, l.second), dr = anchor_d8(r.first, r.second);
            if (dl != dr) return dl > dr;
            return l < r;
        });
        for (auto [xi, yi] : pairs) {
            const PairGeodesics& pg = geodesics(xi, yi);
            size_t k = pg.geos.size();
            // Bigons first; the extremal configurations are bigons.
            for (size_t i = 0; i < k; ++i) {
                for (size_t j = i + 1; j < k; ++j) {
                    const Geodesic& g1 = pg.geos[i];
                    const Geodesic& g2 = pg.geos[j];
                    int allowed[2] = {point_id(g1.a), point_id(g1.b)};
                    if (!meets_only_at(g1, g2, allowed, 2)) continue;
                    EPoint where;
                    int t1 = eval_side(g1, {&g2}, target, where);
                    if (t1 == target) return make_bigon_witness(xi, yi, g1, g2, where);
                    int t2 = eval_side(g2, {&g1}, target, where);
                    if (t2 == target) return make_bigon_witness(xi, yi, g2, g1, where);
                }
            }
            int d = anchor_d8(xi, yi);
            for (int zi = 0; zi < a; ++zi) {
                if (zi == xi || zi == yi) continue;
                int dxz = anchor_d8(xi, zi), dyz = anchor_d8(yi, zi);
                if (dxz > d || dyz > d) continue;  // handled at that pair
                // A corner on a geodesic of the other two reduces the
                // triangle to a bigon, which the loop above covers.
                if (dxz + dyz == d || d + dyz == dxz || d + dxz == dyz) continue;
                auto w = try_triples(xi, yi, zi, target);
                if (w) return w;
            }
        }
        return std::nullopt;
    }

    // Geodesics are enumerated once per unordered pair, oriented from
    // the lower anchor index; node-based storage keeps references valid
    // while other pairs get enumerated.
    const PairGeodesics& geodesics(int ai, int bi) {
        if (ai > bi) std::swap(ai, bi);
        long long key = pair_key(ai, bi);
        auto it = geo_cache_.find(key);
        if (it != geo_cache_.end()) return it->second;
        PairGeodesics pg = enumerate_geodesics(anchors_[ai], anchors_[bi]);
        if (pg.saturated) saturated_ = true;
        return geo_cache_.emplace(key, std::move(pg)).first->second;
    }

    GraphPoint to_graph_point(const EPoint& p) const {
        if (p.is_vertex()) return GraphPoint::at_vertex(p.vertex);
        auto [u, v] = g_.edges()[p.edge];
        return GraphPoint::on_edge(u, v, Rational(p.off8, 8));
    }

    std::vector<GraphPoint> side_breakpoints(const EPoint& a, const std::vector<int>& verts,
                                             const EPoint& b) const {
        std::vector<GraphPoint> pts;
        auto push = [&](const GraphPoint& gp) {
            if (pts.empty() || !(pts.back() == gp)) pts.push_back(gp);
        };
        push(to_graph_point(a));
        for (int v : verts) push(GraphPoint::at_vertex(v));
        push(to_graph_point(b));
        return pts;
    }

private:
    long long pair_key(int ai, int bi) const {
        if (ai > bi) std::swap(ai, bi);
        return static_cast<long long>(ai) * static_cast<long long>(anchors_.size()) + bi;
    }

    int d8_vertex_interior(int v, const EPoint& q) const {
        auto [qu, qv] = g_.edges()[q.edge];
        return std::min(8 * g_.dist(v, qu) + q.off8, 8 * g_.dist(v, qv) + 8 - q.off8);
    }

    EPoint point_from_id(int id) const {
        if (id < n_) return EPoint{id, -1, 0};
        int rest = id - n_;
        return EPoint{-1, rest / 7, rest % 7 + 1};
    }

    PairGeodesics enumerate_geodesics(const EPoint& a, const EPoint& b) {
        PairGeodesics out;
        int total = d8(a, b);
        // Direct segment when both points are interior to one edge.
        if (!a.is_vertex() && !b.is_vertex() && a.edge == b.edge &&
            std::abs(a.off8 - b.off8) == total) {
            out.geos.push_back(finish_geodesic(a, b, {}, total));
        }
        struct ExitOpt {
            int vertex;
            int cost;
        };
        auto exits = [this](const EPoint& p, ExitOpt e[2]) {
            if (p.is_vertex()) {
                e[0] = {p.vertex, 0};
                return 1;
            }
            auto [u, v] = g_.edges()[p.edge];
            e[0] = {u, p.off8};
            e[1] = {v, 8 - p.off8};
            return 2;
        };
        ExitOpt ea[2], eb[2];
        int ca = exits(a, ea), cb = exits(b, eb);
        for (int i = 0; i < ca && !out.saturated; ++i) {
            for (int j = 0; j < cb && !out.saturated; ++j) {
                if (ea[i].cost + 8 * g_.dist(ea[i].vertex, eb[j].vertex) + eb[j].cost != total) {
                    continue;
                }
                enumerate_vertex_paths(a, b, ea[i].vertex, eb[j].vertex, total, out);
            }
        }
        return out;
    }

    void enumerate_vertex_paths(const EPoint& a, const EPoint& b, int from, int to, int total,
                                PairGeodesics& out) {
        std::vector<int> path{from};
        // DFS through the shortest-path structure toward `to`.
        struct Frame {
            int v;
            size_t next = 0;
        };
        std::vector<Frame> stack{{from}};
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.v == to) {
                if (static_cast<long long>(out.geos.size()) >= cap_) {
                    out.saturated = true;
                    return;
                }
                out.geos.push_back(finish_geodesic(a, b, path, total));
                stack.pop_back();
                path.pop_back();
                continue;
            }
            const auto& nbrs = g_.neighbors(f.v);
            bool advanced = false;
            while (f.next < nbrs.size()) {
                int w = nbrs[f.next++];
                if (g_.dist(w, to) == g_.dist(f.v, to) - 1) {
                    stack.push_back({w});
                    path.push_back(w);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                stack.pop_back();
                path.pop_back();
            }
        }
    }

    Geodesic finish_geodesic(const EPoint& a, const EPoint& b, std::vector<int> verts, int len8) {
        Geodesic geo;
        geo.a = a;
        geo.b = b;
        geo.verts = std::move(verts);
        geo.len8 = len8;
        build_segments(geo);
        geo.vset = geo.verts;
        std::sort(geo.vset.begin(), geo.vset.end());
        std::sort(geo.ranges.begin(), geo.ranges.end());
        return geo;
    }

    void add_segment(Geodesic& geo, int edge, int from8, int to8) {
        int lo = std::min(from8, to8), hi = std::max(from8, to8);
        if (lo != hi) geo.ranges.push_back({edge, lo, hi});
        int dir = to8 >= from8 ? step_ : -step_;
        for (int o = from8;; o += dir) {
            EPoint p = edge_point(edge, o);
            if (geo.samples.empty() || !(geo.samples.back() == p)) geo.samples.push_back(p);
            if (o == to8) break;
        }
    }

    void build_segments(Geodesic& geo) {
        if (geo.verts.empty()) {
            add_segment(geo, geo.a.edge, geo.a.off8, geo.b.off8);
            return;
        }
        if (!geo.a.is_vertex()) {
            auto [u, v] = g_.edges()[geo.a.edge];
            add_segment(geo, geo.a.edge, geo.a.off8, geo.verts.front() == u ? 0 : 8);
        } else {
            geo.samples.push_back(geo.a);
        }
        for (size_t i = 0; i + 1 < geo.verts.size(); ++i) {
            int e = g_.edge_index(geo.verts[i], geo.verts[i + 1]);
            auto [u, v] = g_.edges()[e];
            if (geo.verts[i] == u) {
                add_segment(geo, e, 0, 8);
            } else {
                add_segment(geo, e, 8, 0);
            }
        }
        if (!geo.b.is_vertex()) {
            auto [u, v] = g_.edges()[geo.b.edge];
            add_segment(geo, geo.b.edge, geo.verts.back() == u ? 0 : 8, geo.b.off8);
        }
    }

    std::vector<int> unique_sample_ids(const PairGeodesics& pg) const {
        std::vector<int> ids;
        for (const Geodesic& geo : pg.geos) {
            for (const EPoint& p : geo.samples) ids.push_back(point_id(p));
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        return ids;
    }

    // Farthest-geodesic distance: the largest, over geodesics joining
    // the anchor pair, of the distance from p to that geodesic.
    int dstar(int pid, const EPoint& p, int ai, int bi) {
        long long key = (static_cast<long long>(pid) * anchors_.size() * anchors_.size()) +
                        pair_key(ai, bi);
        auto it = dstar_cache_.find(key);
        if (it != dstar_cache_.end()) return it->second;
        const PairGeodesics& pg = geodesics(ai, bi);
        int best = 0;
        for (const Geodesic& geo : pg.geos) {
            int closest = INT32_MAX;
            for (const EPoint& q : geo.samples) {
                closest = std::min(closest, d8(p, q));
                if (closest == 0) break;
            }
            best = std::max(best, closest);
        }
        dstar_cache_.emplace(key, best);
        return best;
    }

    // Largest distance from the side's grid points to the nearest grid
    // point of the target sides; stops early once `target` is reached
    // (no triangle can exceed the graph's delta).
    int eval_side(const Geodesic& side, std::initializer_list<const Geodesic*> targets,
                  int target, EPoint& where) {
        int best = -1;
        for (const EPoint& p : side.samples) {
            int bound = std::min(d8(p, side.a), d8(p, side.b));
            if (bound <= best) continue;
            int closest = INT32_MAX;
            for (const Geodesic* t : targets) {
                for (const EPoint& q : t->samples) closest = std::min(closest, d8(p, q));
            }
            if (closest > best) {
                best = closest;
                where = p;
                if (best >= target) return best;
            }
        }
        return best;
    }

    bool meets_only_at(const Geodesic& g1, const Geodesic& g2, const int* allowed, int n_allowed) {
        auto ok = [&](int id) {
            for (int i = 0; i < n_allowed; ++i) {
                if (allowed[i] == id) return true;
            }
            return false;
        };
        // Shared vertices.
        size_t i = 0, j = 0;
        while (i < g1.vset.size() && j < g2.vset.size()) {
            if (g1.vset[i] < g2.vset[j]) {
                ++i;
            } else if (g1.vset[i] > g2.vset[j]) {
                ++j;
            } else {
                if (!ok(point_id(vertex_point(g1.vset[i])))) return false;
                ++i;
                ++j;
            }
        }
        // Overlapping edge ranges.
        i = j = 0;
        while (i < g1.ranges.size() && j < g2.ranges.size()) {
            if (g1.ranges[i][0] < g2.ranges[j][0]) {
                ++i;
            } else if (g1.ranges[i][0] > g2.ranges[j][0]) {
                ++j;
            } else {
                int lo = std::max(g1.ranges[i][1], g2.ranges[j][1]);
                int hi = std::min(g1.ranges[i][2], g2.ranges[j][2]);
                if (lo < hi) return false;
                if (lo == hi && lo != 0 && lo != 8) {
                    if (!ok(point_id(edge_point(g1.ranges[i][0], lo)))) return false;
                }
                // A touch at offset 0 or 8 is a shared vertex, already
                // vetted above.
                if (g1.ranges[i][2] < g2.ranges[j][2]) {
                    ++i;
                } else {
                    ++j;
                }
            }
        }
        return true;
    }

    std::optional<Witness> make_bigon_witness(int xi, int yi, const Geodesic& realized,
                                              const Geodesic& other, const EPoint& where) {
        Witness w;
        w.corners = {anchors_[xi], anchors_[yi], anchors_[xi]};
        w.sides = {&realized, &other, nullptr};
        w.point = where;
        return w;
    }

    std::optional<Witness> try_triples(int xi, int yi, int zi, int target) {
        const PairGeodesics& pxy = geodesics(xi, yi);
        const PairGeodesics& pyz = geodesics(yi, zi);
        const PairGeodesics& pzx = geodesics(zi, xi);
        int id_x = point_id(anchors_[xi]);
        int id_y = point_id(anchors_[yi]);
        int id_z = point_id(anchors_[zi]);
        for (const Geodesic& g1 : pxy.geos) {
            for (const Geodesic& g2 : pyz.geos) {
                int at_y[1] = {id_y};
                if (!meets_only_at(g1, g2, at_y, 1)) continue;
                for (const Geodesic& g3 : pzx.geos) {
                    int at_z[1] = {id_z};
                    int at_x[1] = {id_x};
                    if (!meets_only_at(g2, g3, at_z, 1)) continue;
                    if (!meets_only_at(g3, g1, at_x, 1)) continue;
                    EPoint where;
                    const Geodesic* sides[3] = {&g1, &g2, &g3};
                    const Geodesic* others[3][2] = {{&g2, &g3}, {&g3, &g1}, {&g1, &g2}};
                    for (int s = 0; s < 3; ++s) {
                        int t = eval_side(*sides[s], {others[s][0], others[s][1]}, target, where);
                        if (t == target) {
                            Witness w;
                            w.corners = {anchors_[xi], anchors_[yi], anchors_[zi]};
                            w.sides = {&g1, &g2, &g3};
                            w.point = where;
                            return w;
                        }
                    }
                }
            }
        }
        return std::nullopt;
    }

    const UnitGraph& g_;
    long long cap_;
    int step_;
    int n_ = 0, m_ = 0;
    bool saturated_ = false;
    std::vector<EPoint> anchors_;
    std::vector<int> pair_dist_;
    std::map<long long, PairGeodesics> geo_cache_;
    std::unordered_map<long long, int> dstar_cache_;
};

std::vector<EPoint> half_grid_anchors(const UnitGraph& g, const DeltaEngine& eng) {
    std::vector<EPoint> anchors;
    for (int v = 0; v < g.n(); ++v) anchors.push_back(eng.vertex_point(v));
    for (int e = 0; e < g.m(); ++e) anchors.push_back(eng.edge_point(e, 4));
    return anchors;
}

std::vector<EPoint> quarter_grid_anchors(const UnitGraph& g, const DeltaEngine& eng) {
    std::vector<EPoint> anchors;
    for (int v = 0; v < g.n(); ++v) anchors.push_back(eng.vertex_point(v));
    for (int e = 0; e < g.m(); ++e) {
        for (int off : {2, 4, 6}) anchors.push_back(eng.edge_point(e, off));
    }
    return anchors;
}

DeltaReport report_from_engine(DeltaEngine& eng, int best8) {
    DeltaReport report;
    report.delta = QuarterValue(Rational(best8, 8));
    report.saturated = eng.saturated();
    auto witness = eng.find_witness(best8);
    if (witness) {
        GeodesicTriangle tri;
        for (int c = 0; c < 3; ++c) tri.corners[c] = eng.to_graph_point(witness->corners[c]);
        for (int s = 0; s < 3; ++s) {
            if (witness->sides[s]) {
                tri.sides[s] = eng.side_breakpoints(witness->sides[s]->a, witness->sides[s]->verts,
                                                    witness->sides[s]->b);
                // Side s runs from corner s to corner s+1; enumeration
                // orients by anchor index, so flip where needed.
                if (!(tri.sides[s].front() == tri.corners[s])) {
                    std::reverse(tri.sides[s].begin(), tri.sides[s].end());
                }
            } else {
                tri.sides[s] = {eng.to_graph_point(witness->corners[2])};
            }
        }
        report.witness = std::move(tri);
        report.witness_point = eng.to_graph_point(witness->point);
    }
    return report;
}

}  // namespace

DeltaReport delta_exact(const UnitGraph& g, const DeltaOptions& opts) {
    if (opts.geodesic_cap < 1) throw input_error("geodesic cap must be at least 1");
    DeltaEngine eng(g, opts.geodesic_cap, 2);
    eng.set_anchors(half_grid_anchors(g, eng));
    int best8 = eng.value_sweep();
    return report_from_engine(eng, best8);
}

QuarterValue delta_oracle(const UnitGraph& g, const DeltaOptions& opts) {
    if (g.n() + g.m() > 30) {
        throw size_limit_error("delta_oracle limited to n + m <= 30");
    }
    // Stays independent of the decomposition machinery: disconnected
    // inputs split into plain connected components, nothing finer.
    if (!g.is_connected()) {
        std::vector<int> comp(g.n(), -1);
        QuarterValue best(Rational(0));
        for (int s = 0; s < g.n(); ++s) {
            if (comp[s] >= 0) continue;
            std::vector<int> members{s};
            comp[s] = s;
            for (size_t head = 0; head < members.size(); ++head) {
                for (int w : g.neighbors(members[head])) {
                    if (comp[w] < 0) {
                        comp[w] = s;
                        members.push_back(w);
                    }
                }
            }
            std::sort(members.begin(), members.end());
            best = max(best, delta_oracle(g.induced_subgraph(members), opts));
        }
        return best;
    }
    DeltaEngine eng(g, opts.geodesic_cap, 1);
    eng.set_anchors(quarter_grid_anchors(g, eng));
    int best8 = eng.value_sweep();
    if (eng.saturated()) {
        throw saturation_error("delta_oracle hit the geodesic cap; raise it for exactness");
    }
    return QuarterValue(Rational(best8, 8));
}

DeltaReport delta_sup(const UnitGraph& g, const DeltaOptions& opts) {
    TDecomposition dec = t_decomposition(g);
    DeltaReport best;
    best.delta = QuarterValue(Rational(0));
    for (const auto& part : dec.parts) {
        if (part.size() < 3) continue;  // an edge or a vertex contributes zero
        UnitGraph sub = g.induced_subgraph(part);
        DeltaReport r = delta_exact(sub, opts);
        best.saturated = best.saturated || r.saturated;
        if (!(best.delta < r.delta)) continue;
        best.delta = r.delta;
        // Map the witness back into the original numbering.
        auto remap_point = [&part](const GraphPoint& p) {
            if (p.is_vertex()) return GraphPoint::at_vertex(part[p.vertex()]);
            return GraphPoint::on_edge(part[p.edge_u()], part[p.edge_v()], p.offset());
        };
        best.witness.reset();
        best.witness_point.reset();
        if (r.witness) {
            GeodesicTriangle tri;
            for (int c = 0; c < 3; ++c) tri.corners[c] = remap_point(r.witness->corners[c]);
            for (int s = 0; s < 3; ++s) {
                for (const GraphPoint& p : r.witness->sides[s]) {
                    tri.sides[s].push_back(remap_point(p));
                }
            }
            best.witness = std::move(tri);
            best.witness_point = remap_point(*r.witness_point);
        }
    }
    return best;
}

std::pair<QuarterValue, QuarterValue> delta_bounds(const UnitGraph& g, long long cycle_cap) {
    QuarterValue upper;
    QuarterValue diam = diameter_graph(g);
    if (diam.is_infinite()) {
        // Disconnected: bound by the largest part of the decomposition.
        upper = QuarterValue(Rational(0));
        for (const auto& part : t_decomposition(g).parts) {
            if (part.size() < 3) {
                upper = max(upper, QuarterValue(part.size() == 2 ? Rational(1, 2) : Rational(0)));
                continue;
            }
            QuarterValue d = diameter_graph(g.induced_subgraph(part));
            upper = max(upper, QuarterValue(d.value() / Rational(2)));
        }
    } else {
        upper = QuarterValue(diam.value() / Rational(2));
    }

    Rational lower(0);
    size_t largest_part = 0;
    for (const auto& part : t_decomposition(g).parts) {
        largest_part = std::max(largest_part, part.size());
    }
    if (largest_part >= 3) lower = Rational(3, 4);
    if (largest_part >= 4) lower = Rational(1);
    if (lower >= Rational(1)) {
        CycleList cl = enumerate_cycles(g, cycle_cap);
        for (const auto& cycle : cl.cycles) {
            if (cycle.size() < 5) continue;
            for (int v : cycle) {
                if (cycle_degree(g, cycle, v) == 2) {
                    lower = Rational(5, 4);
                    break;
                }
            }
            if (lower == Rational(5, 4)) break;
        }
        // On saturation the 5/4 test stays conservative.
    }
    return {QuarterValue(lower), upper};
}

LowDeltaClass classify_low_delta(const UnitGraph& g) {
    size_t largest_part = 0;
    for (const auto& part : t_decomposition(g).parts) {
        largest_part = std::max(largest_part, part.size());
    }
    if (largest_part <= 2) return LowDeltaClass::tree;
    if (largest_part == 3) return LowDeltaClass::all_cycles_len3;
    return LowDeltaClass::other;
}

}  // namespace cag
