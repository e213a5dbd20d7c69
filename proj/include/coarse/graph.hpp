// graph.hpp -- locally finite graph windows with exact path metric.
//
// A GraphWindow is a finite connected graph plus a declared boundary: the
// vertices whose neighbourhoods were truncated when the window was cut out
// of an infinite graph. Generators declare their own boundary; graphs read
// from edge lists have an empty boundary and stand for complete finite
// spaces. A point is safe for radius r when the boundary is strictly
// farther than r, which makes every ball, sphere and geodesic of radius
// <= r agree with the infinite object.

#pragma once

#include "coarse/core.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <queue>
#include <sstream>

namespace coarse {

class GraphWindow {
  public:
    using point_type = long long;
    using scale_type = MetricScale;

    GraphWindow(const std::vector<std::pair<long long, long long>>& edges,
                std::vector<long long> boundary = {}) {
        for (const auto& [u, v] : edges) {
            if (u == v) throw std::invalid_argument("GraphWindow: self-loop rejected");
            names_.push_back(u);
            names_.push_back(v);
        }
        std::sort(names_.begin(), names_.end());
        names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
        if (names_.empty()) throw std::invalid_argument("GraphWindow: empty graph");
        for (size_t i = 0; i < names_.size(); ++i) index_[names_[i]] = static_cast<int>(i);

        adj_.assign(names_.size(), {});
        std::vector<std::pair<int, int>> seen;
        for (const auto& [u, v] : edges) {
            int a = index_.at(u), b = index_.at(v);
            seen.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        for (auto [a, b] : seen) {
            adj_[static_cast<size_t>(a)].push_back(b);
            adj_[static_cast<size_t>(b)].push_back(a);
        }
        for (auto& row : adj_) std::sort(row.begin(), row.end());

        for (long long b : boundary) {
            auto it = index_.find(b);
            if (it == index_.end())
                throw std::invalid_argument("GraphWindow: boundary vertex not in graph");
            boundary_idx_.push_back(it->second);
        }
        std::sort(boundary_idx_.begin(), boundary_idx_.end());
        boundary_idx_.erase(std::unique(boundary_idx_.begin(), boundary_idx_.end()),
                            boundary_idx_.end());

        compute_distances();
        for (int d : dist_[0])
            if (d < 0) throw std::invalid_argument("GraphWindow: window graph must be connected");
        compute_boundary_distances();
    }

    static GraphWindow from_edge_list(std::istream& in) {
        std::vector<std::pair<long long, long long>> edges;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream ls(line);
            long long u, v;
            if (!(ls >> u)) continue;  // blank line
            if (!(ls >> v))
                throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                            ": expected two integers");
            long long extra;
            if (ls >> extra)
                throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                            ": expected two integers");
            edges.emplace_back(u, v);
        }
        return GraphWindow(edges);
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<long long>& points() const { return names_; }
    bool contains(long long p) const { return index_.count(p) > 0; }
    int index_of(long long p) const {
        auto it = index_.find(p);
        return it == index_.end() ? -1 : it->second;
    }
    long long name_of(int idx) const { return names_.at(static_cast<size_t>(idx)); }

    const std::vector<int>& neighbors_idx(int idx) const {
        return adj_.at(static_cast<size_t>(idx));
    }
    std::vector<long long> neighbors(long long p) const {
        std::vector<long long> out;
        for (int j : adj_.at(static_cast<size_t>(require_index(p)))) out.push_back(names_[j]);
        return out;
    }
    int degree(long long p) const {
        return static_cast<int>(adj_.at(static_cast<size_t>(require_index(p))).size());
    }
    int max_degree() const {
        size_t m = 0;
        for (const auto& row : adj_) m = std::max(m, row.size());
        return static_cast<int>(m);
    }

    int distance_idx(int i, int j) const {
        return dist_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    std::optional<int> distance(long long u, long long v) const {
        int d = distance_idx(require_index(u), require_index(v));
        if (d < 0) return std::nullopt;
        return d;
    }

    std::vector<long long> ball(long long p, MetricScale s) const {
        int i = require_index(p);
        std::vector<long long> out;
        for (size_t j = 0; j < names_.size(); ++j) {
            int d = dist_[static_cast<size_t>(i)][j];
            if (d >= 0 && d <= s.radius) out.push_back(names_[j]);
        }
        return out;
    }

    bool safe(long long p, MetricScale s) const {
        return boundary_distance(p) > s.radius;
    }

    /// Distance to the nearest boundary vertex; "infinite" (INT_MAX) when the
    /// window has no boundary, i.e. it is a complete finite space.
    int boundary_distance(long long p) const {
        return bdist_.at(static_cast<size_t>(require_index(p)));
    }
    std::vector<long long> boundary() const {
        std::vector<long long> out;
        for (int i : boundary_idx_) out.push_back(names_[static_cast<size_t>(i)]);
        return out;
    }
    bool has_boundary() const { return !boundary_idx_.empty(); }

    /// Eccentricity-based radius bound used as the default modulus cap.
    int radius_bound() const {
        int best = std::numeric_limits<int>::max();
        for (size_t i = 0; i < names_.size(); ++i) {
            int ecc = 0;
            for (size_t j = 0; j < names_.size(); ++j) ecc = std::max(ecc, dist_[i][j]);
            best = std::min(best, ecc);
        }
        return best;
    }

    int diameter() const {
        int d = 0;
        for (size_t i = 0; i < names_.size(); ++i)
            for (size_t j = 0; j < names_.size(); ++j) d = std::max(d, dist_[i][j]);
        return d;
    }

  private:
    int require_index(long long p) const {
        auto it = index_.find(p);
        if (it == index_.end()) throw std::domain_error("GraphWindow: point outside window");
        return it->second;
    }

    void compute_distances() {
        const size_t n = names_.size();
        dist_.assign(n, std::vector<int>(n, -1));
        std::vector<int> queue;
        queue.reserve(n);
        for (size_t s = 0; s < n; ++s) {
            auto& row = dist_[s];
            row[s] = 0;
            queue.clear();
            queue.push_back(static_cast<int>(s));
            for (size_t head = 0; head < queue.size(); ++head) {
                int u = queue[head];
                for (int v : adj_[static_cast<size_t>(u)]) {
                    if (row[static_cast<size_t>(v)] < 0) {
                        row[static_cast<size_t>(v)] = row[static_cast<size_t>(u)] + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
    }

    void compute_boundary_distances() {
        const size_t n = names_.size();
        bdist_.assign(n, std::numeric_limits<int>::max());
        for (size_t i = 0; i < n; ++i)
            for (int b : boundary_idx_)
                bdist_[i] = std::min(bdist_[i], dist_[i][static_cast<size_t>(b)]);
    }

    std::vector<long long> names_;
    std::map<long long, int> index_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> boundary_idx_;
    std::vector<std::vector<int>> dist_;
    std::vector<int> bdist_;
};

// ---------------------------------------------------------------------------
// Paths, rays, spheres
// ---------------------------------------------------------------------------

struct GeodesicPath {
    std::vector<long long> vertices;  // a_0 .. a_m with d(a_0, a_m) = m
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct RayPrefix {
    std::vector<long long> vertices;  // d(a_i, a_j) = j - i for i < j
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

inline bool validate_geodesic(const GraphWindow& g, const std::vector<long long>& path) {
    if (path.empty()) return false;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        auto d = g.distance(path[i], path[i + 1]);
        if (!d || *d != 1) return false;
    }
    auto total = g.distance(path.front(), path.back());
    return total && *total == static_cast<int>(path.size()) - 1;
}

inline bool validate_ray(const GraphWindow& g, const std::vector<long long>& path) {
    if (path.empty()) return false;
    for (size_t i = 0; i < path.size(); ++i)
        for (size_t j = i + 1; j < path.size(); ++j) {
            auto d = g.distance(path[i], path[j]);
            if (!d || *d != static_cast<int>(j - i)) return false;
        }
    return true;
}

inline std::optional<int> bfs_distance(const GraphWindow& g, long long u, long long v) {
    return g.distance(u, v);
}

/// Deterministic shortest path: from u walk toward v always taking the
/// lowest-indexed neighbour that decreases the distance.
inline GeodesicPath geodesic(const GraphWindow& g, long long u, long long v) {
    int ui = g.index_of(u), vi = g.index_of(v);
    if (ui < 0 || vi < 0) throw std::domain_error("geodesic: endpoint outside window");
    if (g.distance_idx(ui, vi) < 0) throw std::domain_error("geodesic: disconnected pair");
    GeodesicPath path;
    int cur = ui;
    path.vertices.push_back(g.name_of(cur));
    while (cur != vi) {
        int d = g.distance_idx(cur, vi);
        for (int nb : g.neighbors_idx(cur)) {
            if (g.distance_idx(nb, vi) == d - 1) {
                cur = nb;
                break;
            }
        }
        path.vertices.push_back(g.name_of(cur));
    }
    return path;
}

/// Exact level set S(v, n); requires v safe at radius n so the window sphere
/// equals the infinite one.
inline std::vector<long long> sphere(const GraphWindow& g, long long v, int n) {
    if (!g.safe(v, MetricScale(n)) && g.has_boundary())
        throw std::domain_error("sphere: radius exceeds safe region");
    int vi = g.index_of(v);
    if (vi < 0) throw std::domain_error("sphere: center outside window");
    std::vector<long long> out;
    for (long long p : g.points())
        if (g.distance_idx(vi, g.index_of(p)) == n) out.push_back(p);
    return out;
}

inline std::vector<long long> ball_graph(const GraphWindow& g, long long v, int r) {
    if (!g.safe(v, MetricScale(r)) && g.has_boundary())
        throw std::domain_error("ball_graph: radius exceeds safe region");
    return g.ball(v, MetricScale(r));
}

struct SphereProfile {
    long long center = 0;
    std::vector<int> sizes;  // sizes[n] = |S(center, n)| for n = 0..horizon
};

inline SphereProfile sphere_profile(const GraphWindow& g, long long v, int horizon) {
    if (horizon < 0) throw std::invalid_argument("sphere_profile: negative horizon");
    if (g.has_boundary() && g.boundary_distance(v) <= horizon)
        throw std::domain_error("sphere_profile: horizon exceeds safe region");
    SphereProfile prof;
    prof.center = v;
    prof.sizes.assign(static_cast<size_t>(horizon) + 1, 0);
    int vi = g.index_of(v);
    for (long long p : g.points()) {
        int d = g.distance_idx(vi, g.index_of(p));
        if (d >= 0 && d <= horizon) prof.sizes[static_cast<size_t>(d)]++;
    }
    return prof;
}

struct SphereBoundReport {
    bool bounded = false;
    int k = 0;          // max observed sphere size
    int witness_n = 0;  // where the max is attained
};

/// Sphere sizes stabilize when the outer half of the horizon shows no growth
/// past the inner half. `k` is the observed bound (or growth witness).
inline SphereBoundReport sphere_profile_bounded(const GraphWindow& g, long long v, int horizon) {
    const SphereProfile prof = sphere_profile(g, v, horizon);
    SphereBoundReport rep;
    int inner = 0, outer = 0;
    const int half = (horizon + 1) / 2;
    for (int n = 1; n <= horizon; ++n) {
        int s = prof.sizes[static_cast<size_t>(n)];
        if (s >= rep.k) {
            rep.k = s;
            rep.witness_n = n;
        }
        if (n <= half)
            inner = std::max(inner, s);
        else
            outer = std::max(outer, s);
    }
    rep.bounded = outer <= inner;
    return rep;
}

/// Number of connected components of (window minus ball(v, r)) that reach the
/// window boundary. Zero for boundaryless (complete finite) spaces.
inline int ends_estimate(const GraphWindow& g, long long v, int r) {
    if (!g.has_boundary()) return 0;
    if (g.boundary_distance(v) <= 2 * r)
        throw std::domain_error("ends_estimate: margin too small (need boundary distance > 2r)");
    const int n = g.size();
    const int vi = g.index_of(v);
    std::vector<char> removed(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        if (g.distance_idx(vi, i) <= r) removed[static_cast<size_t>(i)] = 1;
    std::vector<char> is_boundary(static_cast<size_t>(n), 0);
    for (long long b : g.boundary()) is_boundary[static_cast<size_t>(g.index_of(b))] = 1;

    std::vector<int> comp(static_cast<size_t>(n), -1);
    int ends = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (removed[static_cast<size_t>(s)] || comp[static_cast<size_t>(s)] >= 0) continue;
        bool touches = false;
        stack.assign(1, s);
        comp[static_cast<size_t>(s)] = s;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            if (is_boundary[static_cast<size_t>(u)]) touches = true;
            for (int w : g.neighbors_idx(u)) {
                if (removed[static_cast<size_t>(w)] || comp[static_cast<size_t>(w)] >= 0) continue;
                comp[static_cast<size_t>(w)] = s;
                stack.push_back(w);
            }
        }
        if (touches) ++ends;
    }
    return ends;
}

// ---------------------------------------------------------------------------
// Shape classification
// ---------------------------------------------------------------------------

enum class ShapeKind { Bounded, LineN, LineZ, Other };

struct ShapeClass {
    ShapeKind kind = ShapeKind::Other;
    int ends = -1;
    bool spheres_bounded = false;
    int sphere_bound = 0;
    bool inconclusive = false;
    std::string note;
};

inline const char* to_string(ShapeKind k) {
    switch (k) {
        case ShapeKind::Bounded: return "Bounded";
        case ShapeKind::LineN: return "LineN";
        case ShapeKind::LineZ: return "LineZ";
        default: return "Other";
    }
}

/// Trichotomy classifier. Claims LineN/LineZ only when sphere sizes are
/// bounded over the usable horizon AND the end count matches; anything
/// ambiguous (small margins included) degrades to Other with a note.
inline ShapeClass classify_shape(const GraphWindow& g) {
    ShapeClass out;
    if (!g.has_boundary()) {
        out.kind = ShapeKind::Bounded;
        out.ends = 0;
        out.spheres_bounded = true;
        out.sphere_bound = 0;
        out.note = "complete finite space, diameter " + std::to_string(g.diameter());
        return out;
    }
    // deepest interior vertex, canonical tie-break
    long long center = g.points().front();
    int depth = -1;
    for (long long p : g.points()) {
        int bd = g.boundary_distance(p);
        if (bd > depth) {
            depth = bd;
            center = p;
        }
    }
    static constexpr int kProbeRadius = 2;
    if (depth < 2 * kProbeRadius + 3) {
        out.inconclusive = true;
        out.note = "window margin too small for classification";
        return out;
    }
    const int horizon = depth - 1;
    const SphereBoundReport spheres = sphere_profile_bounded(g, center, horizon);
    out.spheres_bounded = spheres.bounded;
    out.sphere_bound = spheres.k;
    out.ends = ends_estimate(g, center, kProbeRadius);
    if (!spheres.bounded) {
        out.kind = ShapeKind::Other;
        out.note = "sphere sizes grow: |S(" + std::to_string(spheres.witness_n) +
                   ")| = " + std::to_string(spheres.k);
        return out;
    }
    if (out.ends == 1) {
        out.kind = ShapeKind::LineN;
    } else if (out.ends == 2) {
        out.kind = ShapeKind::LineZ;
    } else {
        out.kind = ShapeKind::Other;
        out.note = "ends estimate " + std::to_string(out.ends);
    }
    return out;
}

/// A ray prefix of the requested length starting at v, or failure when the
/// window holds none. Any geodesic to a vertex at exact distance `length`
/// satisfies the ray condition.
inline std::optional<RayPrefix> find_ray(const GraphWindow& g, long long v, int length) {
    int vi = g.index_of(v);
    if (vi < 0) throw std::domain_error("find_ray: start outside window");
    for (long long p : g.points()) {
        if (g.distance_idx(vi, g.index_of(p)) == length) {
            RayPrefix ray;
            ray.vertices = geodesic(g, v, p).vertices;
            return ray;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Integer line window [-n, n]; stands for the bi-infinite line.
inline GraphWindow make_line(int n) {
    if (n < 1) throw std::invalid_argument("make_line: n >= 1");
    std::vector<std::pair<long long, long long>> edges;
    for (long long i = -n; i < n; ++i) edges.emplace_back(i, i + 1);
    return GraphWindow(edges, {-n, n});
}

/// One-sided ray window [0, n]; 0 is a genuine endpoint, only n is truncated.
inline GraphWindow make_ray(int n) {
    if (n < 1) throw std::invalid_argument("make_ray: n >= 1");
    std::vector<std::pair<long long, long long>> edges;
    for (long long i = 0; i < n; ++i) edges.emplace_back(i, i + 1);
    return GraphWindow(edges, {n});
}

inline long long tripod_vertex(int arm, int pos) {
    return pos == 0 ? 0 : static_cast<long long>(arm + 1) * 1000 + pos;
}

/// Three rays of length `arm` glued at a common center (vertex 0). The three
/// tips are the truncation boundary.
inline GraphWindow make_tripod(int arm) {
    if (arm < 1) throw std::invalid_argument("make_tripod: arm >= 1");
    if (arm > 998) throw std::invalid_argument("make_tripod: arm too long for vertex naming");
    std::vector<std::pair<long long, long long>> edges;
    for (int a = 0; a < 3; ++a)
        for (int j = 0; j < arm; ++j) edges.emplace_back(tripod_vertex(a, j), tripod_vertex(a, j + 1));
    return GraphWindow(edges, {tripod_vertex(0, arm), tripod_vertex(1, arm), tripod_vertex(2, arm)});
}

inline long long grid_vertex(long long x, long long y) { return x * 10000 + y; }

/// (2n+1) x (2n+1) square window of the integer grid; perimeter is boundary.
inline GraphWindow make_grid(int n) {
    if (n < 1) throw std::invalid_argument("make_grid: n >= 1");
    if (n > 999) throw std::invalid_argument("make_grid: n too large for vertex naming");
    std::vector<std::pair<long long, long long>> edges;
    std::vector<long long> boundary;
    for (long long x = -n; x <= n; ++x)
        for (long long y = -n; y <= n; ++y) {
            if (x < n) edges.emplace_back(grid_vertex(x, y), grid_vertex(x + 1, y));
            if (y < n) edges.emplace_back(grid_vertex(x, y), grid_vertex(x, y + 1));
            if (std::abs(x) == n || std::abs(y) == n) boundary.push_back(grid_vertex(x, y));
        }
    return GraphWindow(edges, boundary);
}

/// Complete graph on n vertices; a complete finite space (no boundary).
inline GraphWindow make_complete(int n) {
    if (n < 2) throw std::invalid_argument("make_complete: n >= 2");
    std::vector<std::pair<long long, long long>> edges;
    for (long long i = 0; i < n; ++i)
        for (long long j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return GraphWindow(edges);
}

// ---------------------------------------------------------------------------
// Subspace view (induced point set, ambient metric)
// ---------------------------------------------------------------------------

/// A coarse subspace of a graph window: a subset of the points carrying the
/// ambient path metric. Balls are ambient balls intersected with the subset.
class GraphSubspace {
  public:
    using point_type = long long;
    using scale_type = MetricScale;

    GraphSubspace(const GraphWindow& ambient, std::vector<long long> pts)
        : ambient_(&ambient), points_(std::move(pts)) {
        std::sort(points_.begin(), points_.end());
        points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
        if (points_.empty()) throw std::invalid_argument("GraphSubspace: empty point set");
        for (size_t i = 0; i < points_.size(); ++i) {
            if (!ambient.contains(points_[i]))
                throw std::invalid_argument("GraphSubspace: point outside ambient window");
            index_[points_[i]] = static_cast<int>(i);
        }
    }

    const GraphWindow& ambient() const { return *ambient_; }
    const std::vector<long long>& points() const { return points_; }
    bool contains(long long p) const { return index_.count(p) > 0; }
    int index_of(long long p) const {
        auto it = index_.find(p);
        return it == index_.end() ? -1 : it->second;
    }
    std::optional<int> distance(long long u, long long v) const { return ambient_->distance(u, v); }

    std::vector<long long> ball(long long p, MetricScale s) const {
        std::vector<long long> out;
        for (long long q : ambient_->ball(p, s))
            if (contains(q)) out.push_back(q);
        return out;
    }
    bool safe(long long p, MetricScale s) const { return ambient_->safe(p, s); }
    int radius_bound() const { return ambient_->radius_bound(); }

  private:
    const GraphWindow* ambient_;
    std::vector<long long> points_;
    std::map<long long, int> index_;
};

// ---------------------------------------------------------------------------
// Joining two rays and a geodesic into a line chart
// ---------------------------------------------------------------------------

/// The monotone chart of a two-ray configuration: C-ray to the negatives,
/// the connecting geodesic T (from a_0 to c_0, length k) to [0, k], A-ray to
/// the positives. Seam-consistent: c_0 = t_k maps to 0 and a_0 = t_0 maps
/// to k under both rules.
struct LineChart {
    std::map<long long, long long> to_z;
    long long k = 0;  // length of T
    std::vector<long long> domain;

    long long operator()(long long v) const { return to_z.at(v); }
};

struct LineChartReport {
    bool bijective = false;
    bool lipschitz = false;  // |f(x)-f(y)| <= d(x,y) for all domain pairs
    std::optional<std::pair<long long, long long>> lipschitz_witness;
    // all A-to-C geodesics meet H, checked pairwise via deleted-H distances
    bool geodesics_meet_h = false;
    long long p = 0;  // max over H of d(a_0, .) and d(c_0, .)
    // for m, n > p: d(a_m, c_n) >= m + n - 2p, i.e. the chart expands
    // A-to-C pairs by at most the additive constant k + 2p
    bool far_bound = false;
    std::optional<std::pair<long long, long long>> far_witness;
};

inline LineChart rays_to_line_map(const GraphWindow& g, const RayPrefix& a_ray,
                                  const RayPrefix& c_ray, const GeodesicPath& t_path) {
    const auto& A = a_ray.vertices;
    const auto& C = c_ray.vertices;
    const auto& T = t_path.vertices;
    if (A.empty() || C.empty() || T.empty())
        throw std::invalid_argument("rays_to_line_map: empty piece");
    if (T.front() != A.front())
        throw std::invalid_argument("rays_to_line_map: T must start at a_0");
    if (T.back() != C.front())
        throw std::invalid_argument("rays_to_line_map: T must end at c_0");
    if (!validate_ray(g, A) || !validate_ray(g, C))
        throw std::invalid_argument("rays_to_line_map: ray condition violated");
    if (!validate_geodesic(g, T))
        throw std::invalid_argument("rays_to_line_map: T is not a geodesic");
    std::vector<long long> a_sorted(A.begin(), A.end()), c_sorted(C.begin(), C.end());
    std::sort(a_sorted.begin(), a_sorted.end());
    std::sort(c_sorted.begin(), c_sorted.end());
    for (long long v : a_sorted)
        if (std::binary_search(c_sorted.begin(), c_sorted.end(), v))
            throw std::invalid_argument("rays_to_line_map: rays intersect");
    for (size_t i = 0; i < T.size(); ++i) {
        const bool in_a = std::binary_search(a_sorted.begin(), a_sorted.end(), T[i]);
        const bool in_c = std::binary_search(c_sorted.begin(), c_sorted.end(), T[i]);
        if (in_a && T[i] != A.front())
            throw std::invalid_argument("rays_to_line_map: T meets A beyond a_0");
        if (in_c && T[i] != C.front())
            throw std::invalid_argument("rays_to_line_map: T meets C beyond c_0");
    }

    LineChart chart;
    chart.k = static_cast<long long>(T.size()) - 1;
    for (size_t i = 0; i < C.size(); ++i) chart.to_z[C[i]] = -static_cast<long long>(i);
    for (size_t i = 0; i < T.size(); ++i)
        chart.to_z[T[i]] = chart.k - static_cast<long long>(i);
    for (size_t i = 0; i < A.size(); ++i)
        chart.to_z[A[i]] = chart.k + static_cast<long long>(i);
    for (const auto& [v, z] : chart.to_z) chart.domain.push_back(v);
    return chart;
}

/// Companion distortion check for a built chart: bijectivity, the pointwise
/// Lipschitz bound, the H / p data and the far-pair distance bound.
inline LineChartReport check_line_chart(const GraphWindow& g, const LineChart& chart,
                                        const RayPrefix& a_ray, const RayPrefix& c_ray,
                                        const std::vector<long long>& h_set) {
    LineChartReport rep;

    std::vector<long long> images;
    for (const auto& [v, z] : chart.to_z) images.push_back(z);
    std::sort(images.begin(), images.end());
    rep.bijective = std::adjacent_find(images.begin(), images.end()) == images.end();

    rep.lipschitz = true;
    for (size_t i = 0; i < chart.domain.size() && rep.lipschitz; ++i)
        for (size_t j = i + 1; j < chart.domain.size(); ++j) {
            long long x = chart.domain[i], y = chart.domain[j];
            auto d = g.distance(x, y);
            if (!d || std::llabs(chart.to_z.at(x) - chart.to_z.at(y)) > *d) {
                rep.lipschitz = false;
                rep.lipschitz_witness = {x, y};
                break;
            }
        }

    // Every A-to-C geodesic meets H  <=>  deleting H strictly lengthens (or
    // disconnects) every A-to-C connection.
    std::vector<long long> kept;
    for (long long v : g.points())
        if (std::find(h_set.begin(), h_set.end(), v) == h_set.end()) kept.push_back(v);
    std::map<long long, std::vector<long long>> adj_kept;
    for (long long v : kept)
        for (long long w : g.neighbors(v))
            if (std::find(h_set.begin(), h_set.end(), w) == h_set.end())
                adj_kept[v].push_back(w);
    auto deleted_dist = [&](long long s, long long t) -> std::optional<int> {
        std::map<long long, int> d{{s, 0}};
        std::vector<long long> q{s};
        for (size_t head = 0; head < q.size(); ++head) {
            long long u = q[head];
            if (u == t) return d[u];
            for (long long w : adj_kept[u])
                if (!d.count(w)) {
                    d[w] = d[u] + 1;
                    q.push_back(w);
                }
        }
        return std::nullopt;
    };
    rep.geodesics_meet_h = true;
    for (long long a : a_ray.vertices) {
        for (long long c : c_ray.vertices) {
            auto direct = g.distance(a, c);
            auto detour = deleted_dist(a, c);
            if (detour && direct && *detour <= *direct) {
                rep.geodesics_meet_h = false;
                break;
            }
        }
        if (!rep.geodesics_meet_h) break;
    }

    for (long long h : h_set) {
        auto da = g.distance(a_ray.vertices.front(), h);
        auto dc = g.distance(c_ray.vertices.front(), h);
        if (da) rep.p = std::max(rep.p, static_cast<long long>(*da));
        if (dc) rep.p = std::max(rep.p, static_cast<long long>(*dc));
    }

    rep.far_bound = true;
    for (size_t m = static_cast<size_t>(rep.p) + 1; m < a_ray.vertices.size(); ++m) {
        for (size_t n = static_cast<size_t>(rep.p) + 1; n < c_ray.vertices.size(); ++n) {
            auto d = g.distance(a_ray.vertices[m], c_ray.vertices[n]);
            if (!d) continue;
            const long long lower = static_cast<long long>(m) + static_cast<long long>(n) - 2 * rep.p;
            const long long fgap = std::llabs(chart.to_z.at(a_ray.vertices[m]) -
                                              chart.to_z.at(c_ray.vertices[n]));
            if (*d < lower || fgap > *d + chart.k + 2 * rep.p) {
                rep.far_bound = false;
                rep.far_witness = {a_ray.vertices[m], c_ray.vertices[n]};
                break;
            }
        }
        if (!rep.far_bound) break;
    }
    return rep;
}

}  // namespace coarse
