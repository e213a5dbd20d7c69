// refute.hpp -- impossibility arguments as constraint propagation over the
// pair orientation induced by a hypothetical 2-selector of modulus r.
//
// Three sound propagation rules drive everything:
//   geodesic:  one oriented pair at index gap r orients every pair at gap
//              >= r along a geodesic path;
//   far-set:   a connected set U outside B(v, r) relates to v uniformly;
//   transport: an orientation (u, v) with d(u, v) > d(v, v') + r carries
//              over to (u, v').
// A refutation is a deduction log ending in a pair forced both ways; the
// log replays against independent BFS distances.

#pragma once

#include "coarse/core.hpp"
#include "coarse/graph.hpp"

#include <sstream>

namespace coarse {

enum class Rule { Assume, Geodesic, FarSet, Transport };

inline const char* to_string(Rule r) {
    switch (r) {
        case Rule::Assume: return "assume";
        case Rule::Geodesic: return "geodesic";
        case Rule::FarSet: return "far-set";
        default: return "transport";
    }
}

/// One derived orientation: `first` precedes `second` (the pair selector
/// would pick `first`). Carries everything replay needs to re-check the
/// rule's side conditions from scratch.
struct Deduction {
    Rule rule = Rule::Assume;
    long long first = 0, second = 0;
    std::vector<int> premises;  // step indices this deduction cites

    std::vector<long long> path;   // Geodesic: the path; seed pair is (path[0], path[r])
    long long far_center = 0;      // FarSet: the vertex v
    std::vector<long long> far_set;  // FarSet: the connected set U
    long long tr_u = 0, tr_v = 0, tr_vp = 0;  // Transport: the triple (u, v, v')
    std::string note;
};

struct ConflictRecord {
    Deduction attempted;   // valid by its rule, concludes first < second
    int existing_step = -1;  // step that already forced second < first
};

struct Certificate {
    std::string label;   // case identifier, e.g. "signs=+,-,+"
    std::string target;  // what was refuted, e.g. "tripod arm=12"
    int modulus = 0;
    std::vector<Deduction> steps;
    std::optional<ConflictRecord> conflict;

    bool contradiction() const { return conflict.has_value(); }
};

// ---------------------------------------------------------------------------
// Orientation store
// ---------------------------------------------------------------------------

class OrientationStore {
  public:
    enum class AddResult { Added, Known, Conflict };

    explicit OrientationStore(int modulus) : modulus_(modulus) {
        if (modulus < 1) throw std::invalid_argument("OrientationStore: modulus >= 1");
    }

    int modulus() const { return modulus_; }
    const std::vector<Deduction>& log() const { return log_; }

    /// Does `a` precede `b`? nullopt when the pair is still unknown.
    std::optional<bool> lookup(long long a, long long b) const {
        auto it = facts_.find(key(a, b));
        if (it == facts_.end()) return std::nullopt;
        return (a < b) == it->second.first;
    }
    int fact_step(long long a, long long b) const {
        auto it = facts_.find(key(a, b));
        return it == facts_.end() ? -1 : it->second.second;
    }

    AddResult try_add(Deduction d) {
        if (d.first == d.second) throw std::invalid_argument("OrientationStore: reflexive pair");
        const auto k = key(d.first, d.second);
        const bool lo_first = d.first < d.second;
        auto it = facts_.find(k);
        if (it != facts_.end()) {
            if (it->second.first == lo_first) return AddResult::Known;
            conflict_ = ConflictRecord{std::move(d), it->second.second};
            return AddResult::Conflict;
        }
        facts_[k] = {lo_first, static_cast<int>(log_.size())};
        log_.push_back(std::move(d));
        return AddResult::Added;
    }

    const std::optional<ConflictRecord>& conflict() const { return conflict_; }

  private:
    static std::pair<long long, long long> key(long long a, long long b) {
        return {std::min(a, b), std::max(a, b)};
    }

    int modulus_;
    std::map<std::pair<long long, long long>, std::pair<bool, int>> facts_;  // lo-first?, step
    std::vector<Deduction> log_;
    std::optional<ConflictRecord> conflict_;
};

// ---------------------------------------------------------------------------
// Propagation rules
// ---------------------------------------------------------------------------

enum class RuleStatus { Applied, NoSeed, Inapplicable, Conflict };

struct RuleOutcome {
    RuleStatus status = RuleStatus::Applied;
    int added = 0;
    std::string reason;
};

/// Orient every index pair at gap >= r along a geodesic from the seed pair
/// (path[0], path[r]).
inline RuleOutcome propagate_geodesic(OrientationStore& store, const GraphWindow& g,
                                      const std::vector<long long>& path) {
    const int r = store.modulus();
    RuleOutcome out;
    if (static_cast<int>(path.size()) - 1 < r) {
        out.status = RuleStatus::Inapplicable;
        out.reason = "path shorter than modulus";
        return out;
    }
    if (!validate_geodesic(g, path)) {
        out.status = RuleStatus::Inapplicable;
        out.reason = "not a geodesic";
        return out;
    }
    const auto seed = store.lookup(path[0], path[static_cast<size_t>(r)]);
    if (!seed) {
        out.status = RuleStatus::NoSeed;
        return out;
    }
    const int seed_step = store.fact_step(path[0], path[static_cast<size_t>(r)]);
    const bool forward = *seed;  // path[0] precedes path[r]
    for (size_t i = 0; i < path.size(); ++i) {
        for (size_t j = i + static_cast<size_t>(r); j < path.size(); ++j) {
            Deduction d;
            d.rule = Rule::Geodesic;
            d.first = forward ? path[i] : path[j];
            d.second = forward ? path[j] : path[i];
            d.premises = {seed_step};
            d.path = path;
            switch (store.try_add(std::move(d))) {
                case OrientationStore::AddResult::Added: ++out.added; break;
                case OrientationStore::AddResult::Known: break;
                case OrientationStore::AddResult::Conflict:
                    out.status = RuleStatus::Conflict;
                    return out;
            }
        }
    }
    return out;
}

/// Uniformize v against a connected set U outside B(v, r), seeded by any
/// already-known (v, u0) orientation.
inline RuleOutcome propagate_far_set(OrientationStore& store, const GraphWindow& g, long long v,
                                     const std::vector<long long>& u_set) {
    const int r = store.modulus();
    RuleOutcome out;
    if (u_set.empty()) {
        out.status = RuleStatus::Inapplicable;
        out.reason = "empty set";
        return out;
    }
    for (long long u : u_set) {
        auto d = g.distance(v, u);
        if (!d || *d <= r) {
            out.status = RuleStatus::Inapplicable;
            out.reason = "set meets the ball B(v, r)";
            return out;
        }
    }
    // connectivity of the induced subgraph on U
    std::vector<long long> sorted(u_set.begin(), u_set.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<long long> stack{u_set.front()};
    std::vector<long long> seen{u_set.front()};
    while (!stack.empty()) {
        long long x = stack.back();
        stack.pop_back();
        for (long long y : g.neighbors(x)) {
            if (!std::binary_search(sorted.begin(), sorted.end(), y)) continue;
            if (std::find(seen.begin(), seen.end(), y) != seen.end()) continue;
            seen.push_back(y);
            stack.push_back(y);
        }
    }
    if (seen.size() != sorted.size()) {
        out.status = RuleStatus::Inapplicable;
        out.reason = "set not connected";
        return out;
    }

    long long u0 = 0;
    std::optional<bool> seed;
    for (long long u : u_set) {
        seed = store.lookup(v, u);
        if (seed) {
            u0 = u;
            break;
        }
    }
    if (!seed) {
        out.status = RuleStatus::NoSeed;
        return out;
    }
    const int seed_step = store.fact_step(v, u0);
    for (long long u : u_set) {
        if (u == u0) continue;
        Deduction d;
        d.rule = Rule::FarSet;
        d.first = *seed ? v : u;
        d.second = *seed ? u : v;
        d.premises = {seed_step};
        d.far_center = v;
        d.far_set = u_set;
        switch (store.try_add(std::move(d))) {
            case OrientationStore::AddResult::Added: ++out.added; break;
            case OrientationStore::AddResult::Known: break;
            case OrientationStore::AddResult::Conflict:
                out.status = RuleStatus::Conflict;
                return out;
        }
    }
    return out;
}

/// Transport the orientation of (u, v) to (u, v') when d(u, v) > d(v, v') + r.
inline RuleOutcome propagate_transport(OrientationStore& store, const GraphWindow& g, long long u,
                                       long long v, long long vp) {
    const int r = store.modulus();
    RuleOutcome out;
    if (v == vp || u == vp) {
        out.status = RuleStatus::Inapplicable;
        out.reason = "degenerate triple";
        return out;
    }
    const auto n = g.distance(v, vp);
    const auto duv = g.distance(u, v);
    if (!n || !duv || *duv <= *n + r) {
        out.status = RuleStatus::Inapplicable;
        out.reason = "distance hypothesis fails";
        return out;
    }
    const auto seed = store.lookup(u, v);
    if (!seed) {
        out.status = RuleStatus::NoSeed;
        return out;
    }
    Deduction d;
    d.rule = Rule::Transport;
    d.first = *seed ? u : vp;
    d.second = *seed ? vp : u;
    d.premises = {store.fact_step(u, v)};
    d.tr_u = u;
    d.tr_v = v;
    d.tr_vp = vp;
    switch (store.try_add(std::move(d))) {
        case OrientationStore::AddResult::Added: ++out.added; break;
        case OrientationStore::AddResult::Known: break;
        case OrientationStore::AddResult::Conflict: out.status = RuleStatus::Conflict; break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Proximity bound for vertices near a long geodesic
// ---------------------------------------------------------------------------

/// For a modulus-r pair selector to exist, a vertex whose nearest point on a
/// geodesic sits deeper than 2r+1 from both ends must lie within r of the
/// path. The predicate only *checks* the statement on concrete data; a
/// witness where it fails (a tripod probe) is an obstruction.
struct ProximityBound {
    bool applicable = false;  // depth hypotheses hold
    bool holds = false;       // conclusion d(v, a_k) <= r
    int nearest_index = -1;
    int distance = -1;
};

inline ProximityBound geodesic_proximity_bound(const GraphWindow& g,
                                               const std::vector<long long>& path, long long v,
                                               int r) {
    if (!validate_geodesic(g, path)) throw std::invalid_argument("not a geodesic");
    ProximityBound out;
    for (size_t i = 0; i < path.size(); ++i) {
        const auto d = g.distance(v, path[i]);
        if (!d) continue;
        if (out.distance < 0 || *d < out.distance) {
            out.distance = *d;
            out.nearest_index = static_cast<int>(i);
        }
    }
    const int m = static_cast<int>(path.size()) - 1;
    out.applicable = out.nearest_index > 2 * r + 1 && m - out.nearest_index > 2 * r + 1;
    out.holds = out.distance >= 0 && out.distance <= r;
    return out;
}

// ---------------------------------------------------------------------------
// Tripod refutation
// ---------------------------------------------------------------------------

struct TripodRefutation {
    enum class Status { Refuted, Inconclusive } status = Status::Inconclusive;
    int r = 0;
    int arm = 0;
    std::string reason;
    std::vector<Certificate> cases;  // one per seed-sign assignment
};

/// Margin under which every rule instance in the schedule can fire.
inline int tripod_min_arm(int r) { return 6 * r + 6; }

/// Case-split the seed orientations of the three tip-to-tip geodesics and
/// propagate until each case forces some pair both ways.
inline TripodRefutation tripod_refute(int r, int arm) {
    if (r < 1) throw std::invalid_argument("tripod_refute: r >= 1");
    TripodRefutation result;
    result.r = r;
    result.arm = arm;
    if (arm < tripod_min_arm(r)) {
        result.status = TripodRefutation::Status::Inconclusive;
        result.reason = "arm shorter than sufficiency margin " + std::to_string(tripod_min_arm(r));
        return result;
    }
    const GraphWindow g = make_tripod(arm);
    const std::array<long long, 3> tips = {tripod_vertex(0, arm), tripod_vertex(1, arm),
                                           tripod_vertex(2, arm)};
    const std::array<std::vector<long long>, 3> paths = {
        geodesic(g, tips[0], tips[1]).vertices,
        geodesic(g, tips[0], tips[2]).vertices,
        geodesic(g, tips[1], tips[2]).vertices,
    };
    // probe vertex on each arm just outside the modulus ball of the center
    const std::array<long long, 3> probes = {tripod_vertex(0, r + 1), tripod_vertex(1, r + 1),
                                             tripod_vertex(2, r + 1)};
    // arm a is probed against the geodesic joining the other two tips
    const std::array<int, 3> opposite_path = {2, 1, 0};

    bool all_contradict = true;
    for (int mask = 0; mask < 8; ++mask) {
        std::array<bool, 3> sign = {(mask & 1) == 0, (mask & 2) == 0, (mask & 4) == 0};
        std::string label = "signs=";
        for (int p = 0; p < 3; ++p) label += sign[static_cast<size_t>(p)] ? '+' : '-';

        OrientationStore store(r);
        bool done = false;
        for (int p = 0; p < 3 && !done; ++p) {
            const auto& path = paths[static_cast<size_t>(p)];
            Deduction seed;
            seed.rule = Rule::Assume;
            seed.first = sign[static_cast<size_t>(p)] ? path[0] : path[static_cast<size_t>(r)];
            seed.second = sign[static_cast<size_t>(p)] ? path[static_cast<size_t>(r)] : path[0];
            seed.note = label;
            if (store.try_add(std::move(seed)) == OrientationStore::AddResult::Conflict) done = true;
        }
        // Schedule: orient the two geodesics out of tip 0, transport their
        // center facts to the probe vertices, uniformize each probe against
        // the opposite geodesic, then bring in the third geodesic; sweep to
        // fixpoint. The typical conflict pins a probe vertex against a far
        // tip: uniformization and transport force it both ways.
        while (!done) {
            int added = 0;
            for (int p = 0; p < 2 && !done; ++p) {
                auto out = propagate_geodesic(store, g, paths[static_cast<size_t>(p)]);
                added += out.added;
                done = out.status == RuleStatus::Conflict;
            }
            for (int a = 0; a < 3 && !done; ++a) {
                for (int other = 0; other < 3 && !done; ++other) {
                    if (other == a) continue;
                    auto out = propagate_transport(store, g, tips[static_cast<size_t>(other)], 0,
                                                   probes[static_cast<size_t>(a)]);
                    added += out.added;
                    done = out.status == RuleStatus::Conflict;
                }
            }
            for (int a = 0; a < 3 && !done; ++a) {
                auto out = propagate_far_set(store, g, probes[static_cast<size_t>(a)],
                                             paths[static_cast<size_t>(opposite_path[static_cast<size_t>(a)])]);
                added += out.added;
                done = out.status == RuleStatus::Conflict;
            }
            if (!done) {
                auto out = propagate_geodesic(store, g, paths[2]);
                added += out.added;
                done = out.status == RuleStatus::Conflict;
            }
            if (!done && added == 0) break;  // fixpoint without contradiction
        }

        Certificate cert;
        cert.label = label;
        cert.target = "tripod arm=" + std::to_string(arm);
        cert.modulus = r;
        cert.steps = store.log();
        cert.conflict = store.conflict();
        all_contradict = all_contradict && cert.contradiction();
        result.cases.push_back(std::move(cert));
    }
    result.status = all_contradict ? TripodRefutation::Status::Refuted
                                   : TripodRefutation::Status::Inconclusive;
    if (!all_contradict) result.reason = "some seed case reached a fixpoint without contradiction";
    return result;
}

// ---------------------------------------------------------------------------
// Replay
// ---------------------------------------------------------------------------

struct ReplayResult {
    bool ok = false;
    int failed_step = -1;  // -1: conflict record or global failure
    std::string reason;
};

namespace detail {
inline bool replay_one(const GraphWindow& g, int r,
                       const std::map<std::pair<long long, long long>, std::pair<bool, int>>& facts,
                       const Deduction& d, std::string& why) {
    auto known = [&](long long a, long long b) -> std::optional<bool> {
        auto it = facts.find({std::min(a, b), std::max(a, b)});
        if (it == facts.end()) return std::nullopt;
        return (a < b) == it->second.first;
    };
    switch (d.rule) {
        case Rule::Assume:
            return true;  // case hypothesis
        case Rule::Geodesic: {
            if (static_cast<int>(d.path.size()) - 1 < r) { why = "path shorter than modulus"; return false; }
            if (!validate_geodesic(g, d.path)) { why = "path is not a geodesic"; return false; }
            auto seed = known(d.path[0], d.path[static_cast<size_t>(r)]);
            if (!seed) { why = "seed pair not established"; return false; }
            long long from = *seed ? d.first : d.second;
            long long to = *seed ? d.second : d.first;
            auto i = std::find(d.path.begin(), d.path.end(), from);
            auto j = std::find(d.path.begin(), d.path.end(), to);
            if (i == d.path.end() || j == d.path.end()) { why = "pair not on path"; return false; }
            if (std::distance(i, j) < r) { why = "index gap below modulus"; return false; }
            return true;
        }
        case Rule::FarSet: {
            if (d.far_set.empty()) { why = "empty far set"; return false; }
            for (long long u : d.far_set) {
                auto dist = g.distance(d.far_center, u);
                if (!dist || *dist <= r) { why = "far set meets B(v, r)"; return false; }
            }
            std::vector<long long> sorted(d.far_set.begin(), d.far_set.end());
            std::sort(sorted.begin(), sorted.end());
            std::vector<long long> stack{d.far_set.front()}, seen{d.far_set.front()};
            while (!stack.empty()) {
                long long x = stack.back();
                stack.pop_back();
                for (long long y : g.neighbors(x)) {
                    if (!std::binary_search(sorted.begin(), sorted.end(), y)) continue;
                    if (std::find(seen.begin(), seen.end(), y) != seen.end()) continue;
                    seen.push_back(y);
                    stack.push_back(y);
                }
            }
            if (seen.size() != sorted.size()) { why = "far set not connected"; return false; }
            const long long u = d.first == d.far_center ? d.second : d.first;
            if (!std::binary_search(sorted.begin(), sorted.end(), u)) { why = "pair not in far set"; return false; }
            bool v_first = d.first == d.far_center;
            bool seed_found = false;
            for (long long cand : d.far_set) {
                auto s = known(d.far_center, cand);
                if (s && *s == v_first) { seed_found = true; break; }
            }
            if (!seed_found) { why = "no matching seed orientation in far set"; return false; }
            return true;
        }
        case Rule::Transport: {
            auto n = g.distance(d.tr_v, d.tr_vp);
            auto duv = g.distance(d.tr_u, d.tr_v);
            if (!n || !duv || *duv <= *n + r) { why = "distance hypothesis fails"; return false; }
            auto seed = known(d.tr_u, d.tr_v);
            if (!seed) { why = "premise pair not established"; return false; }
            const bool u_first = *seed;
            if (u_first && !(d.first == d.tr_u && d.second == d.tr_vp)) { why = "conclusion mismatch"; return false; }
            if (!u_first && !(d.first == d.tr_vp && d.second == d.tr_u)) { why = "conclusion mismatch"; return false; }
            return true;
        }
    }
    why = "unknown rule";
    return false;
}
}  // namespace detail

/// Re-derive every step of a certificate from scratch: side conditions are
/// re-checked against the graph's own BFS metric and premises against the
/// replayed fact set; the conflict must pin a pair forced both ways.
inline ReplayResult replay_certificate(const Certificate& cert, const GraphWindow& g) {
    ReplayResult res;
    std::map<std::pair<long long, long long>, std::pair<bool, int>> facts;
    std::string why;
    for (size_t i = 0; i < cert.steps.size(); ++i) {
        const Deduction& d = cert.steps[i];
        if (!detail::replay_one(g, cert.modulus, facts, d, why)) {
            res.failed_step = static_cast<int>(i);
            res.reason = why;
            return res;
        }
        const auto key = std::make_pair(std::min(d.first, d.second), std::max(d.first, d.second));
        const bool lo_first = d.first < d.second;
        auto it = facts.find(key);
        if (it != facts.end() && it->second.first != lo_first) {
            res.failed_step = static_cast<int>(i);
            res.reason = "log contains an unflagged contradiction";
            return res;
        }
        facts.emplace(key, std::make_pair(lo_first, static_cast<int>(i)));
    }
    if (cert.conflict) {
        const Deduction& d = cert.conflict->attempted;
        if (!detail::replay_one(g, cert.modulus, facts, d, why)) {
            res.reason = "conflict step invalid: " + why;
            return res;
        }
        const auto key = std::make_pair(std::min(d.first, d.second), std::max(d.first, d.second));
        auto it = facts.find(key);
        if (it == facts.end() || it->second.first == (d.first < d.second)) {
            res.reason = "claimed conflict does not contradict an established fact";
            return res;
        }
        if (it->second.second != cert.conflict->existing_step) {
            res.reason = "conflict cites the wrong establishing step";
            return res;
        }
    }
    res.ok = true;
    return res;
}

// ---------------------------------------------------------------------------
// Global-selector refutation on the integer line
// ---------------------------------------------------------------------------

struct ZChainStep {
    long long added_point = 0;           // the set is A' u {added_point}
    std::vector<long long> set_points;   // window truncation of the set
    std::vector<long long> candidates;   // feasible selector values after the step
};

struct ZRefutation {
    int n = 0;
    long long anchor = 0;  // hypothesized selector value on A (0 by translation)
    long long window_lo = 0, window_hi = 0;
    std::vector<long long> base_set;    // truncation of A = (n+1)Z
    std::vector<long long> aprime_set;  // truncation of A' = A minus {anchor}
    std::vector<ZChainStep> left_chain, right_chain;
    std::vector<long long> left_final, right_final;  // feasible f(A') per chain
    bool contradiction = false;
};

namespace detail {
inline std::vector<long long> constrain(const std::vector<long long>& set_pts,
                                        const std::vector<long long>& prev_candidates, int n) {
    std::vector<long long> out;
    for (long long x : set_pts)
        for (long long c : prev_candidates)
            if (std::llabs(x - c) <= n) {
                out.push_back(x);
                break;
            }
    return out;
}
}  // namespace detail

/// Walk the hypothesized selector along d_H <= 1 perturbations of A = (n+1)Z:
/// the two chains force f(A') to -(n+1) and +(n+1) simultaneously.
inline ZRefutation z_global_refute(int n) {
    if (n < 1) throw std::invalid_argument("z_global_refute: n >= 1");
    ZRefutation res;
    res.n = n;
    res.anchor = 0;
    const long long m = n + 1;
    res.window_lo = -3 * m;
    res.window_hi = 3 * m;
    for (long long x = res.window_lo; x <= res.window_hi; x += m) res.base_set.push_back(x);
    for (long long x : res.base_set)
        if (x != res.anchor) res.aprime_set.push_back(x);

    auto run_chain = [&](int dir) {
        std::vector<ZChainStep> chain;
        std::vector<long long> cand{res.anchor};
        for (int j = 1; j <= n; ++j) {
            ZChainStep step;
            step.added_point = res.anchor + dir * j;
            step.set_points = res.aprime_set;
            step.set_points.push_back(step.added_point);
            std::sort(step.set_points.begin(), step.set_points.end());
            step.candidates = detail::constrain(step.set_points, cand, n);
            cand = step.candidates;
            chain.push_back(std::move(step));
        }
        std::vector<long long> final_cand = detail::constrain(res.aprime_set, cand, n);
        return std::make_pair(std::move(chain), std::move(final_cand));
    };
    std::tie(res.left_chain, res.left_final) = run_chain(-1);
    std::tie(res.right_chain, res.right_final) = run_chain(+1);

    res.contradiction = res.left_final.size() == 1 && res.right_final.size() == 1 &&
                        res.left_final[0] != res.right_final[0];
    return res;
}

/// Independent checker: every adjacent pair of truncations is at Hausdorff
/// distance exactly 1, candidate sets re-derive from the modulus constraint,
/// and the two final singletons disagree.
inline ReplayResult replay_z_refutation(const ZRefutation& z) {
    ReplayResult res;
    const int span = static_cast<int>(z.window_hi);
    const GraphWindow line = make_line(span);
    auto hp = [](const std::vector<long long>& pts) { return HyperPoint<long long>(pts); };

    auto check_chain = [&](const std::vector<ZChainStep>& chain,
                           const std::vector<long long>& final_cand, int dir,
                           std::string side) -> bool {
        std::vector<long long> prev_set = z.base_set;
        std::vector<long long> cand{z.anchor};
        for (size_t j = 0; j < chain.size(); ++j) {
            const auto& step = chain[j];
            if (step.added_point != z.anchor + dir * static_cast<long long>(j + 1)) {
                res.reason = side + " chain step " + std::to_string(j) + ": wrong perturbation point";
                return false;
            }
            if (hausdorff_distance(line, hp(prev_set), hp(step.set_points)) != 1) {
                res.failed_step = static_cast<int>(j);
                res.reason = side + " chain step " + std::to_string(j) + ": d_H side condition fails";
                return false;
            }
            const auto expect = detail::constrain(step.set_points, cand, z.n);
            if (expect != step.candidates) {
                res.failed_step = static_cast<int>(j);
                res.reason = side + " chain step " + std::to_string(j) + ": candidate set mismatch";
                return false;
            }
            for (long long c : step.candidates) {
                if (std::find(step.set_points.begin(), step.set_points.end(), c) ==
                    step.set_points.end()) {
                    res.reason = side + " chain: candidate escapes the set";
                    return false;
                }
            }
            prev_set = step.set_points;
            cand = step.candidates;
        }
        if (hausdorff_distance(line, hp(prev_set), hp(z.aprime_set)) != 1) {
            res.reason = side + " chain: final d_H side condition fails";
            return false;
        }
        if (detail::constrain(z.aprime_set, cand, z.n) != final_cand) {
            res.reason = side + " chain: final candidate set mismatch";
            return false;
        }
        return true;
    };

    if (!check_chain(z.left_chain, z.left_final, -1, "left")) return res;
    if (!check_chain(z.right_chain, z.right_final, +1, "right")) return res;
    if (!(z.left_final.size() == 1 && z.right_final.size() == 1 &&
          z.left_final[0] != z.right_final[0])) {
        res.reason = "final candidate sets do not contradict";
        return res;
    }
    res.ok = true;
    return res;
}

// ---------------------------------------------------------------------------
// Text rendering (diffable)
// ---------------------------------------------------------------------------

inline std::string render_deduction(const Deduction& d, int step) {
    std::ostringstream os;
    os << step << "  " << to_string(d.rule) << "  (" << d.first << "," << d.second << "): "
       << d.first << "<" << d.second;
    if (!d.premises.empty()) {
        os << "  from";
        for (int p : d.premises) os << " " << p;
    }
    if (d.rule == Rule::Geodesic && !d.path.empty())
        os << "  path " << d.path.front() << ".." << d.path.back();
    if (d.rule == Rule::FarSet) os << "  v=" << d.far_center << " |U|=" << d.far_set.size();
    if (d.rule == Rule::Transport)
        os << "  u=" << d.tr_u << " v=" << d.tr_v << " v'=" << d.tr_vp;
    if (!d.note.empty()) os << "  # " << d.note;
    return os.str();
}

inline std::string render_certificate(const Certificate& cert) {
    std::ostringstream os;
    os << "case " << cert.label << "  target " << cert.target << "  modulus " << cert.modulus
       << "\n";
    for (size_t i = 0; i < cert.steps.size(); ++i)
        os << "  " << render_deduction(cert.steps[i], static_cast<int>(i)) << "\n";
    if (cert.conflict) {
        os << "  contradiction: " << render_deduction(cert.conflict->attempted, -1)
           << "  against step " << cert.conflict->existing_step << "\n";
    } else {
        os << "  no contradiction\n";
    }
    return os.str();
}

inline std::string render_z_refutation(const ZRefutation& z) {
    std::ostringstream os;
    auto join = [](const std::vector<long long>& v) {
        std::ostringstream s;
        for (size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
        return s.str();
    };
    os << "target Z global selector  modulus " << z.n << "  window [" << z.window_lo << ","
       << z.window_hi << "]\n";
    os << "  base A = {" << join(z.base_set) << "}  anchor f(A)=" << z.anchor << "\n";
    auto render_chain = [&](const std::vector<ZChainStep>& chain,
                            const std::vector<long long>& final_cand, const char* side) {
        for (size_t j = 0; j < chain.size(); ++j)
            os << "  " << side << " step " << j + 1 << "  add " << chain[j].added_point
               << "  candidates {" << join(chain[j].candidates) << "}\n";
        os << "  " << side << " final f(A') in {" << join(final_cand) << "}\n";
    };
    render_chain(z.left_chain, z.left_final, "left ");
    render_chain(z.right_chain, z.right_final, "right");
    os << (z.contradiction ? "  contradiction: f(A') forced both ways\n"
                           : "  no contradiction\n");
    return os.str();
}

}  // namespace coarse
