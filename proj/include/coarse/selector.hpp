// selector.hpp -- selector constructions, the induced pair orientation, and
// the order/entourage compatibility checkers.

#pragma once

#include "coarse/core.hpp"
#include "coarse/graph.hpp"
#include "coarse/group.hpp"

namespace coarse {

// ---------------------------------------------------------------------------
// Selectors
// ---------------------------------------------------------------------------

/// f(A) = max A on integer hyperpoints.
inline long long max_selector(const HyperPoint<long long>& a) { return a.elems.back(); }

inline CoarseMap<HyperPoint<long long>, long long> max_selector_map() {
    return {"int hyperpoints", "int", [](const HyperPoint<long long>& a) { return max_selector(a); }};
}

/// f(A) = the element whose tower encoding is minimal in the well-order.
template <CosetTowerLike T>
typename T::element_type well_order_selector(const T& t, const HyperPoint<typename T::element_type>& a) {
    const auto* best = &a.elems.front();
    std::vector<int> best_enc = tower_encode(t, *best);
    for (size_t i = 1; i < a.elems.size(); ++i) {
        std::vector<int> enc = tower_encode(t, a.elems[i]);
        if (well_order_compare(enc, best_enc) < 0) {
            best = &a.elems[i];
            best_enc = std::move(enc);
        }
    }
    return *best;
}

template <CosetTowerLike T>
CoarseMap<HyperPoint<typename T::element_type>, typename T::element_type> well_order_selector_map(
    const T& t) {
    using E = typename T::element_type;
    return {"tower hyperpoints", t.describe(),
            [t](const HyperPoint<E>& a) { return well_order_selector(t, a); }};
}

// ---------------------------------------------------------------------------
// Linear orders on windows
// ---------------------------------------------------------------------------

/// A total order on the window, stored as a rank permutation.
template <class P>
class LinearOrder {
  public:
    LinearOrder(std::vector<P> by_rank, std::string provenance)
        : by_rank_(std::move(by_rank)), provenance_(std::move(provenance)) {
        for (size_t i = 0; i < by_rank_.size(); ++i) {
            if (rank_.count(by_rank_[i]))
                throw std::invalid_argument("LinearOrder: duplicate point");
            rank_[by_rank_[i]] = static_cast<int>(i);
        }
    }

    int rank(const P& p) const {
        auto it = rank_.find(p);
        if (it == rank_.end()) throw std::domain_error("LinearOrder: point not ranked");
        return it->second;
    }
    bool less(const P& a, const P& b) const { return rank(a) < rank(b); }
    const std::vector<P>& by_rank() const { return by_rank_; }
    const std::string& provenance() const { return provenance_; }
    size_t size() const { return by_rank_.size(); }

    /// Build from an explicit permutation of window indices (external order
    /// file format): perm[r] = canonical index of the rank-r point.
    template <SpaceWindow W>
    static LinearOrder from_permutation(const W& w, const std::vector<int>& perm,
                                        std::string provenance = "user") {
        if (perm.size() != w.points().size())
            throw std::invalid_argument("LinearOrder: permutation size != window size");
        std::vector<char> seen(perm.size(), 0);
        std::vector<P> by_rank;
        by_rank.reserve(perm.size());
        for (int idx : perm) {
            if (idx < 0 || idx >= static_cast<int>(perm.size()) || seen[static_cast<size_t>(idx)])
                throw std::invalid_argument("LinearOrder: not a permutation of window indices");
            seen[static_cast<size_t>(idx)] = 1;
            by_rank.push_back(w.points()[static_cast<size_t>(idx)]);
        }
        return LinearOrder(std::move(by_rank), std::move(provenance));
    }

  private:
    std::vector<P> by_rank_;
    std::map<P, int> rank_;
    std::string provenance_;
};

/// Lexicographic order on normal forms f_i a^k: by exponent k, then index i.
inline std::strong_ordering virtually_z_compare(const VzElement& x, const VzElement& y) {
    if (x.power != y.power) return x.power <=> y.power;
    return x.coset <=> y.coset;
}

inline LinearOrder<long long> natural_order(const GroupWindow<IntLineGroup>& w) {
    std::vector<long long> pts = w.points();
    std::sort(pts.begin(), pts.end());
    return LinearOrder<long long>(std::move(pts), "max-order on Z");
}

inline LinearOrder<long long> natural_order_graph(const GraphWindow& g) {
    std::vector<long long> pts = g.points();
    std::sort(pts.begin(), pts.end());
    return LinearOrder<long long>(std::move(pts), "max-order on Z");
}

/// The order 0 < -1 < 1 < -2 < 2 < ...; metric-close points sit on opposite
/// sides arbitrarily far out, so no entourage certifies compatibility.
inline LinearOrder<long long> zigzag_order(const GroupWindow<IntLineGroup>& w) {
    std::vector<long long> pts = w.points();
    std::sort(pts.begin(), pts.end(), [](long long a, long long b) {
        const long long ka = 2 * std::llabs(a) - (a < 0 ? 1 : 0);
        const long long kb = 2 * std::llabs(b) - (b < 0 ? 1 : 0);
        return ka < kb;
    });
    return LinearOrder<long long>(std::move(pts), "zigzag on Z");
}

inline LinearOrder<VzElement> vz_order(const GroupWindow<VirtuallyZGroup>& w) {
    std::vector<VzElement> pts = w.points();
    std::sort(pts.begin(), pts.end(),
              [](const VzElement& a, const VzElement& b) { return virtually_z_compare(a, b) < 0; });
    return LinearOrder<VzElement>(std::move(pts), "virtually-Z order");
}

template <CosetTowerLike T>
LinearOrder<typename T::element_type> tower_order(const GroupWindow<T>& w) {
    using E = typename T::element_type;
    std::vector<E> pts = w.points();
    std::vector<std::pair<std::vector<int>, E>> keyed;
    keyed.reserve(pts.size());
    for (const E& p : pts) keyed.emplace_back(tower_encode(w.group(), p), p);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        auto c = well_order_compare(a.first, b.first);
        if (c != 0) return c < 0;
        return a.second < b.second;
    });
    std::vector<E> by_rank;
    by_rank.reserve(keyed.size());
    for (auto& [enc, p] : keyed) by_rank.push_back(std::move(p));
    return LinearOrder<E>(std::move(by_rank), "tower well-order");
}

// ---------------------------------------------------------------------------
// Pair orientation induced by a 2-selector
// ---------------------------------------------------------------------------

/// Tournament on the window: exactly one of a-before-b / b-before-a holds
/// per unordered pair, where a is "before" b iff f({a,b}) = a.
class PrecRelation {
  public:
    explicit PrecRelation(int n) : n_(n), first_wins_(static_cast<size_t>(n) * n, 0) {}

    int size() const { return n_; }
    bool before(int i, int j) const {
        if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
            throw std::invalid_argument("PrecRelation: bad pair");
        return first_wins_[static_cast<size_t>(i) * n_ + j] != 0;
    }
    void set_before(int i, int j) {
        first_wins_[static_cast<size_t>(i) * n_ + j] = 1;
        first_wins_[static_cast<size_t>(j) * n_ + i] = 0;
    }
    int out_degree(int i) const {
        int deg = 0;
        for (int j = 0; j < n_; ++j)
            if (j != i && before(i, j)) ++deg;
        return deg;
    }

  private:
    int n_;
    std::vector<char> first_wins_;
};

template <SpaceWindow W, class F2>
PrecRelation prec_of(const W& w, F2&& f2) {
    using P = typename W::point_type;
    const auto& pts = w.points();
    PrecRelation prec(static_cast<int>(pts.size()));
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            const P winner = f2(HyperPoint<P>({pts[i], pts[j]}));
            if (winner == pts[i])
                prec.set_before(static_cast<int>(i), static_cast<int>(j));
            else if (winner == pts[j])
                prec.set_before(static_cast<int>(j), static_cast<int>(i));
            else
                throw std::invalid_argument("prec_of: map is not a 2-selector");
        }
    return prec;
}

/// The 2-selector determined by a tournament: f({a,b}) = the earlier one.
template <SpaceWindow W>
CoarseMap<HyperPoint<typename W::point_type>, typename W::point_type> selector_from_tournament(
    const W& w, PrecRelation prec) {
    using P = typename W::point_type;
    return {"pairs", "points", [&w, prec = std::move(prec)](const HyperPoint<P>& a) -> P {
                if (a.size() != 2) throw std::invalid_argument("2-selector needs a 2-set");
                const int i = w.index_of(a.elems[0]);
                const int j = w.index_of(a.elems[1]);
                return prec.before(i, j) ? a.elems[0] : a.elems[1];
            }};
}

/// A tournament is a total order iff all out-degrees are distinct.
inline bool is_transitive_tournament(const PrecRelation& prec) {
    std::vector<char> seen(static_cast<size_t>(prec.size()), 0);
    for (int i = 0; i < prec.size(); ++i) {
        int d = prec.out_degree(i);
        if (seen[static_cast<size_t>(d)]) return false;
        seen[static_cast<size_t>(d)] = 1;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Interval entourages
// ---------------------------------------------------------------------------

template <class P>
struct IntervalReport {
    bool interval = false;
    int checked = 0;
    std::optional<P> witness_center;
    std::optional<P> witness_gap;  // order-between two ball members, not in ball
};

namespace detail {
template <class P>
void interval_check(const std::vector<P>& by_rank, const std::map<P, int>& rank_of, const P& x,
                    const std::vector<P>& ball_pts, IntervalReport<P>& rep) {
    int lo = std::numeric_limits<int>::max(), hi = -1;
    std::vector<char> in_ball(by_rank.size(), 0);
    for (const P& y : ball_pts) {
        const int r = rank_of.at(y);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
        in_ball[static_cast<size_t>(r)] = 1;
    }
    const int rx = rank_of.at(x);
    if (rx < lo || rx > hi) {
        rep.interval = false;
        rep.witness_center = x;
        rep.witness_gap = x;
        return;
    }
    for (int r = lo; r <= hi; ++r) {
        if (!in_ball[static_cast<size_t>(r)]) {
            rep.interval = false;
            rep.witness_center = x;
            rep.witness_gap = by_rank[static_cast<size_t>(r)];
            return;
        }
    }
}
}  // namespace detail

/// True iff every safe entourage ball E[x] is an order-interval containing x.
/// Group windows use the exact entourage direction (x,y) in E_F <=> xy^{-1} in F.
template <GroupLike G>
IntervalReport<typename G::element_type> is_interval_entourage(
    const GroupWindow<G>& w, const GroupScale<typename G::element_type>& f,
    const LinearOrder<typename G::element_type>& order) {
    using P = typename G::element_type;
    std::map<P, int> rank_of;
    for (size_t r = 0; r < order.by_rank().size(); ++r) rank_of[order.by_rank()[r]] = static_cast<int>(r);
    IntervalReport<P> rep;
    rep.interval = true;
    for (const P& x : w.points()) {
        if (!w.entourage_safe(f, x)) continue;
        ++rep.checked;
        detail::interval_check(order.by_rank(), rank_of, x, w.entourage_ball(f, x), rep);
        if (!rep.interval) return rep;
    }
    return rep;
}

inline IntervalReport<long long> is_interval_entourage(const GraphWindow& g, MetricScale s,
                                                       const LinearOrder<long long>& order) {
    std::map<long long, int> rank_of;
    for (size_t r = 0; r < order.by_rank().size(); ++r) rank_of[order.by_rank()[r]] = static_cast<int>(r);
    IntervalReport<long long> rep;
    rep.interval = true;
    for (long long x : g.points()) {
        if (!g.safe(x, s)) continue;
        ++rep.checked;
        detail::interval_check(order.by_rank(), rank_of, x, g.ball(x, s), rep);
        if (!rep.interval) return rep;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Compatible orders
// ---------------------------------------------------------------------------

template <class P, class ScaleT>
struct CompatibilityReport {
    bool compatible = false;
    bool inconclusive = false;  // candidate chain exhausted without certificate
    // per tested scale: index into the candidate chain that certifies it
    std::vector<std::pair<ScaleT, std::optional<size_t>>> certificates;
    // a violating (x, y, x') triple for the last candidate tried
    std::optional<std::array<P, 3>> witness;
};

namespace detail {
/// Violation of the stability condition for entourages (E, F) at any x:
/// there are x < y with y outside F[x] but some x' in E[x] with x' >= y
/// (or the mirrored situation below x).
template <class P, class EBallFn, class FBallFn>
std::optional<std::array<P, 3>> stability_violation(const std::vector<P>& points,
                                                    const LinearOrder<P>& order, EBallFn&& e_ball,
                                                    FBallFn&& f_ball) {
    std::map<P, int> rank_of;
    for (size_t r = 0; r < order.by_rank().size(); ++r) rank_of[order.by_rank()[r]] = static_cast<int>(r);
    for (const P& x : points) {
        const auto eb = e_ball(x);
        const auto fb = f_ball(x);
        std::vector<char> in_f(order.by_rank().size(), 0);
        for (const P& y : fb) in_f[static_cast<size_t>(rank_of.at(y))] = 1;
        int e_lo = std::numeric_limits<int>::max(), e_hi = -1;
        P p_lo{}, p_hi{};
        for (const P& xp : eb) {
            const int r = rank_of.at(xp);
            if (r < e_lo) { e_lo = r; p_lo = xp; }
            if (r > e_hi) { e_hi = r; p_hi = xp; }
        }
        const int rx = rank_of.at(x);
        // any y above x in the order, outside F[x], but not above all of E[x]?
        for (int r = rx + 1; r <= e_hi; ++r) {
            if (!in_f[static_cast<size_t>(r)])
                return std::array<P, 3>{x, order.by_rank()[static_cast<size_t>(r)], p_hi};
        }
        for (int r = rx - 1; r >= e_lo; --r) {
            if (!in_f[static_cast<size_t>(r)])
                return std::array<P, 3>{x, order.by_rank()[static_cast<size_t>(r)], p_lo};
        }
    }
    return std::nullopt;
}
}  // namespace detail

/// For each tested scale E, search the candidate chain for an F >= E whose
/// far side is order-stable under E-perturbation. The search is bounded by
/// the window: exhausting the chain yields inconclusive-with-witness rather
/// than a verdict about the infinite structure.
template <GroupLike G>
CompatibilityReport<typename G::element_type, GroupScale<typename G::element_type>>
is_compatible_order(const GroupWindow<G>& w,
                    const std::vector<GroupScale<typename G::element_type>>& tested,
                    const std::vector<GroupScale<typename G::element_type>>& candidates,
                    const LinearOrder<typename G::element_type>& order) {
    using P = typename G::element_type;
    using S = GroupScale<P>;
    CompatibilityReport<P, S> rep;
    rep.compatible = true;
    for (const S& e : tested) {
        std::optional<size_t> found;
        for (size_t ci = 0; ci < candidates.size(); ++ci) {
            const S& f = candidates[ci];
            bool contains_e = true;
            for (const P& g : e.elements())
                if (!f.contains(g)) { contains_e = false; break; }
            if (!contains_e) continue;
            std::vector<P> usable;
            for (const P& x : w.points())
                if (w.entourage_safe(f, x)) usable.push_back(x);
            if (usable.empty()) continue;  // window too small to judge this candidate
            auto viol = detail::stability_violation<P>(
                usable, order, [&](const P& x) { return w.entourage_ball(e, x); },
                [&](const P& x) { return w.entourage_ball(f, x); });
            if (!viol) { found = ci; break; }
            rep.witness = viol;
        }
        rep.certificates.emplace_back(e, found);
        if (!found) {
            rep.compatible = false;
            rep.inconclusive = true;  // refuted only up to the window's chain
        }
    }
    return rep;
}

inline CompatibilityReport<long long, MetricScale> is_compatible_order(
    const GraphWindow& g, const std::vector<MetricScale>& tested,
    const std::vector<MetricScale>& candidates, const LinearOrder<long long>& order) {
    CompatibilityReport<long long, MetricScale> rep;
    rep.compatible = true;
    for (MetricScale e : tested) {
        std::optional<size_t> found;
        for (size_t ci = 0; ci < candidates.size(); ++ci) {
            MetricScale f = candidates[ci];
            if (f.radius < e.radius) continue;
            std::vector<long long> usable;
            for (long long x : g.points())
                if (g.safe(x, f)) usable.push_back(x);
            if (usable.empty()) continue;  // window too small to judge this candidate
            auto viol = detail::stability_violation<long long>(
                usable, order, [&](long long x) { return g.ball(x, e); },
                [&](long long x) { return g.ball(x, f); });
            if (!viol) { found = ci; break; }
            rep.witness = viol;
        }
        rep.certificates.emplace_back(e, found);
        if (!found) {
            rep.compatible = false;
            rep.inconclusive = true;
        }
    }
    return rep;
}

}  // namespace coarse
