// core.hpp -- finite-window substrate for coarse-space experiments.
//
// Everything here is exact integer / exact set arithmetic on explicit finite
// windows. Quantified properties range over the window's safe region only:
// a point is safe for a scale when its ball stays inside the window, so
// truncation never corrupts a checked statement.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coarse {

// ---------------------------------------------------------------------------
// Scales
// ---------------------------------------------------------------------------

/// Radius scale for path-metric spaces. Entourage: {(x,y) : d(x,y) <= radius}.
struct MetricScale {
    int radius = 0;

    MetricScale() = default;
    explicit MetricScale(int r) : radius(r) {
        if (r < 0) throw std::invalid_argument("MetricScale: radius must be >= 0");
    }
    friend bool operator==(MetricScale a, MetricScale b) { return a.radius == b.radius; }
    friend bool operator<(MetricScale a, MetricScale b) { return a.radius < b.radius; }
};

inline MetricScale compose_scales(MetricScale a, MetricScale b) {
    return MetricScale(a.radius + b.radius);
}
inline MetricScale invert_scale(MetricScale a) { return a; }

/// Finite element-set scale for group spaces. Entourage: {(x,y) : x in F*y},
/// so the ball at x (for symmetric F) is F*x.
///
/// `normalized` adjoins the identity and symmetrizes, which is the invariant
/// every ball/hyperspace operation relies on. `GroupScale(elems)` keeps the
/// set exactly as given: scale composition must produce the exact setwise
/// product F*F' (possibly asymmetric in nonabelian groups) or the entourage
/// identity E_F o E_F' = E_{FF'} would not hold pointwise.
template <class E>
class GroupScale {
  public:
    GroupScale() = default;
    explicit GroupScale(std::vector<E> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        if (elems_.empty()) throw std::invalid_argument("GroupScale: empty element set");
    }

    template <class G>
    static GroupScale normalized(const G& g, std::vector<E> elems) {
        elems.push_back(g.identity());
        const size_t m = elems.size();
        for (size_t i = 0; i < m; ++i) elems.push_back(g.inverse(elems[i]));
        return GroupScale(std::move(elems));
    }

    const std::vector<E>& elements() const { return elems_; }
    size_t size() const { return elems_.size(); }

    bool contains(const E& e) const {
        return std::binary_search(elems_.begin(), elems_.end(), e);
    }

    template <class G>
    bool has_identity(const G& g) const { return contains(g.identity()); }

    template <class G>
    bool is_symmetric(const G& g) const {
        for (const E& e : elems_)
            if (!contains(g.inverse(e))) return false;
        return true;
    }

    friend bool operator==(const GroupScale& a, const GroupScale& b) {
        return a.elems_ == b.elems_;
    }

  private:
    std::vector<E> elems_;
};

/// Exact setwise product F*F'; satisfies E_F o E_F' = E_{F F'}.
template <class G>
GroupScale<typename G::element_type> compose_scales(
    const G& g, const GroupScale<typename G::element_type>& a,
    const GroupScale<typename G::element_type>& b) {
    std::vector<typename G::element_type> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& x : a.elements())
        for (const auto& y : b.elements()) prod.push_back(g.multiply(x, y));
    return GroupScale<typename G::element_type>(std::move(prod));
}

/// Elementwise inverse; satisfies (E_F)^{-1} = E_{F^{-1}}.
template <class G>
GroupScale<typename G::element_type> invert_scale(
    const G& g, const GroupScale<typename G::element_type>& a) {
    std::vector<typename G::element_type> inv;
    inv.reserve(a.size());
    for (const auto& x : a.elements()) inv.push_back(g.inverse(x));
    return GroupScale<typename G::element_type>(std::move(inv));
}

// ---------------------------------------------------------------------------
// Hyperpoints
// ---------------------------------------------------------------------------

/// A non-empty finite subset of a space; the points of the hyperspace.
template <class P>
struct HyperPoint {
    std::vector<P> elems;  // sorted, unique

    explicit HyperPoint(std::vector<P> e) : elems(std::move(e)) {
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        if (elems.empty()) throw std::invalid_argument("HyperPoint: must be non-empty");
    }

    size_t size() const { return elems.size(); }
    bool contains(const P& p) const {
        return std::binary_search(elems.begin(), elems.end(), p);
    }
    friend bool operator==(const HyperPoint& a, const HyperPoint& b) {
        return a.elems == b.elems;
    }
    friend bool operator<(const HyperPoint& a, const HyperPoint& b) {
        return a.elems < b.elems;
    }
};

// ---------------------------------------------------------------------------
// Window concepts
// ---------------------------------------------------------------------------

template <class W>
concept SpaceWindow = requires(const W& w, const typename W::point_type& p,
                               const typename W::scale_type& s) {
    typename W::point_type;
    typename W::scale_type;
    { w.points() } -> std::convertible_to<const std::vector<typename W::point_type>&>;
    { w.contains(p) } -> std::convertible_to<bool>;
    { w.index_of(p) } -> std::convertible_to<int>;
    { w.ball(p, s) } -> std::convertible_to<std::vector<typename W::point_type>>;
    { w.safe(p, s) } -> std::convertible_to<bool>;
};

/// Window carrying an exact integer path metric (graph windows).
template <class W>
concept MetricSpaceWindow = SpaceWindow<W> && requires(const W& w, const typename W::point_type& p) {
    { w.distance(p, p) } -> std::convertible_to<std::optional<int>>;
};

/// Window over a group with exact arithmetic (group windows).
template <class W>
concept GroupSpaceWindow = SpaceWindow<W> && requires(const W& w) {
    { w.group() };
};

// ---------------------------------------------------------------------------
// Maps between windows
// ---------------------------------------------------------------------------

/// A total function between window domains, tagged with descriptors so
/// reports can echo what was measured.
template <class In, class Out>
struct CoarseMap {
    std::string domain;
    std::string codomain;
    std::function<Out(const In&)> fn;

    Out operator()(const In& x) const { return fn(x); }
};

// ---------------------------------------------------------------------------
// Hausdorff metric and hyperspace closeness
// ---------------------------------------------------------------------------

/// Exact Hausdorff distance between two finite subsets of a metric window:
/// max over both directed deviations, each a max-min of point distances.
template <MetricSpaceWindow W>
int hausdorff_distance(const W& w, const HyperPoint<typename W::point_type>& a,
                       const HyperPoint<typename W::point_type>& b) {
    int ab = 0, ba = 0;
    for (const auto& x : a.elems) {
        int best = -1;
        for (const auto& y : b.elems) {
            auto d = w.distance(x, y);
            if (!d) throw std::domain_error("hausdorff_distance: unreachable pair");
            if (best < 0 || *d < best) best = *d;
        }
        ab = std::max(ab, best);
    }
    for (const auto& y : b.elems) {
        int best = -1;
        for (const auto& x : a.elems) {
            auto d = w.distance(y, x);
            if (!d) throw std::domain_error("hausdorff_distance: unreachable pair");
            if (best < 0 || *d < best) best = *d;
        }
        ba = std::max(ba, best);
    }
    return std::max(ab, ba);
}

/// Mutual ball-covering at scale s: A subset of E[B] and B subset of E[A].
/// Throws std::domain_error when a member is unsafe for s (its ball could
/// exit the window, so the answer would depend on the truncation).
template <SpaceWindow W>
bool hyper_close(const W& w, const HyperPoint<typename W::point_type>& a,
                 const HyperPoint<typename W::point_type>& b,
                 const typename W::scale_type& s) {
    const size_t n = w.points().size();
    std::vector<char> covered(n, 0);
    auto cover_from = [&](const HyperPoint<typename W::point_type>& src) {
        std::fill(covered.begin(), covered.end(), 0);
        for (const auto& p : src.elems) {
            if (!w.safe(p, s))
                throw std::domain_error("hyper_close: point unsafe for scale (ball may exit window)");
            for (const auto& q : w.ball(p, s)) {
                int i = w.index_of(q);
                if (i >= 0) covered[static_cast<size_t>(i)] = 1;
            }
        }
    };
    cover_from(b);
    for (const auto& p : a.elems) {
        int i = w.index_of(p);
        if (i < 0 || !covered[static_cast<size_t>(i)]) return false;
    }
    cover_from(a);
    for (const auto& q : b.elems) {
        int i = w.index_of(q);
        if (i < 0 || !covered[static_cast<size_t>(i)]) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Selector checks and moduli
// ---------------------------------------------------------------------------

template <class P, class F>
bool is_selector(F&& f, const std::vector<HyperPoint<P>>& family) {
    for (const auto& a : family)
        if (!a.contains(f(a))) return false;
    return true;
}

template <class P, class F>
std::optional<HyperPoint<P>> find_selector_violation(F&& f, const std::vector<HyperPoint<P>>& family) {
    for (const auto& a : family)
        if (!a.contains(f(a))) return a;
    return std::nullopt;
}

/// Result of a modulus estimate. `unbounded_on_window` is a value, not an
/// error: candidates that are not macro-uniform are expected inputs.
template <class ScaleT>
struct ModulusResult {
    bool unbounded_on_window = false;
    ScaleT scale{};
};

/// Minimal output radius r such that every s_in-close pair of family members
/// maps to points at distance <= r. Reported unbounded when r would exceed
/// `cap` (default: codomain radius) -- a window cannot certify more.
template <SpaceWindow DomW, MetricSpaceWindow CodW, class F>
ModulusResult<MetricScale> modulus_estimate(
    const DomW& dom, const CodW& cod, F&& f,
    const std::vector<HyperPoint<typename DomW::point_type>>& family,
    const typename DomW::scale_type& s_in, std::optional<int> cap = std::nullopt) {
    int worst = 0;
    bool out_of_window = false;
    for (size_t i = 0; i < family.size(); ++i) {
        for (size_t j = i + 1; j < family.size(); ++j) {
            if (!hyper_close(dom, family[i], family[j], s_in)) continue;
            const auto x = f(family[i]);
            const auto y = f(family[j]);
            if (!cod.contains(x) || !cod.contains(y)) {
                out_of_window = true;
                continue;
            }
            auto d = cod.distance(x, y);
            if (!d) {
                out_of_window = true;
                continue;
            }
            worst = std::max(worst, *d);
        }
    }
    const int bound = cap ? *cap : cod.radius_bound();
    ModulusResult<MetricScale> res;
    res.scale = MetricScale(worst);
    res.unbounded_on_window = out_of_window || worst > bound;
    return res;
}

/// Group-codomain flavour: the minimal scale is the exact set of realized
/// quotients f(A)*f(B)^{-1} over s_in-close pairs (plus the identity).
template <SpaceWindow DomW, GroupSpaceWindow CodW, class F>
ModulusResult<typename CodW::scale_type> modulus_estimate(
    const DomW& dom, const CodW& cod, F&& f,
    const std::vector<HyperPoint<typename DomW::point_type>>& family,
    const typename DomW::scale_type& s_in) {
    using E = typename CodW::point_type;
    std::vector<E> quotients{cod.group().identity()};
    bool out_of_window = false;
    for (size_t i = 0; i < family.size(); ++i) {
        for (size_t j = i + 1; j < family.size(); ++j) {
            if (!hyper_close(dom, family[i], family[j], s_in)) continue;
            const E x = f(family[i]);
            const E y = f(family[j]);
            const E q = cod.group().multiply(x, cod.group().inverse(y));
            const E qi = cod.group().inverse(q);
            if (!cod.contains(q) || !cod.contains(qi)) out_of_window = true;
            quotients.push_back(q);
            quotients.push_back(qi);
        }
    }
    ModulusResult<typename CodW::scale_type> res;
    res.scale = typename CodW::scale_type(std::move(quotients));
    res.unbounded_on_window = out_of_window;
    return res;
}

/// Modulus of a point map between metric windows: minimal r' with
/// f(ball(x, s_in)) inside ball(f(x), r') for every safe x.
template <MetricSpaceWindow DomW, MetricSpaceWindow CodW, class F>
ModulusResult<MetricScale> point_map_modulus(const DomW& dom, const CodW& cod, F&& f,
                                             MetricScale s_in,
                                             std::optional<int> cap = std::nullopt) {
    int worst = 0;
    bool out_of_window = false;
    for (const auto& x : dom.points()) {
        if (!dom.safe(x, s_in)) continue;
        const auto fx = f(x);
        if (!cod.contains(fx)) {
            out_of_window = true;
            continue;
        }
        for (const auto& y : dom.ball(x, s_in)) {
            const auto fy = f(y);
            if (!cod.contains(fy)) {
                out_of_window = true;
                continue;
            }
            auto d = cod.distance(fx, fy);
            if (!d) {
                out_of_window = true;
                continue;
            }
            worst = std::max(worst, *d);
        }
    }
    const int bound = cap ? *cap : cod.radius_bound();
    ModulusResult<MetricScale> res;
    res.scale = MetricScale(worst);
    res.unbounded_on_window = out_of_window || worst > bound;
    return res;
}

/// Observed modulus table over a chain of input scales. Monotone when the
/// map is honest: bigger input scale admits more close pairs.
template <class InScale, class OutResult>
struct ModulusProfile {
    std::vector<std::pair<InScale, OutResult>> table;
};

template <SpaceWindow DomW, MetricSpaceWindow CodW, class F>
ModulusProfile<typename DomW::scale_type, ModulusResult<MetricScale>> modulus_profile(
    const DomW& dom, const CodW& cod, F&& f,
    const std::vector<HyperPoint<typename DomW::point_type>>& family,
    const std::vector<typename DomW::scale_type>& chain) {
    ModulusProfile<typename DomW::scale_type, ModulusResult<MetricScale>> prof;
    for (const auto& s : chain)
        prof.table.emplace_back(s, modulus_estimate(dom, cod, f, family, s));
    return prof;
}

// ---------------------------------------------------------------------------
// Largeness
// ---------------------------------------------------------------------------

template <class P>
struct LargenessResult {
    bool large = false;
    std::optional<P> uncovered;  // first safe point not covered, when !large
};

/// True iff every safe point of the window lies in E_s[Y].
template <SpaceWindow W>
LargenessResult<typename W::point_type> is_large(const W& w,
                                                 const std::vector<typename W::point_type>& y,
                                                 const typename W::scale_type& s) {
    std::vector<char> in_y(w.points().size(), 0);
    for (const auto& p : y) {
        int i = w.index_of(p);
        if (i < 0) throw std::invalid_argument("is_large: Y must lie inside the window");
        in_y[static_cast<size_t>(i)] = 1;
    }
    LargenessResult<typename W::point_type> res;
    res.large = true;
    for (const auto& x : w.points()) {
        if (!w.safe(x, s)) continue;
        bool covered = false;
        for (const auto& q : w.ball(x, s)) {
            int i = w.index_of(q);
            if (i >= 0 && in_y[static_cast<size_t>(i)]) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            res.large = false;
            res.uncovered = x;
            return res;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Selector transfer along a bijection
// ---------------------------------------------------------------------------

/// Pull a selector back along a window bijection phi: the transferred value
/// is the point of A nearest (in the domain metric) to phi_inv(f(phi(A))),
/// ties broken by the window's canonical enumeration order. The result is a
/// selector by construction; when f is a selector on phi-images it agrees
/// with phi_inv . f . phi exactly.
template <MetricSpaceWindow DomW, SpaceWindow CodW, class Phi, class PhiInv, class F>
CoarseMap<HyperPoint<typename DomW::point_type>, typename DomW::point_type> transfer_selector(
    const DomW& dom, const CodW& cod, Phi phi, PhiInv phi_inv, F f, std::string name = "transferred") {
    using P = typename DomW::point_type;
    // phi must be a bijection of the windows.
    std::vector<char> hit(cod.points().size(), 0);
    for (const auto& x : dom.points()) {
        const auto y = phi(x);
        int i = cod.index_of(y);
        if (i < 0) throw std::invalid_argument("transfer_selector: phi leaves the codomain window");
        if (hit[static_cast<size_t>(i)])
            throw std::invalid_argument("transfer_selector: phi is not injective on the window");
        hit[static_cast<size_t>(i)] = 1;
        if (!(phi_inv(y) == x))
            throw std::invalid_argument("transfer_selector: phi_inv does not invert phi");
    }
    if (dom.points().size() != cod.points().size())
        throw std::invalid_argument("transfer_selector: phi is not onto the codomain window");

    CoarseMap<HyperPoint<P>, P> g;
    g.domain = "hyperpoints";
    g.codomain = name;
    g.fn = [&dom, phi, phi_inv, f](const HyperPoint<P>& a) -> P {
        using Q = typename CodW::point_type;
        std::vector<Q> image;
        image.reserve(a.size());
        for (const auto& p : a.elems) image.push_back(phi(p));
        const P anchor = phi_inv(f(HyperPoint<Q>(std::move(image))));
        P best{};
        int best_d = -1;
        int best_idx = 0;
        for (const auto& p : a.elems) {
            auto d = dom.distance(p, anchor);
            int dv = d ? *d : std::numeric_limits<int>::max();
            int idx = dom.index_of(p);
            if (best_d < 0 || dv < best_d || (dv == best_d && idx < best_idx)) {
                best = p;
                best_d = dv;
                best_idx = idx;
            }
        }
        return best;
    };
    return g;
}

}  // namespace coarse
