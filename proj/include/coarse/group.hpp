// group.hpp -- group catalog with exact normal forms, group windows with
// finitary balls, Cayley graph construction, and coset-tower machinery.
//
// Every catalog group computes in an exact normal form; there is no word
// problem solving anywhere. Towers expose right-coset representative
// systems with per-level orders (identity first), which induce the
// finite-support encoding and its well-order.

#pragma once

#include "coarse/core.hpp"
#include "coarse/graph.hpp"

#include <bit>
#include <compare>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace coarse {

template <class G>
concept GroupLike = requires(const G& g, const typename G::element_type& x,
                             const typename G::element_type& y) {
    typename G::element_type;
    { g.identity() } -> std::convertible_to<typename G::element_type>;
    { g.multiply(x, y) } -> std::convertible_to<typename G::element_type>;
    { g.inverse(x) } -> std::convertible_to<typename G::element_type>;
};

// ---------------------------------------------------------------------------
// Integer line
// ---------------------------------------------------------------------------

struct IntLineGroup {
    using element_type = long long;
    element_type identity() const { return 0; }
    element_type multiply(element_type a, element_type b) const { return a + b; }
    element_type inverse(element_type a) const { return -a; }
    std::string describe() const { return "Z"; }
};

// ---------------------------------------------------------------------------
// Virtually cyclic groups: normal infinite cyclic A = <a> of finite index,
// elements in normal form f_i a^k
// ---------------------------------------------------------------------------

struct VzElement {
    int coset = 0;       // transversal index i
    long long power = 0; // exponent k in f_i a^k

    friend auto operator<=>(const VzElement&, const VzElement&) = default;
};

/// Extension data: action sign eps_j (f_j^{-1} a f_j = a^{eps_j}), quotient
/// table sigma and cocycle c with f_i f_j = f_{sigma(i,j)} a^{c(i,j)}.
/// Multiplication: f_i a^k . f_j a^n = f_{sigma(i,j)} a^{c(i,j) + eps_j k + n}.
class VirtuallyZGroup {
  public:
    using element_type = VzElement;

    VirtuallyZGroup(std::vector<int> action, std::vector<std::vector<int>> sigma,
                    std::vector<std::vector<long long>> cocycle)
        : action_(std::move(action)), sigma_(std::move(sigma)), cocycle_(std::move(cocycle)) {
        const size_t m = action_.size();
        if (m == 0 || sigma_.size() != m || cocycle_.size() != m)
            throw std::invalid_argument("VirtuallyZGroup: inconsistent table sizes");
        for (size_t i = 0; i < m; ++i)
            if (sigma_[i].size() != m || cocycle_[i].size() != m)
                throw std::invalid_argument("VirtuallyZGroup: inconsistent table sizes");
        if (action_[0] != 1) throw std::invalid_argument("VirtuallyZGroup: f_0 must act trivially");
        for (size_t i = 0; i < m; ++i) {
            if (action_[i] != 1 && action_[i] != -1)
                throw std::invalid_argument("VirtuallyZGroup: action signs must be +-1");
            if (sigma_[0][i] != static_cast<int>(i) || sigma_[i][0] != static_cast<int>(i) ||
                cocycle_[0][i] != 0 || cocycle_[i][0] != 0)
                throw std::invalid_argument("VirtuallyZGroup: f_0 must be the identity coset");
        }
        // sigma is the quotient group's table: rows and columns permute
        for (size_t i = 0; i < m; ++i) {
            std::vector<char> row(m, 0), col(m, 0);
            for (size_t j = 0; j < m; ++j) {
                int r = sigma_[i][j], c = sigma_[j][i];
                if (r < 0 || r >= static_cast<int>(m) || c < 0 || c >= static_cast<int>(m) ||
                    row[static_cast<size_t>(r)] || col[static_cast<size_t>(c)])
                    throw std::invalid_argument("VirtuallyZGroup: sigma is not a group table");
                row[static_cast<size_t>(r)] = col[static_cast<size_t>(c)] = 1;
            }
        }
        // the action must factor through the quotient
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                if (action_[static_cast<size_t>(sigma_[i][j])] != action_[i] * action_[j])
                    throw std::invalid_argument("VirtuallyZGroup: action is not a homomorphism");
        check_associativity();
    }

    element_type identity() const { return {0, 0}; }
    element_type multiply(element_type x, element_type y) const {
        element_type r;
        r.coset = sigma_[static_cast<size_t>(x.coset)][static_cast<size_t>(y.coset)];
        r.power = cocycle_[static_cast<size_t>(x.coset)][static_cast<size_t>(y.coset)] +
                  static_cast<long long>(action_[static_cast<size_t>(y.coset)]) * x.power + y.power;
        return r;
    }
    element_type inverse(element_type x) const {
        const size_t m = action_.size();
        int j = 0;
        for (size_t cand = 0; cand < m; ++cand)
            if (sigma_[static_cast<size_t>(x.coset)][cand] == 0) {
                j = static_cast<int>(cand);
                break;
            }
        long long n = -(cocycle_[static_cast<size_t>(x.coset)][static_cast<size_t>(j)] +
                        static_cast<long long>(action_[static_cast<size_t>(j)]) * x.power);
        return {j, n};
    }

    int transversal_size() const { return static_cast<int>(action_.size()); }
    int action_sign(int i) const { return action_.at(static_cast<size_t>(i)); }

    /// Minimal d with f_i f_j in F * {a^-d..a^d} for all i, j; directly the
    /// largest cocycle magnitude.
    long long derived_d() const {
        long long d = 0;
        for (const auto& row : cocycle_)
            for (long long c : row) d = std::max(d, std::llabs(c));
        return d;
    }

    std::string describe() const {
        return "virtually-Z[" + std::to_string(transversal_size()) + " cosets]";
    }

    /// Infinite dihedral group: f_1 the reflection, f_1^{-1} a f_1 = a^{-1}.
    static VirtuallyZGroup dinf() {
        return VirtuallyZGroup({1, -1}, {{0, 1}, {1, 0}}, {{0, 0}, {0, 0}});
    }
    /// Direct product Z x Z_k with A = Z x {0}.
    static VirtuallyZGroup z_cross_zk(int k) {
        if (k < 2) throw std::invalid_argument("z_cross_zk: k >= 2");
        std::vector<int> action(static_cast<size_t>(k), 1);
        std::vector<std::vector<int>> sigma(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k)));
        std::vector<std::vector<long long>> coc(static_cast<size_t>(k),
                                                std::vector<long long>(static_cast<size_t>(k), 0));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sigma[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % k;
        return VirtuallyZGroup(std::move(action), std::move(sigma), std::move(coc));
    }
    /// Z written over the index-2 subgroup 2Z; has a nonzero cocycle (d = 1).
    static VirtuallyZGroup z_over_2z() {
        return VirtuallyZGroup({1, 1}, {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}});
    }

  private:
    void check_associativity() const {
        std::mt19937_64 rng(0x5eedULL);
        std::uniform_int_distribution<int> coset(0, transversal_size() - 1);
        std::uniform_int_distribution<long long> power(-8, 8);
        for (int t = 0; t < 1000; ++t) {
            element_type x{coset(rng), power(rng)}, y{coset(rng), power(rng)},
                z{coset(rng), power(rng)};
            if (!(multiply(multiply(x, y), z) == multiply(x, multiply(y, z))))
                throw std::invalid_argument("VirtuallyZGroup: tables are not associative");
        }
    }

    std::vector<int> action_;
    std::vector<std::vector<int>> sigma_;
    std::vector<std::vector<long long>> cocycle_;
};

// ---------------------------------------------------------------------------
// Finite groups by multiplication table
// ---------------------------------------------------------------------------

class FiniteTableGroup {
  public:
    using element_type = int;

    explicit FiniteTableGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
        const int n = static_cast<int>(table_.size());
        if (n == 0) throw std::invalid_argument("FiniteTableGroup: empty table");
        for (const auto& row : table_)
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("FiniteTableGroup: table not square");
        for (int i = 0; i < n; ++i)
            if (table_[0][static_cast<size_t>(i)] != i || table_[static_cast<size_t>(i)][0] != i)
                throw std::invalid_argument("FiniteTableGroup: element 0 must be the identity");
        inv_.assign(static_cast<size_t>(n), -1);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                if (table_[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0) {
                    inv_[static_cast<size_t>(i)] = j;
                    break;
                }
            if (inv_[static_cast<size_t>(i)] < 0)
                throw std::invalid_argument("FiniteTableGroup: element without inverse");
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
                        throw std::invalid_argument("FiniteTableGroup: table not associative");
    }

    element_type identity() const { return 0; }
    element_type multiply(element_type a, element_type b) const {
        return table_.at(static_cast<size_t>(a)).at(static_cast<size_t>(b));
    }
    element_type inverse(element_type a) const { return inv_.at(static_cast<size_t>(a)); }
    int order() const { return static_cast<int>(table_.size()); }
    std::string describe() const { return "finite[" + std::to_string(order()) + "]"; }

    static FiniteTableGroup klein4() {
        return FiniteTableGroup({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
    }
    static FiniteTableGroup cyclic(int n) {
        std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % n;
        return FiniteTableGroup(std::move(t));
    }

  private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
};

// ---------------------------------------------------------------------------
// Coset towers
// ---------------------------------------------------------------------------

template <class T>
concept CosetTowerLike = GroupLike<T> && requires(const T& t, const typename T::element_type& g, int n) {
    { t.levels() } -> std::convertible_to<int>;
    { t.level_of(g) } -> std::convertible_to<int>;             // minimal n with g in G_n
    { t.reps(n) } -> std::convertible_to<std::vector<typename T::element_type>>;
    { t.rep_index(n, g) } -> std::convertible_to<int>;         // position in <=_n, e -> 0
    { t.factor_top(g) } -> std::convertible_to<std::pair<typename T::element_type, typename T::element_type>>;
    { t.subgroup_elements(n) } -> std::convertible_to<std::vector<typename T::element_type>>;
};

/// Direct sum of countably many Z_2, with G_n the first n coordinates and
/// R_n = {e, e_n}. Elements are bitmasks.
class SumZ2Tower {
  public:
    using element_type = std::uint32_t;

    explicit SumZ2Tower(int levels) : levels_(levels) {
        if (levels < 1 || levels > 20) throw std::invalid_argument("SumZ2Tower: 1 <= levels <= 20");
    }

    element_type identity() const { return 0; }
    element_type multiply(element_type a, element_type b) const { return a ^ b; }
    element_type inverse(element_type a) const { return a; }

    int levels() const { return levels_; }
    int level_of(element_type g) const { return std::bit_width(g); }
    std::vector<element_type> reps(int n) const {
        return {0u, static_cast<element_type>(1u << n)};
    }
    int rep_index(int n, element_type r) const {
        if (r == 0u) return 0;
        if (r == (1u << n)) return 1;
        throw std::invalid_argument("SumZ2Tower: not a level representative");
    }
    std::pair<element_type, element_type> factor_top(element_type g) const {
        const int top = level_of(g) - 1;
        const element_type r = 1u << top;
        return {static_cast<element_type>(g ^ r), r};
    }
    std::vector<element_type> subgroup_elements(int n) const {
        std::vector<element_type> out;
        out.reserve(1u << n);
        for (element_type m = 0; m < (1u << n); ++m) out.push_back(m);
        return out;
    }
    std::string describe() const { return "sum-Z2[" + std::to_string(levels_) + "]"; }

  private:
    int levels_;
};

/// Tower of symmetric groups S_1 < S_2 < ... with R_n = {e} plus the
/// transpositions (j n). Elements are permutations of {0..levels-1} stored
/// as image vectors.
class SymTower {
  public:
    using element_type = std::vector<std::uint8_t>;

    explicit SymTower(int levels) : levels_(levels) {
        if (levels < 2 || levels > 8) throw std::invalid_argument("SymTower: 2 <= levels <= 8");
    }

    element_type identity() const {
        element_type e(static_cast<size_t>(levels_));
        std::iota(e.begin(), e.end(), static_cast<std::uint8_t>(0));
        return e;
    }
    element_type multiply(const element_type& p, const element_type& q) const {
        element_type r(static_cast<size_t>(levels_));
        for (int x = 0; x < levels_; ++x)
            r[static_cast<size_t>(x)] = p[q[static_cast<size_t>(x)]];
        return r;
    }
    element_type inverse(const element_type& p) const {
        element_type r(static_cast<size_t>(levels_));
        for (int x = 0; x < levels_; ++x) r[p[static_cast<size_t>(x)]] = static_cast<std::uint8_t>(x);
        return r;
    }

    int levels() const { return levels_; }
    int level_of(const element_type& g) const {
        for (int x = levels_ - 1; x >= 0; --x)
            if (g[static_cast<size_t>(x)] != x) return x + 1;
        return 0;
    }
    std::vector<element_type> reps(int n) const {
        std::vector<element_type> out{identity()};
        for (int j = 0; j < n; ++j) out.push_back(transposition(j, n));
        return out;
    }
    int rep_index(int n, const element_type& r) const {
        if (r == identity()) return 0;
        for (int j = 0; j < n; ++j)
            if (r == transposition(j, n)) return j + 1;
        throw std::invalid_argument("SymTower: not a level representative");
    }
    std::pair<element_type, element_type> factor_top(const element_type& g) const {
        const int top = level_of(g) - 1;
        const element_type r = transposition(static_cast<int>(inverse(g)[static_cast<size_t>(top)]), top);
        return {multiply(g, r), r};  // r is an involution, so g = g0 * r
    }
    std::vector<element_type> subgroup_elements(int n) const {
        element_type base = identity();
        std::vector<element_type> out;
        std::vector<std::uint8_t> head(base.begin(), base.begin() + n);
        do {
            element_type g = base;
            std::copy(head.begin(), head.end(), g.begin());
            out.push_back(std::move(g));
        } while (std::next_permutation(head.begin(), head.end()));
        std::sort(out.begin(), out.end());
        return out;
    }
    std::string describe() const { return "sym-tower[" + std::to_string(levels_) + "]"; }

  private:
    element_type transposition(int a, int b) const {
        element_type t = identity();
        std::swap(t[static_cast<size_t>(a)], t[static_cast<size_t>(b)]);
        return t;
    }
    int levels_;
};

/// Peel representatives off the top: returns [r_top, ..., r_low] with
/// strictly decreasing levels, none equal to the identity, empty for e.
/// Reconstruction multiplies in the reverse (low-to-high) order.
template <CosetTowerLike T>
std::vector<typename T::element_type> tower_factorize(const T& t, typename T::element_type g) {
    if (t.level_of(g) > t.levels())
        throw std::domain_error("tower_factorize: element outside materialized tower");
    std::vector<typename T::element_type> out;
    while (!(g == t.identity())) {
        auto [g0, r] = t.factor_top(g);
        out.push_back(r);
        g = g0;
    }
    return out;
}

template <CosetTowerLike T>
typename T::element_type tower_reconstruct(const T& t,
                                           const std::vector<typename T::element_type>& factors) {
    auto g = t.identity();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) g = t.multiply(g, *it);
    return g;
}

/// Finite-support encoding h(g): the rep index used at each level (0 = e).
template <CosetTowerLike T>
std::vector<int> tower_encode(const T& t, typename T::element_type g) {
    if (t.level_of(g) > t.levels())
        throw std::domain_error("tower_encode: element outside materialized tower");
    std::vector<int> enc(static_cast<size_t>(t.levels()), 0);
    while (!(g == t.identity())) {
        const int top = t.level_of(g) - 1;
        auto [g0, r] = t.factor_top(g);
        enc[static_cast<size_t>(top)] = t.rep_index(top, r);
        g = g0;
    }
    return enc;
}

/// Compare two encodings at the highest level where they differ; the all-e
/// sequence is the global minimum.
inline std::strong_ordering well_order_compare(const std::vector<int>& x, const std::vector<int>& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("well_order_compare: encodings from different towers");
    for (size_t lvl = x.size(); lvl-- > 0;) {
        if (x[lvl] != y[lvl]) return x[lvl] <=> y[lvl];
    }
    return std::strong_ordering::equal;
}

template <CosetTowerLike T>
std::strong_ordering well_order_compare(const T& t, const typename T::element_type& a,
                                        const typename T::element_type& b) {
    return well_order_compare(tower_encode(t, a), tower_encode(t, b));
}

// ---------------------------------------------------------------------------
// Group windows
// ---------------------------------------------------------------------------

/// A finite slice of a group with canonical enumeration order. Balls are
/// exact left-translate sets F*x computed in the group and intersected with
/// the window; a point is safe when its ball never leaves the window.
template <GroupLike G>
class GroupWindow {
  public:
    using group_type = G;
    using point_type = typename G::element_type;
    using scale_type = GroupScale<point_type>;

    GroupWindow(G g, std::vector<point_type> pts) : group_(std::move(g)), points_(std::move(pts)) {
        if (points_.empty()) throw std::invalid_argument("GroupWindow: empty window");
        for (size_t i = 0; i < points_.size(); ++i) {
            if (index_.count(points_[i]))
                throw std::invalid_argument("GroupWindow: duplicate window element");
            index_[points_[i]] = static_cast<int>(i);
        }
    }

    const G& group() const { return group_; }
    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<point_type>& points() const { return points_; }
    bool contains(const point_type& p) const { return index_.count(p) > 0; }
    int index_of(const point_type& p) const {
        auto it = index_.find(p);
        return it == index_.end() ? -1 : it->second;
    }
    const point_type& at(int idx) const { return points_.at(static_cast<size_t>(idx)); }

    /// F*x intersected with the window, in canonical order.
    std::vector<point_type> ball(const point_type& x, const scale_type& f) const {
        require(x);
        std::vector<int> idxs;
        for (const auto& s : f.elements()) {
            int i = index_of(group_.multiply(s, x));
            if (i >= 0) idxs.push_back(i);
        }
        std::sort(idxs.begin(), idxs.end());
        idxs.erase(std::unique(idxs.begin(), idxs.end()), idxs.end());
        std::vector<point_type> out;
        out.reserve(idxs.size());
        for (int i : idxs) out.push_back(points_[static_cast<size_t>(i)]);
        return out;
    }

    bool safe(const point_type& x, const scale_type& f) const {
        require(x);
        for (const auto& s : f.elements())
            if (!contains(group_.multiply(s, x))) return false;
        return true;
    }

    /// (x, y) in E_F  <=>  x y^{-1} in F. Exact, no symmetry assumption.
    bool entourage_contains(const scale_type& f, const point_type& x, const point_type& y) const {
        return f.contains(group_.multiply(x, group_.inverse(y)));
    }

    /// {y in window : (x,y) in E_F} = F^{-1} x intersected with the window.
    std::vector<point_type> entourage_ball(const scale_type& f, const point_type& x) const {
        require(x);
        std::vector<int> idxs;
        for (const auto& s : f.elements()) {
            int i = index_of(group_.multiply(group_.inverse(s), x));
            if (i >= 0) idxs.push_back(i);
        }
        std::sort(idxs.begin(), idxs.end());
        idxs.erase(std::unique(idxs.begin(), idxs.end()), idxs.end());
        std::vector<point_type> out;
        out.reserve(idxs.size());
        for (int i : idxs) out.push_back(points_[static_cast<size_t>(i)]);
        return out;
    }

    bool entourage_safe(const scale_type& f, const point_type& x) const {
        require(x);
        for (const auto& s : f.elements())
            if (!contains(group_.multiply(group_.inverse(s), x))) return false;
        return true;
    }

  private:
    void require(const point_type& x) const {
        if (!contains(x)) throw std::domain_error("GroupWindow: point outside window");
    }

    G group_;
    std::vector<point_type> points_;
    std::map<point_type, int> index_;
};

inline GroupWindow<IntLineGroup> make_int_window(int n) {
    std::vector<long long> pts;
    for (long long k = -n; k <= n; ++k) pts.push_back(k);
    return GroupWindow<IntLineGroup>(IntLineGroup{}, std::move(pts));
}

/// Window of a virtually-Z group: all f_i a^k with |k| <= n, enumerated in
/// the (k, i)-lexicographic order.
inline GroupWindow<VirtuallyZGroup> make_vz_window(const VirtuallyZGroup& g, int n) {
    std::vector<VzElement> pts;
    for (long long k = -n; k <= n; ++k)
        for (int i = 0; i < g.transversal_size(); ++i) pts.push_back({i, k});
    return GroupWindow<VirtuallyZGroup>(g, std::move(pts));
}

/// Asymmetric window variant used when an exact element count is wanted.
inline GroupWindow<VirtuallyZGroup> make_vz_window_range(const VirtuallyZGroup& g, long long klo,
                                                         long long khi) {
    std::vector<VzElement> pts;
    for (long long k = klo; k <= khi; ++k)
        for (int i = 0; i < g.transversal_size(); ++i) pts.push_back({i, k});
    return GroupWindow<VirtuallyZGroup>(g, std::move(pts));
}

template <CosetTowerLike T>
GroupWindow<T> make_tower_window(const T& t, int level) {
    if (level > t.levels()) throw std::invalid_argument("make_tower_window: level beyond tower");
    return GroupWindow<T>(t, t.subgroup_elements(level));
}

inline GroupWindow<FiniteTableGroup> make_finite_window(const FiniteTableGroup& g) {
    std::vector<int> pts(static_cast<size_t>(g.order()));
    std::iota(pts.begin(), pts.end(), 0);
    return GroupWindow<FiniteTableGroup>(g, std::move(pts));
}

/// All f_i a^k with |k| <= n, as a scale (the natural entourage base F_n).
inline GroupScale<VzElement> vz_scale(const VirtuallyZGroup& g, int n) {
    std::vector<VzElement> elems;
    for (int i = 0; i < g.transversal_size(); ++i)
        for (long long k = -n; k <= n; ++k) elems.push_back({i, k});
    return GroupScale<VzElement>(std::move(elems));
}

// ---------------------------------------------------------------------------
// Cayley graphs
// ---------------------------------------------------------------------------

/// Cayley graph of a group window: vertices are canonical window indices,
/// edges {(x,y) : x != y, x y^{-1} in S}. Boundary: window elements whose
/// S-translates leave the window.
template <GroupLike G>
GraphWindow cayley_graph(const GroupWindow<G>& w, const GroupScale<typename G::element_type>& s) {
    if (!s.is_symmetric(w.group()))
        throw std::invalid_argument("cayley_graph: generating set must be symmetric");
    std::vector<std::pair<long long, long long>> edges;
    std::vector<long long> boundary;
    for (int i = 0; i < w.size(); ++i) {
        const auto& x = w.at(i);
        bool truncated = false;
        for (const auto& gen : s.elements()) {
            const auto y = w.group().multiply(gen, x);
            if (y == x) continue;
            int j = w.index_of(y);
            if (j < 0) {
                truncated = true;
                continue;
            }
            if (i < j) edges.emplace_back(i, j);
        }
        if (truncated) boundary.push_back(i);
    }
    return GraphWindow(edges, boundary);
}

// ---------------------------------------------------------------------------
// Structured text config
// ---------------------------------------------------------------------------

struct GroupConfig {
    enum class Variant { Finite, VirtuallyZ, SumZ2, SymTower } variant = Variant::Finite;
    std::optional<FiniteTableGroup> finite;
    std::optional<VirtuallyZGroup> vz;
    int levels = 4;
};

namespace detail {
inline std::string config_error(int lineno, const std::string& what) {
    return "group config line " + std::to_string(lineno) + ": " + what;
}
}  // namespace detail

/// Parse the structured text group config. Lines are `key value...`;
/// `table`, `sigma` and `cocycle` start integer blocks. '#' comments.
inline GroupConfig load_group_config(std::istream& in) {
    GroupConfig cfg;
    std::string variant;
    int order = 0, transversal = 0, levels = 0;
    std::vector<std::vector<int>> table, sigma;
    std::vector<std::vector<long long>> cocycle;
    std::vector<int> action;

    std::string line;
    int lineno = 0;
    std::string block;
    int block_rows = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;

        if (!block.empty()) {
            // inside an integer block; this line is one row
            std::istringstream row(line);
            if (block == "table" || block == "sigma") {
                std::vector<int> r;
                int v;
                while (row >> v) r.push_back(v);
                (block == "table" ? table : sigma).push_back(std::move(r));
            } else {
                std::vector<long long> r;
                long long v;
                while (row >> v) r.push_back(v);
                cocycle.push_back(std::move(r));
            }
            if (--block_rows == 0) block.clear();
            continue;
        }

        if (head == "variant") {
            if (!(ls >> variant)) throw std::invalid_argument(detail::config_error(lineno, "missing variant name"));
        } else if (head == "order") {
            if (!(ls >> order) || order < 1) throw std::invalid_argument(detail::config_error(lineno, "bad order"));
        } else if (head == "transversal") {
            if (!(ls >> transversal) || transversal < 1)
                throw std::invalid_argument(detail::config_error(lineno, "bad transversal size"));
        } else if (head == "levels") {
            if (!(ls >> levels) || levels < 1) throw std::invalid_argument(detail::config_error(lineno, "bad levels"));
        } else if (head == "action") {
            int v;
            while (ls >> v) action.push_back(v);
        } else if (head == "table" || head == "sigma" || head == "cocycle") {
            block = head;
            block_rows = (head == "table") ? order : transversal;
            if (block_rows <= 0)
                throw std::invalid_argument(
                    detail::config_error(lineno, head + " block before its size was declared"));
        } else {
            throw std::invalid_argument(detail::config_error(lineno, "unknown key '" + head + "'"));
        }
    }
    if (!block.empty())
        throw std::invalid_argument(detail::config_error(lineno, "unterminated " + block + " block"));

    try {
        if (variant == "finite") {
            if (static_cast<int>(table.size()) != order)
                throw std::invalid_argument("table row count != order");
            cfg.variant = GroupConfig::Variant::Finite;
            cfg.finite.emplace(FiniteTableGroup(table));
        } else if (variant == "virtually-z") {
            if (static_cast<int>(action.size()) != transversal)
                throw std::invalid_argument("action sign count != transversal size");
            cfg.variant = GroupConfig::Variant::VirtuallyZ;
            cfg.vz.emplace(VirtuallyZGroup(action, sigma, cocycle));
        } else if (variant == "sum-z2") {
            cfg.variant = GroupConfig::Variant::SumZ2;
            cfg.levels = levels > 0 ? levels : 4;
        } else if (variant == "sym-tower") {
            cfg.variant = GroupConfig::Variant::SymTower;
            cfg.levels = levels > 0 ? levels : 4;
        } else {
            throw std::invalid_argument("unknown variant '" + variant + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("group config: " + std::string(e.what()));
    }
    return cfg;
}

inline GroupConfig load_group_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("group config: cannot open " + path);
    return load_group_config(in);
}

}  // namespace coarse
