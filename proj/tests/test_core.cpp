#include <doctest.h>

#include "coarse/core.hpp"
#include "coarse/enumerate.hpp"
#include "coarse/graph.hpp"
#include "coarse/group.hpp"
#include "coarse/selector.hpp"

using namespace coarse;

namespace {

std::vector<long long> ll(std::initializer_list<long long> xs) { return {xs}; }

HyperPoint<long long> hp(std::initializer_list<long long> xs) {
    return HyperPoint<long long>(std::vector<long long>{xs});
}

// independent Hausdorff oracle: plain max-min over |a - b|
int naive_hausdorff(const std::vector<long long>& a, const std::vector<long long>& b) {
    auto directed = [](const std::vector<long long>& from, const std::vector<long long>& to) {
        long long worst = 0;
        for (long long x : from) {
            long long best = std::numeric_limits<long long>::max();
            for (long long y : to) best = std::min(best, std::llabs(x - y));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return static_cast<int>(std::max(directed(a, b), directed(b, a)));
}

}  // namespace

TEST_CASE("hyperpoints and scales reject empty sets") {
    CHECK_THROWS_AS(HyperPoint<long long>({}), std::invalid_argument);
    CHECK_THROWS_AS(GroupScale<long long>(std::vector<long long>{}), std::invalid_argument);
    CHECK_THROWS_AS(MetricScale(-1), std::invalid_argument);
}

TEST_CASE("metric balls on the integer line") {
    const GraphWindow line = make_line(10);
    CHECK(line.ball(0, MetricScale(2)) == ll({-2, -1, 0, 1, 2}));
    CHECK(line.ball(5, MetricScale(0)) == ll({5}));
    CHECK_THROWS_AS(line.ball(99, MetricScale(1)), std::domain_error);
}

TEST_CASE("finitary balls") {
    const GroupWindow<IntLineGroup> zwin = make_int_window(10);
    const auto f = GroupScale<long long>::normalized(zwin.group(), {1});
    CHECK(f.elements() == ll({-1, 0, 1}));
    CHECK(zwin.ball(5, f) == ll({4, 5, 6}));
    CHECK(zwin.ball(5, GroupScale<long long>(ll({0}))) == ll({5}));

    const SumZ2Tower t(5);
    const GroupWindow<SumZ2Tower> gw = make_tower_window(t, 5);
    const GroupScale<std::uint32_t> g2(t.subgroup_elements(2));
    const auto b = gw.ball(t.identity(), g2);
    CHECK(b.size() == 4);
    CHECK(b == t.subgroup_elements(2));
}

TEST_CASE("scale composition and inversion") {
    CHECK(compose_scales(MetricScale(2), MetricScale(3)) == MetricScale(5));
    CHECK(invert_scale(MetricScale(4)) == MetricScale(4));

    const IntLineGroup z;
    const GroupScale<long long> f01(ll({0, 1}));
    const GroupScale<long long> f0m1(ll({0, -1}));
    CHECK(compose_scales(z, f01, f0m1).elements() == ll({-1, 0, 1}));
    CHECK(invert_scale(z, f01).elements() == ll({-1, 0}));

    const auto sym = GroupScale<long long>::normalized(z, {3, 1});
    CHECK(invert_scale(z, sym) == sym);

    // neutral scale
    const GroupScale<long long> idscale(ll({0}));
    CHECK(compose_scales(z, f01, idscale) == f01);
}

TEST_CASE("entourage identities hold pointwise on a window") {
    const IntLineGroup z;
    const GroupWindow<IntLineGroup> w = make_int_window(10);
    const GroupScale<long long> f(ll({0, 1, 3}));
    const GroupScale<long long> g(ll({-2, 0, 1}));
    const auto fg = compose_scales(z, f, g);
    const auto finv = invert_scale(z, f);
    for (long long x = -10; x <= 10; ++x) {
        for (long long y = -10; y <= 10; ++y) {
            bool composed = false;
            // the witness z ranges over the group, not just the window
            for (long long mid = -14; mid <= 14 && !composed; ++mid)
                composed = f.contains(x - mid) && g.contains(mid - y);
            CHECK(w.entourage_contains(fg, x, y) == composed);
            CHECK(w.entourage_contains(finv, x, y) == w.entourage_contains(f, y, x));
        }
    }
}

TEST_CASE("scale algebra soundness: composed balls are unions of balls") {
    const SumZ2Tower t(4);
    const GroupWindow<SumZ2Tower> w = make_tower_window(t, 4);
    const GroupScale<std::uint32_t> f({0u, 1u, 2u});
    const GroupScale<std::uint32_t> g({0u, 4u, 8u});
    const auto fg = compose_scales(t, f, g);
    for (const auto& x : w.points()) {
        std::vector<std::uint32_t> lhs = w.ball(x, fg);
        std::vector<std::uint32_t> rhs;
        for (const auto& z : w.ball(x, g))
            for (const auto& y : w.ball(z, f)) rhs.push_back(y);
        std::sort(rhs.begin(), rhs.end());
        rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("identity in the scale keeps the center in its ball") {
    const GroupWindow<IntLineGroup> w = make_int_window(8);
    const auto f = GroupScale<long long>::normalized(w.group(), {2, 5});
    for (long long x = -3; x <= 3; ++x) {
        const auto b = w.ball(x, f);
        CHECK(std::find(b.begin(), b.end(), x) != b.end());
    }
}

TEST_CASE("hausdorff distance basics") {
    const GraphWindow line = make_line(12);
    CHECK(hausdorff_distance(line, hp({0}), hp({0, 3})) == 3);
    CHECK(hausdorff_distance(line, hp({-2, 4, 7}), hp({-2, 4, 7})) == 0);
    // frozen from the four point distances: d(0,1)=1 d(0,4)=4 d(5,1)=4 d(5,4)=1
    CHECK(hausdorff_distance(line, hp({0, 5}), hp({1, 4})) == 1);
}

TEST_CASE("hausdorff is a metric on the hyperspace of a 6-point window") {
    const GraphWindow line = make_line(10);
    std::vector<long long> pool;
    for (long long x = -3; x <= 2; ++x) pool.push_back(x);
    const auto family = all_nonempty_subsets(pool);  // 63 sets
    for (size_t i = 0; i < family.size(); ++i) {
        for (size_t j = 0; j < family.size(); ++j) {
            const int dij = hausdorff_distance(line, family[i], family[j]);
            CHECK(dij == naive_hausdorff(family[i].elems, family[j].elems));
            CHECK(dij == hausdorff_distance(line, family[j], family[i]));
            CHECK((dij == 0) == (family[i] == family[j]));
            for (size_t k = 0; k < family.size(); ++k) {
                const int dik = hausdorff_distance(line, family[i], family[k]);
                const int dkj = hausdorff_distance(line, family[k], family[j]);
                CHECK(dij <= dik + dkj);
            }
        }
    }
}

TEST_CASE("hyper closeness") {
    const GraphWindow line = make_line(10);
    CHECK(hyper_close(line, hp({-1, 2}), hp({-1, 2}), MetricScale(1)));
    CHECK_FALSE(hyper_close(line, hp({0}), hp({3}), MetricScale(2)));
    CHECK(hyper_close(line, hp({0}), hp({3}), MetricScale(3)));
    CHECK_THROWS_AS(hyper_close(line, hp({9}), hp({10}), MetricScale(2)), std::domain_error);
}

TEST_CASE("hyper closeness at metric scale r coincides with d_H <= r") {
    const GraphWindow line = make_line(10);
    std::vector<long long> pool;
    for (long long x = -3; x <= 3; ++x) pool.push_back(x);
    const auto family = all_nonempty_subsets(pool);  // 127 sets
    for (int r = 1; r <= 3; ++r) {
        for (size_t i = 0; i < family.size(); ++i)
            for (size_t j = i; j < family.size(); ++j) {
                const bool close = hyper_close(line, family[i], family[j], MetricScale(r));
                const bool near = hausdorff_distance(line, family[i], family[j]) <= r;
                CHECK(close == near);
            }
    }
}

TEST_CASE("modulus of the max selector") {
    const GraphWindow ambient = make_line(12);
    std::vector<long long> pool;
    for (long long x = -4; x <= 4; ++x) pool.push_back(x);
    const auto family = all_nonempty_subsets(pool);  // 511 sets
    const auto f = max_selector_map();
    const auto m = modulus_estimate(ambient, ambient, f, family, MetricScale(1));
    CHECK_FALSE(m.unbounded_on_window);
    CHECK(m.scale.radius == 1);
}

TEST_CASE("modulus of a constant map is zero") {
    const GraphWindow ambient = make_line(8);
    std::vector<long long> pool;
    for (long long x = -2; x <= 2; ++x) pool.push_back(x);
    const auto family = all_nonempty_subsets(pool);
    auto constant = [](const HyperPoint<long long>&) -> long long { return 0; };
    const auto m = modulus_estimate(ambient, ambient, constant, family, MetricScale(2));
    CHECK(m.scale.radius == 0);
    CHECK_FALSE(m.unbounded_on_window);
}

TEST_CASE("modulus is monotone in the input scale") {
    const GraphWindow ambient = make_line(12);
    std::vector<long long> pool;
    for (long long x = -4; x <= 4; ++x) pool.push_back(x);
    const auto family = all_nonempty_subsets(pool);
    const auto f = max_selector_map();
    std::vector<MetricScale> chain{MetricScale(1), MetricScale(2), MetricScale(3), MetricScale(4)};
    const auto prof = modulus_profile(ambient, ambient, f, family, chain);
    for (size_t i = 0; i + 1 < prof.table.size(); ++i)
        CHECK(prof.table[i].second.scale.radius <= prof.table[i + 1].second.scale.radius);
    // shrinking the family cannot increase the modulus
    std::vector<HyperPoint<long long>> half(family.begin(), family.begin() + family.size() / 2);
    const auto m_half = modulus_estimate(ambient, ambient, f, half, MetricScale(2));
    const auto m_full = modulus_estimate(ambient, ambient, f, family, MetricScale(2));
    CHECK(m_half.scale.radius <= m_full.scale.radius);
}

TEST_CASE("a non-macro-uniform candidate reports unbounded on window") {
    const GraphWindow ambient = make_line(12);
    std::vector<long long> pool;
    for (long long x = -4; x <= 4; ++x) pool.push_back(x);
    const auto family = all_nonempty_subsets(pool);
    // jumps across the window whenever 0 enters the set
    auto jumpy = [](const HyperPoint<long long>& a) -> long long {
        return a.contains(0) ? a.elems.front() : a.elems.back();
    };
    const auto m = modulus_estimate(ambient, ambient, jumpy, family, MetricScale(1), 3);
    CHECK(m.unbounded_on_window);
}

TEST_CASE("group-codomain modulus of the tower selector is the exact subgroup") {
    const SumZ2Tower t(5);
    const GroupWindow<SumZ2Tower> w = make_tower_window(t, 5);
    std::vector<HyperPoint<std::uint32_t>> family;
    for (const auto& x : w.points()) family.push_back(HyperPoint<std::uint32_t>({x}));
    for (const auto& s : sample_nonempty_subsets(w.points(), 200, 7))
        family.push_back(s);
    const auto f = well_order_selector_map(t);
    for (int k = 1; k <= 3; ++k) {
        const GroupScale<std::uint32_t> gk(t.subgroup_elements(k));
        const auto m = modulus_estimate(w, w, f, family, gk);
        CHECK_FALSE(m.unbounded_on_window);
        CHECK(m.scale == gk);
    }
}

TEST_CASE("selector checks") {
    std::vector<long long> pool;
    for (long long x = -4; x <= 4; ++x) pool.push_back(x);
    const auto family = all_nonempty_subsets(pool);
    CHECK(is_selector(max_selector_map(), family));
    auto escapes = [](const HyperPoint<long long>& a) { return a.elems.front() - 1; };
    CHECK_FALSE(is_selector(escapes, family));
    CHECK(find_selector_violation(escapes, family).has_value());
}

TEST_CASE("largeness") {
    const GraphWindow line = make_line(10);
    std::vector<long long> evens, all;
    for (long long x = -10; x <= 10; ++x) {
        all.push_back(x);
        if (x % 2 == 0) evens.push_back(x);
    }
    CHECK(is_large(line, evens, MetricScale(1)).large);
    CHECK(is_large(line, all, MetricScale(0)).large);
    const auto r = is_large(line, ll({0}), MetricScale(3));
    CHECK_FALSE(r.large);
    CHECK(r.uncovered.has_value());
}

TEST_CASE("transfer along the identity returns the same selector values") {
    const GraphWindow line = make_line(8);
    auto ident = [](long long x) { return x; };
    const auto g = transfer_selector(line, line, ident, ident, max_selector_map());
    std::vector<long long> pool;
    for (long long x = -3; x <= 3; ++x) pool.push_back(x);
    for (const auto& a : all_nonempty_subsets(pool)) CHECK(g(a) == max_selector(a));
}

TEST_CASE("transfer along negation turns max into min") {
    const GraphWindow line = make_line(8);
    auto neg = [](long long x) { return -x; };
    const auto g = transfer_selector(line, line, neg, neg, max_selector_map());
    std::vector<long long> pool;
    for (long long x = -6; x <= 6; ++x) pool.push_back(x);
    const auto family = sample_nonempty_subsets(pool, 50, 42);
    for (const auto& a : family) CHECK(g(a) == a.elems.front());
    CHECK(is_selector(g, family));
}

TEST_CASE("transfer rejects non-bijections") {
    const GraphWindow line = make_line(4);
    auto collapse = [](long long) -> long long { return 0; };
    auto ident = [](long long x) { return x; };
    CHECK_THROWS_AS(transfer_selector(line, line, collapse, ident, max_selector_map()),
                    std::invalid_argument);
}
