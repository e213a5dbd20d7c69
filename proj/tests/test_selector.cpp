#include <doctest.h>

#include "coarse/enumerate.hpp"
#include "coarse/selector.hpp"

using namespace coarse;

namespace {

HyperPoint<long long> hp(std::initializer_list<long long> xs) {
    return HyperPoint<long long>(std::vector<long long>{xs});
}

}  // namespace

TEST_CASE("max selector basics") {
    CHECK(max_selector(hp({-3, 5, 7})) == 7);
    CHECK(max_selector(hp({4})) == 4);
}

TEST_CASE("max selector modulus bound holds for every scale up to the window radius") {
    const GraphWindow ambient = make_line(10);
    std::vector<long long> pool;
    for (long long x = -4; x <= 4; ++x) pool.push_back(x);
    const auto family = all_nonempty_subsets(pool);
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j) {
            const int dh = hausdorff_distance(ambient, family[i], family[j]);
            const long long gap = std::llabs(max_selector(family[i]) - max_selector(family[j]));
            CHECK(gap <= dh);
        }
}

TEST_CASE("well order selector picks the encoding minimum") {
    const SumZ2Tower t(4);
    // e is the global minimum whenever present
    CHECK(well_order_selector(t, HyperPoint<std::uint32_t>({5u, 0u, 9u})) == 0u);
    // G_2 minus the identity: support {0} beats supports {1} and {0,1}
    CHECK(well_order_selector(t, HyperPoint<std::uint32_t>({1u, 2u, 3u})) == 1u);
}

TEST_CASE("well order selector is a selector on every subset of the level-3 window") {
    const SumZ2Tower t(3);
    const GroupWindow<SumZ2Tower> w = make_tower_window(t, 3);
    const auto family = all_nonempty_subsets(w.points());  // 255 sets
    CHECK(is_selector(well_order_selector_map(t), family));
}

TEST_CASE("well order selector respects subgroup scales on the sym tower too") {
    const SymTower t(4);
    const GroupWindow<SymTower> w = make_tower_window(t, 4);
    const auto f = well_order_selector_map(t);
    const auto family = sample_nonempty_subsets(w.points(), 120, 3);
    CHECK(is_selector(f, family));
    for (int k = 1; k <= 3; ++k) {
        const GroupScale<SymTower::element_type> gk(t.subgroup_elements(k));
        for (size_t i = 0; i < family.size(); ++i)
            for (size_t j = i + 1; j < family.size(); ++j) {
                if (!hyper_close(w, family[i], family[j], gk)) continue;
                const auto q = t.multiply(f(family[j]), t.inverse(f(family[i])));
                CHECK(gk.contains(q));
            }
    }
}

TEST_CASE("pair orientation induced by the max selector is a total order") {
    const GraphWindow line = make_line(6);
    const auto prec = prec_of(line, max_selector_map());
    CHECK(is_transitive_tournament(prec));
    // a before b iff f({a,b}) = a iff a > b
    const int i2 = line.index_of(2), i5 = line.index_of(5);
    CHECK(prec.before(i5, i2));
    CHECK_FALSE(prec.before(i2, i5));
}

TEST_CASE("tournament and 2-selector are inverse on pairs") {
    const GraphWindow line = make_line(4);
    const auto prec = prec_of(line, max_selector_map());
    const auto f2 = selector_from_tournament(line, prec);
    for (long long a = -4; a <= 4; ++a)
        for (long long b = a + 1; b <= 4; ++b) CHECK(f2(hp({a, b})) == std::max(a, b));
    const auto prec2 = prec_of(line, f2);
    for (int i = 0; i < prec.size(); ++i)
        for (int j = 0; j < prec.size(); ++j)
            if (i != j) CHECK(prec.before(i, j) == prec2.before(i, j));
}

TEST_CASE("a cyclic tournament is not transitive") {
    const GraphWindow tri = make_complete(3);
    PrecRelation cyc(3);
    cyc.set_before(0, 1);
    cyc.set_before(1, 2);
    cyc.set_before(2, 0);
    CHECK_FALSE(is_transitive_tournament(cyc));
}

TEST_CASE("virtually-z order") {
    CHECK(virtually_z_compare({0, -1}, {1, -1}) < 0);
    CHECK(virtually_z_compare({1, -1}, {0, 0}) < 0);
    CHECK(virtually_z_compare({1, 3}, {1, 3}) == 0);

    const VirtuallyZGroup d = VirtuallyZGroup::dinf();
    const GroupWindow<VirtuallyZGroup> w = make_vz_window(d, 10);  // 42 elements
    const auto& pts = w.points();
    for (const auto& a : pts)
        for (const auto& b : pts) {
            const auto ab = virtually_z_compare(a, b);
            CHECK((ab == 0) == (a == b));
            if (ab < 0) CHECK(virtually_z_compare(b, a) > 0);
        }
}

TEST_CASE("metric balls on Z are order intervals") {
    const GraphWindow line = make_line(12);
    const auto order = natural_order_graph(line);
    for (int r = 1; r <= 4; ++r) CHECK(is_interval_entourage(line, MetricScale(r), order).interval);
}

TEST_CASE("a scrambled order breaks intervality with a witness") {
    const GroupWindow<IntLineGroup> w = make_int_window(8);
    const GraphWindow line = make_line(8);
    const auto order = zigzag_order(w);
    std::vector<long long> by_rank = order.by_rank();
    const auto rep =
        is_interval_entourage(line, MetricScale(1), LinearOrder<long long>(by_rank, "zigzag"));
    CHECK_FALSE(rep.interval);
    CHECK(rep.witness_center.has_value());
    CHECK(rep.witness_gap.has_value());
}

TEST_CASE("dinf entourage balls are intervals in the vz order") {
    const VirtuallyZGroup d = VirtuallyZGroup::dinf();
    const GroupWindow<VirtuallyZGroup> w = make_vz_window(d, 30);
    const auto order = vz_order(w);
    for (int n = 0; n <= 5; ++n)
        CHECK(is_interval_entourage(w, vz_scale(d, n), order).interval);
}

TEST_CASE("dinf interval containments with the derived constant") {
    const VirtuallyZGroup d = VirtuallyZGroup::dinf();
    const int big = 40;
    const GroupWindow<VirtuallyZGroup> w = make_vz_window(d, big);
    const auto order = vz_order(w);
    const long long dd = d.derived_d();
    const int m_top = d.transversal_size() - 1;
    for (int n = 0; n <= 4; ++n) {
        const auto fn = vz_scale(d, n);
        for (const auto& x : w.points()) {
            if (std::llabs(x.power) + n + dd + 1 > big) continue;
            // ball inside [f_0 a^{k-n-d}, f_m a^{k+n+d}]
            const int lo = order.rank(VzElement{0, x.power - n - dd});
            const int hi = order.rank(VzElement{m_top, x.power + n + dd});
            for (const auto& y : w.entourage_ball(fn, x)) {
                const int ry = order.rank(y);
                CHECK(ry >= lo);
                CHECK(ry <= hi);
            }
            // [f_0 a^{k-n}, f_m a^{k+n}] inside F_n a^k
            const int lo2 = order.rank(VzElement{0, x.power - n});
            const int hi2 = order.rank(VzElement{m_top, x.power + n});
            for (int r = lo2; r <= hi2; ++r) {
                const VzElement y = order.by_rank()[static_cast<size_t>(r)];
                const auto q = d.multiply(y, d.inverse(VzElement{0, x.power}));
                CHECK(fn.contains(q));
            }
        }
    }
}

TEST_CASE("interval structure implies compatibility on Z") {
    const GraphWindow line = make_line(20);
    const auto order = natural_order_graph(line);
    std::vector<MetricScale> tested{MetricScale(1), MetricScale(2), MetricScale(3)};
    std::vector<MetricScale> candidates;
    for (int r = 0; r <= 19; ++r) candidates.emplace_back(r);
    const auto rep = is_compatible_order(line, tested, candidates, order);
    CHECK(rep.compatible);
    for (const auto& [e, f] : rep.certificates) {
        REQUIRE(f.has_value());
        CHECK(candidates[*f].radius == e.radius);  // F = E already certifies
    }
}

TEST_CASE("the zigzag order on Z is incompatible at every decisive window scale") {
    // candidate scales are capped at the range the window can still refute:
    // beyond ~W/3 a violating pair no longer fits inside the safe core
    const GroupWindow<IntLineGroup> zw = make_int_window(30);
    const GraphWindow line = make_line(30);
    const auto order = zigzag_order(zw);
    std::vector<MetricScale> tested{MetricScale(1)};
    std::vector<MetricScale> candidates;
    for (int r = 1; r <= 10; ++r) candidates.emplace_back(r);
    const auto rep = is_compatible_order(line, tested, candidates, order);
    CHECK_FALSE(rep.compatible);
    CHECK(rep.inconclusive);  // refuted only up to the window's chain
    CHECK(rep.witness.has_value());
}

TEST_CASE("interval entourages certify their own compatibility on dinf") {
    const VirtuallyZGroup d = VirtuallyZGroup::dinf();
    const GroupWindow<VirtuallyZGroup> w = make_vz_window(d, 24);
    const auto order = vz_order(w);
    std::vector<GroupScale<VzElement>> tested, candidates;
    for (int n = 0; n <= 3; ++n) tested.push_back(vz_scale(d, n));
    for (int n = 0; n <= 8; ++n) candidates.push_back(vz_scale(d, n));
    const auto rep = is_compatible_order(w, tested, candidates, order);
    CHECK(rep.compatible);
    for (size_t i = 0; i < rep.certificates.size(); ++i) {
        REQUIRE(rep.certificates[i].second.has_value());
        // every interval entourage is certified by itself
        CHECK(*rep.certificates[i].second == i);
    }
}

TEST_CASE("compatibility of the tower order over subgroup scales") {
    const SumZ2Tower t(5);
    const GroupWindow<SumZ2Tower> w = make_tower_window(t, 5);
    const auto order = tower_order(w);
    std::vector<GroupScale<std::uint32_t>> scales;
    for (int k = 1; k <= 5; ++k) scales.emplace_back(t.subgroup_elements(k));
    const auto rep = is_compatible_order(w, scales, scales, order);
    CHECK(rep.compatible);
}

TEST_CASE("user-supplied orders load as window permutations") {
    const GraphWindow line = make_line(2);  // points -2..2
    const auto ord = LinearOrder<long long>::from_permutation(line, {4, 3, 2, 1, 0}, "reversed");
    CHECK(ord.less(2, -2));
    CHECK_THROWS_AS(LinearOrder<long long>::from_permutation(line, {0, 0, 1, 2, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(LinearOrder<long long>::from_permutation(line, {0, 1}), std::invalid_argument);
}
