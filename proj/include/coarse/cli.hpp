// cli.hpp -- command line front end: classify / verify-selector /
// check-order / refute, with JSON-lines reports.
//
// Exit codes: 0 pass, 1 fail (for refute commands "fail" means the selector
// hypothesis failed, i.e. the refutation succeeded), 2 inconclusive,
// 3 usage or config error.

#pragma once

#include "coarse/core.hpp"
#include "coarse/enumerate.hpp"
#include "coarse/graph.hpp"
#include "coarse/group.hpp"
#include "coarse/refute.hpp"
#include "coarse/report.hpp"
#include "coarse/selector.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>

namespace coarse::cli {

struct GlobalOpts {
    int window = 0;   // 0: per-command default
    int margin = 2;
    std::uint64_t seed = 1;
    std::string format = "json";
    bool certificates = false;
};

inline void emit(const Report& rep, const GlobalOpts& g, std::ostream& out) {
    if (g.format == "text")
        out << rep.to_text() << "\n";
    else
        out << rep.to_json().dump() << "\n";
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

struct ClassifyOpts {
    int line = 0, ray = 0, tripod = 0, grid = 0;
    std::string edges;
};

inline Report cmd_classify(const ClassifyOpts& o) {
    Report rep;
    rep.command = "classify";
    GraphWindow g = [&]() -> GraphWindow {
        if (o.line > 0) {
            rep.inputs["line"] = o.line;
            return make_line(o.line);
        }
        if (o.ray > 0) {
            rep.inputs["ray"] = o.ray;
            return make_ray(o.ray);
        }
        if (o.tripod > 0) {
            rep.inputs["tripod"] = o.tripod;
            return make_tripod(o.tripod);
        }
        if (o.grid > 0) {
            rep.inputs["grid"] = o.grid;
            return make_grid(o.grid);
        }
        if (!o.edges.empty()) {
            rep.inputs["edges"] = o.edges;
            std::ifstream in(o.edges);
            if (!in) throw std::invalid_argument("classify: cannot open " + o.edges);
            return GraphWindow::from_edge_list(in);
        }
        throw CLI::ValidationError("classify: choose one of --line/--ray/--tripod/--grid/--edges");
    }();

    const ShapeClass shape = classify_shape(g);
    rep.evidence["shape"] = to_string(shape.kind);
    rep.evidence["ends"] = shape.ends;
    rep.evidence["spheres_bounded"] = shape.spheres_bounded;
    rep.evidence["sphere_bound"] = shape.sphere_bound;
    if (!shape.note.empty()) rep.evidence["note"] = shape.note;
    rep.verdict = shape.inconclusive ? Verdict::Inconclusive : Verdict::Pass;
    return rep;
}

// ---------------------------------------------------------------------------
// verify-selector
// ---------------------------------------------------------------------------

struct VerifySelectorOpts {
    std::string group = "z";
    std::string selector = "max";
    int scale = 3;
    int sample = 400;
};

namespace detail {

inline Report verify_on_int_line(const VerifySelectorOpts& o, const GlobalOpts& g, bool transfer) {
    Report rep;
    rep.command = "verify-selector";
    const int w = g.window > 0 ? g.window : 4;
    // the family window plus a safe band wide enough for every tested scale
    const GraphWindow ambient = make_line(w + std::max(g.margin, o.scale + 1));
    std::vector<long long> pool;
    for (long long x = -w; x <= w; ++x) pool.push_back(x);
    const auto family = (2 * w + 1 <= 12)
                            ? all_nonempty_subsets(pool)
                            : sample_nonempty_subsets(pool, o.sample, g.seed);
    rep.inputs["family"] = family.size();
    rep.inputs["window"] = w;

    CoarseMap<HyperPoint<long long>, long long> f = max_selector_map();
    if (transfer) {
        auto neg = [](long long x) { return -x; };
        f = transfer_selector(ambient, ambient, neg, neg, max_selector_map(), "max via negation");
    }
    const bool selector_ok = is_selector(f, family);
    rep.evidence["selector"] = selector_ok;
    bool bounded = true;
    nlohmann::json moduli = nlohmann::json::object();
    for (int s = 1; s <= o.scale; ++s) {
        auto m = modulus_estimate(ambient, ambient, f, family, MetricScale(s));
        moduli[std::to_string(s)] = m.scale.radius;
        bounded = bounded && !m.unbounded_on_window;
    }
    rep.evidence["moduli"] = moduli;
    rep.verdict = (selector_ok && bounded) ? Verdict::Pass : Verdict::Fail;
    return rep;
}

template <CosetTowerLike T>
Report verify_on_tower(const T& tower, const VerifySelectorOpts& o, const GlobalOpts& g) {
    using E = typename T::element_type;
    Report rep;
    rep.command = "verify-selector";
    const int level = g.window > 0 ? std::min(g.window, tower.levels()) : tower.levels();
    const GroupWindow<T> win = make_tower_window(tower, level);
    rep.inputs["group"] = tower.describe();
    rep.inputs["level"] = level;

    const auto family = (win.size() <= 12)
                            ? all_nonempty_subsets(win.points())
                            : sample_nonempty_subsets(win.points(), o.sample, g.seed);
    rep.inputs["family"] = family.size();

    const auto f = well_order_selector_map(win.group());
    const bool selector_ok = is_selector(f, family);
    rep.evidence["selector"] = selector_ok;

    const int k = std::min(o.scale, level);
    const auto gk = GroupScale<E>(win.group().subgroup_elements(k));
    auto m = modulus_estimate(win, win, f, family, gk);
    bool within = !m.unbounded_on_window;
    for (const E& q : m.scale.elements())
        if (!gk.contains(q)) within = false;
    rep.evidence["scale_level"] = k;
    rep.evidence["modulus_size"] = m.scale.size();
    rep.evidence["modulus_within_subgroup"] = within;
    rep.verdict = (selector_ok && within) ? Verdict::Pass : Verdict::Fail;
    return rep;
}

}  // namespace detail

inline Report cmd_verify_selector(const VerifySelectorOpts& o, const GlobalOpts& g) {
    if (o.selector == "max" || o.selector == "transfer") {
        if (o.group != "z")
            throw CLI::ValidationError("verify-selector: --selector " + o.selector +
                                       " requires --group z");
        Report rep = detail::verify_on_int_line(o, g, o.selector == "transfer");
        rep.inputs["group"] = "z";
        rep.inputs["selector"] = o.selector;
        return rep;
    }
    if (o.selector == "tower") {
        Report rep;
        if (o.group == "sum-z2") {
            const int levels = g.window > 0 ? g.window : 4;
            rep = detail::verify_on_tower(SumZ2Tower(levels), o, g);
        } else if (o.group == "sym-tower") {
            const int levels = g.window > 0 ? g.window : 4;
            rep = detail::verify_on_tower(SymTower(levels), o, g);
        } else if (o.group.rfind("table:", 0) == 0) {
            const GroupConfig cfg = load_group_config_file(o.group.substr(6));
            if (cfg.variant == GroupConfig::Variant::SumZ2)
                rep = detail::verify_on_tower(SumZ2Tower(cfg.levels), o, g);
            else if (cfg.variant == GroupConfig::Variant::SymTower)
                rep = detail::verify_on_tower(SymTower(cfg.levels), o, g);
            else
                throw CLI::ValidationError("verify-selector: config group has no tower selector");
        } else {
            throw CLI::ValidationError(
                "verify-selector: --selector tower needs sum-z2, sym-tower, or a tower config");
        }
        rep.inputs["selector"] = "tower";
        return rep;
    }
    throw CLI::ValidationError("verify-selector: unknown selector " + o.selector);
}

// ---------------------------------------------------------------------------
// check-order
// ---------------------------------------------------------------------------

struct CheckOrderOpts {
    std::string group = "z";
    std::string order = "natural";
    bool interval = false;
    bool compatible = false;
    int scale = 3;
};

namespace detail {

inline std::vector<int> load_order_permutation(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("check-order: cannot open " + path);
    std::vector<int> perm;
    int v;
    while (in >> v) perm.push_back(v);
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("check-order: order file must list all " + std::to_string(n) +
                                    " window indices");
    return perm;
}

inline Report check_order_int(const CheckOrderOpts& o, const GlobalOpts& g) {
    Report rep;
    rep.command = "check-order";
    const int w = g.window > 0 ? g.window : 20;
    const GraphWindow line = make_line(w);
    const GroupWindow<IntLineGroup> win = make_int_window(w);
    rep.inputs["group"] = "z";
    rep.inputs["window"] = w;
    rep.inputs["order"] = o.order;

    LinearOrder<long long> order = [&]() {
        if (o.order == "natural") return natural_order(win);
        if (o.order == "zigzag") return zigzag_order(win);
        if (o.order.rfind("file:", 0) == 0)
            return LinearOrder<long long>::from_permutation(
                line, load_order_permutation(o.order.substr(5), line.size()));
        throw CLI::ValidationError("check-order: unknown order " + o.order);
    }();

    if (o.interval) {
        bool all = true;
        nlohmann::json per = nlohmann::json::object();
        for (int s = 1; s <= o.scale; ++s) {
            auto r = is_interval_entourage(line, MetricScale(s), order);
            per[std::to_string(s)] = r.interval;
            if (!r.interval && r.witness_center)
                rep.evidence["witness"] = {{"center", *r.witness_center}, {"gap", *r.witness_gap}};
            all = all && r.interval;
        }
        rep.evidence["interval"] = per;
        rep.verdict = all ? Verdict::Pass : Verdict::Fail;
        return rep;
    }
    std::vector<MetricScale> tested, candidates;
    for (int s = 1; s <= o.scale; ++s) tested.emplace_back(s);
    for (int s = 0; s <= std::max(o.scale, w / 3); ++s) candidates.emplace_back(s);
    auto r = is_compatible_order(line, tested, candidates, order);
    nlohmann::json certs = nlohmann::json::object();
    for (const auto& [e, f] : r.certificates)
        certs[std::to_string(e.radius)] = f ? nlohmann::json(candidates[*f].radius) : nlohmann::json();
    rep.evidence["certifying_scales"] = certs;
    if (r.witness)
        rep.evidence["witness"] = {{"x", (*r.witness)[0]}, {"y", (*r.witness)[1]}, {"x_prime", (*r.witness)[2]}};
    rep.verdict = r.compatible ? Verdict::Pass : Verdict::Fail;
    if (!r.compatible && !r.witness) rep.verdict = Verdict::Inconclusive;
    return rep;
}

inline Report check_order_vz(const VirtuallyZGroup& vz, const std::string& label,
                             const CheckOrderOpts& o, const GlobalOpts& g) {
    Report rep;
    rep.command = "check-order";
    const int w = g.window > 0 ? g.window : 30;
    const GroupWindow<VirtuallyZGroup> win = make_vz_window(vz, w);
    rep.inputs["group"] = label;
    rep.inputs["window"] = w;
    rep.inputs["order"] = o.order;
    if (o.order != "vz") throw CLI::ValidationError("check-order: virtually-Z groups use --order vz");
    const auto order = vz_order(win);

    if (o.interval) {
        bool all = true;
        nlohmann::json per = nlohmann::json::object();
        for (int n = 0; n <= o.scale; ++n) {
            auto r = is_interval_entourage(win, vz_scale(vz, n), order);
            per[std::to_string(n)] = r.interval;
            all = all && r.interval;
        }
        rep.evidence["interval"] = per;
        rep.verdict = all ? Verdict::Pass : Verdict::Fail;
        return rep;
    }
    std::vector<GroupScale<VzElement>> tested, candidates;
    for (int n = 0; n <= o.scale; ++n) tested.push_back(vz_scale(vz, n));
    for (int n = 0; n <= std::max(o.scale, w / 3); ++n) candidates.push_back(vz_scale(vz, n));
    auto r = is_compatible_order(win, tested, candidates, order);
    rep.evidence["compatible"] = r.compatible;
    rep.verdict = r.compatible ? Verdict::Pass
                               : (r.inconclusive ? Verdict::Inconclusive : Verdict::Fail);
    return rep;
}

template <CosetTowerLike T>
Report check_order_tower(const T& tower, const CheckOrderOpts& o, const GlobalOpts& g) {
    using E = typename T::element_type;
    Report rep;
    rep.command = "check-order";
    const int level = g.window > 0 ? std::min(g.window, tower.levels()) : tower.levels();
    const GroupWindow<T> win = make_tower_window(tower, level);
    rep.inputs["group"] = tower.describe();
    rep.inputs["level"] = level;
    rep.inputs["order"] = o.order;
    if (o.order != "tower") throw CLI::ValidationError("check-order: towers use --order tower");
    const auto order = tower_order(win);

    std::vector<GroupScale<E>> scales;
    for (int k = 1; k <= std::min(o.scale, level); ++k)
        scales.push_back(GroupScale<E>(tower.subgroup_elements(k)));

    if (o.interval) {
        bool all = true;
        nlohmann::json per = nlohmann::json::object();
        for (size_t i = 0; i < scales.size(); ++i) {
            auto r = is_interval_entourage(win, scales[i], order);
            per[std::to_string(i + 1)] = r.interval;
            all = all && r.interval;
        }
        rep.evidence["interval"] = per;
        rep.verdict = all ? Verdict::Pass : Verdict::Fail;
        return rep;
    }
    auto r = is_compatible_order(win, scales, scales, order);
    rep.evidence["compatible"] = r.compatible;
    rep.verdict = r.compatible ? Verdict::Pass
                               : (r.inconclusive ? Verdict::Inconclusive : Verdict::Fail);
    return rep;
}

}  // namespace detail

inline Report cmd_check_order(const CheckOrderOpts& o, const GlobalOpts& g) {
    if (o.interval == o.compatible)
        throw CLI::ValidationError("check-order: choose exactly one of --interval / --compatible");
    if (o.group == "z") return detail::check_order_int(o, g);
    if (o.group == "dinf") return detail::check_order_vz(VirtuallyZGroup::dinf(), "dinf", o, g);
    if (o.group.rfind("z-cross-z", 0) == 0) {
        const std::string tail = o.group.substr(9);
        const int k = tail == "k" || tail.empty() ? 4 : std::stoi(tail);
        return detail::check_order_vz(VirtuallyZGroup::z_cross_zk(k), o.group, o, g);
    }
    if (o.group == "sum-z2")
        return detail::check_order_tower(SumZ2Tower(g.window > 0 ? g.window : 4), o, g);
    if (o.group == "sym-tower")
        return detail::check_order_tower(SymTower(g.window > 0 ? g.window : 4), o, g);
    if (o.group.rfind("table:", 0) == 0) {
        const GroupConfig cfg = load_group_config_file(o.group.substr(6));
        switch (cfg.variant) {
            case GroupConfig::Variant::VirtuallyZ:
                return detail::check_order_vz(*cfg.vz, o.group, o, g);
            case GroupConfig::Variant::SumZ2:
                return detail::check_order_tower(SumZ2Tower(cfg.levels), o, g);
            case GroupConfig::Variant::SymTower:
                return detail::check_order_tower(SymTower(cfg.levels), o, g);
            default:
                throw CLI::ValidationError("check-order: finite table groups have no catalog order");
        }
    }
    throw CLI::ValidationError("check-order: unknown group " + o.group);
}

// ---------------------------------------------------------------------------
// refute
// ---------------------------------------------------------------------------

struct RefuteOpts {
    std::string target;  // "tripod" | "z-global"
    int r = 1;
    int arm = 0;  // 0: use the sufficiency margin
    int n = 1;
};

inline Report cmd_refute(const RefuteOpts& o, const GlobalOpts& g, std::ostream& out) {
    Report rep;
    rep.command = "refute";
    if (o.target == "tripod") {
        const int arm = o.arm > 0 ? o.arm : tripod_min_arm(o.r);
        rep.inputs["target"] = "tripod";
        rep.inputs["r"] = o.r;
        rep.inputs["arm"] = arm;
        const TripodRefutation t = tripod_refute(o.r, arm);
        if (t.status == TripodRefutation::Status::Inconclusive) {
            rep.verdict = Verdict::Inconclusive;
            rep.evidence["reason"] = t.reason;
            return rep;
        }
        const GraphWindow graph = make_tripod(arm);
        bool replay_ok = true;
        nlohmann::json cases = nlohmann::json::array();
        for (const Certificate& c : t.cases) {
            const ReplayResult rr = replay_certificate(c, graph);
            replay_ok = replay_ok && rr.ok && c.contradiction();
            nlohmann::json cj;
            cj["label"] = c.label;
            cj["steps"] = c.steps.size();
            cj["contradiction"] = c.contradiction();
            cj["replay"] = rr.ok;
            if (c.conflict)
                cj["conflict_pair"] = {c.conflict->attempted.first, c.conflict->attempted.second};
            cases.push_back(std::move(cj));
        }
        rep.evidence["cases"] = cases;
        rep.evidence["replay"] = replay_ok;
        rep.verdict = replay_ok ? Verdict::Fail : Verdict::Inconclusive;  // fail = refuted
        if (g.certificates || g.format == "text")
            for (const Certificate& c : t.cases) out << render_certificate(c);
        return rep;
    }
    if (o.target == "z-global") {
        rep.inputs["target"] = "z-global";
        rep.inputs["n"] = o.n;
        const ZRefutation z = z_global_refute(o.n);
        const ReplayResult rr = replay_z_refutation(z);
        rep.evidence["left_steps"] = z.left_chain.size();
        rep.evidence["right_steps"] = z.right_chain.size();
        rep.evidence["left_final"] = z.left_final;
        rep.evidence["right_final"] = z.right_final;
        rep.evidence["replay"] = rr.ok;
        rep.verdict = (z.contradiction && rr.ok) ? Verdict::Fail : Verdict::Inconclusive;
        if (g.certificates || g.format == "text") out << render_z_refutation(z);
        return rep;
    }
    throw CLI::ValidationError("refute: unknown target " + o.target);
}

// ---------------------------------------------------------------------------
// entry point
// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite-window experiments for coarse selector geometry"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--window", g.window, "window size override");
    app.add_option("--margin", g.margin, "safe-region margin override");
    app.add_option("--seed", g.seed, "seed for sampled sweeps");
    app.add_option("--format", g.format, "json|text")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--certificates", g.certificates, "print full certificates");

    ClassifyOpts cls;
    auto* c_cls = app.add_subcommand("classify", "classify a graph window's coarse shape");
    c_cls->add_option("--line", cls.line, "integer line window [-N, N]");
    c_cls->add_option("--ray", cls.ray, "ray window [0, N]");
    c_cls->add_option("--tripod", cls.tripod, "tripod with arms of length N");
    c_cls->add_option("--grid", cls.grid, "square grid window (2N+1)^2");
    c_cls->add_option("--edges", cls.edges, "edge list file (u v per line)");

    VerifySelectorOpts vs;
    auto* c_vs = app.add_subcommand("verify-selector", "check a selector and estimate its moduli");
    c_vs->add_option("--group", vs.group, "z|sum-z2|sym-tower");
    c_vs->add_option("--selector", vs.selector, "max|tower|transfer");
    c_vs->add_option("--scale", vs.scale, "max input scale");
    c_vs->add_option("--sample", vs.sample, "family sample size for large windows");

    CheckOrderOpts co;
    auto* c_co = app.add_subcommand("check-order", "interval / compatibility checks for an order");
    c_co->add_option("--group", co.group, "z|dinf|z-cross-zK|sum-z2|sym-tower|table:FILE");
    c_co->add_option("--order", co.order, "natural|zigzag|vz|tower|file:PATH");
    c_co->add_flag("--interval", co.interval, "check interval entourages");
    c_co->add_flag("--compatible", co.compatible, "check order compatibility");
    c_co->add_option("--scale", co.scale, "max tested scale");

    RefuteOpts rf;
    auto* c_rf = app.add_subcommand("refute", "run an impossibility argument");
    c_rf->add_option("target", rf.target, "tripod|z-global")->required();
    c_rf->add_option("--r", rf.r, "selector modulus hypothesis");
    c_rf->add_option("--arm", rf.arm, "tripod arm length (default: sufficiency margin)");
    c_rf->add_option("--n", rf.n, "modulus hypothesis for the z-global argument");

    std::vector<const char*> argv;
    argv.push_back("coarse");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 3;
    }

    try {
        const auto t0 = std::chrono::steady_clock::now();
        Report rep;
        if (c_cls->parsed())
            rep = cmd_classify(cls);
        else if (c_vs->parsed())
            rep = cmd_verify_selector(vs, g);
        else if (c_co->parsed())
            rep = cmd_check_order(co, g);
        else
            rep = cmd_refute(rf, g, out);
        emit(rep, g, out);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        err << "# " << rep.command << " finished in " << ms << " ms\n";
        return exit_code(rep.verdict);
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace coarse::cli
