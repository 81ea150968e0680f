// vrmorse: JSON-reporting command line front end for the analyses in
// include/vrmorse. One subcommand per analysis; identical flags and inputs
// produce byte-identical reports. Exit codes: 0 success, 1 error, 2 when
// --strict is set and the analysis refuted its criterion with a witness.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "vrmorse/budget.hpp"
#include "vrmorse/forman.hpp"
#include "vrmorse/groups.hpp"
#include "vrmorse/hash.hpp"
#include "vrmorse/io.hpp"
#include "vrmorse/link_criteria.hpp"
#include "vrmorse/metric.hpp"
#include "vrmorse/morse.hpp"
#include "vrmorse/persistence.hpp"
#include "vrmorse/report.hpp"
#include "vrmorse/vr_complex.hpp"

namespace {

using vrmorse::AnySpace;
using vrmorse::Budget;
using vrmorse::ordered_json;
using vrmorse::Rational;
using vrmorse::Vertices;

struct CommonOpts {
    std::string out;
    bool strict = false;
    int threads = 1;  // reserved; every analysis is single threaded today
    Budget budget;
};

struct SourceOpts {
    std::string input;   // point-cloud CSV
    std::string matrix;  // distance-matrix CSV
    std::string gen;     // generated space, e.g. circle:12
};

int parse_int(const std::string& tok, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument(std::string(what) +
                                    ": not an integer: " + tok);
    }
}

AnySpace load_space(const SourceOpts& src) {
    const int given = int(!src.input.empty()) + int(!src.matrix.empty()) +
                      int(!src.gen.empty());
    if (given != 1)
        throw std::invalid_argument(
            "exactly one of --input, --matrix, --gen must be given");
    if (!src.input.empty()) return vrmorse::load_point_cloud(src.input);
    if (!src.matrix.empty())
        return AnySpace{vrmorse::load_distance_matrix(src.matrix)};
    return vrmorse::make_generated_space(src.gen);
}

// Scales arrive as decimal or p/q text; exact spaces keep the rational,
// approximate spaces take the quotient. For squared spaces the number is the
// squared distance, matching how those spaces print and compare everywhere.
template <class S>
typename S::V scale_value(const std::string& text) {
    const Rational r = vrmorse::parse_number(text);
    if constexpr (std::is_same_v<typename S::V, Rational>)
        return r;
    else
        return double(r.num()) / double(r.den());
}

Vertices parse_simplex(const std::string& text, int n) {
    Vertices out;
    for (const std::string& tok : vrmorse::split_csv(text))
        out.push_back(parse_int(tok, "--simplex"));
    if (out.empty()) throw std::invalid_argument("--simplex is empty");
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::invalid_argument("--simplex repeats a vertex");
    if (out.front() < 0 || out.back() >= n)
        throw std::invalid_argument("--simplex has a vertex outside 0.." +
                                    std::to_string(n - 1));
    return out;
}

ordered_json base_config(const CommonOpts& c) {
    ordered_json j;
    j["strict"] = c.strict;
    j["threads"] = c.threads;
    j["budget"] = c.budget.limit;
    return j;
}

void add_source(ordered_json& cfg, const SourceOpts& src) {
    if (!src.input.empty()) cfg["input"] = src.input;
    if (!src.matrix.empty()) cfg["matrix"] = src.matrix;
    if (!src.gen.empty()) cfg["gen"] = src.gen;
}

template <class S>
ordered_json make_report(const char* sub, const ordered_json& cfg,
                         const S& sp) {
    ordered_json j;
    j["tool"] = "vrmorse";
    j["subcommand"] = sub;
    j["config"] = cfg;
    j["space"] = vrmorse::space_meta(sp);
    return j;
}

int emit_report(const ordered_json& rep, const std::string& out) {
    std::string text = rep.dump(2);
    text += "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + out);
        f << text;
    }
    return 0;
}

// ----------------------------------------------------------- subcommands --

int run_validate(const CommonOpts& c, const SourceOpts& src) {
    ordered_json cfg = base_config(c);
    add_source(cfg, src);
    AnySpace any = load_space(src);
    return std::visit(
        [&](const auto& sp) {
            auto mr = vrmorse::validate_metric(sp);
            ordered_json rep = make_report("validate", cfg, sp);
            ordered_json result;
            result["ok"] = mr.ok;
            result["problems"] = mr.problems;
            rep["result"] = result;
            emit_report(rep, c.out);
            return (!mr.ok && c.strict) ? 2 : 0;
        },
        any);
}

struct SimplicesOpts {
    std::string scale;
    int max_dim = 3;
};

int run_simplices(CommonOpts& c, const SourceOpts& src,
                  const SimplicesOpts& o) {
    ordered_json cfg = base_config(c);
    add_source(cfg, src);
    cfg["scale"] = o.scale;
    cfg["max_dim"] = o.max_dim;
    if (o.max_dim < 0)
        throw std::invalid_argument("--max-dim must be >= 0");
    AnySpace any = load_space(src);
    return std::visit(
        [&](const auto& sp) {
            using S = std::decay_t<decltype(sp)>;
            const auto spec = vrmorse::diameter_spectrum(sp);
            const auto t = scale_value<S>(o.scale);
            const auto cx =
                vrmorse::vietoris_rips(sp, t, o.max_dim, &c.budget);
            const auto ord = vrmorse::attachment_order(sp, cx, spec);
            ordered_json rep = make_report("simplices", cfg, sp);
            ordered_json result;
            result["scale"] = sp.fmt(t);
            ordered_json counts = ordered_json::array();
            for (const auto& level : cx.dims) counts.push_back(level.size());
            result["counts"] = counts;
            result["total"] = ord.simplices.size();
            ordered_json order = ordered_json::array();
            for (std::size_t i = 0; i < ord.simplices.size(); ++i) {
                ordered_json one;
                one["simplex"] = ord.simplices[i];
                one["diam"] = sp.fmt(ord.diam[i]);
                order.push_back(one);
            }
            result["order"] = order;
            rep["result"] = result;
            return emit_report(rep, c.out);
        },
        any);
}

int run_dlink(CommonOpts& c, const SourceOpts& src,
              const std::string& simplex) {
    ordered_json cfg = base_config(c);
    add_source(cfg, src);
    cfg["simplex"] = simplex;
    AnySpace any = load_space(src);
    return std::visit(
        [&](const auto& sp) {
            const Vertices sigma = parse_simplex(simplex, sp.n);
            const auto cls =
                vrmorse::classify_descending_link(sp, sigma, -1, &c.budget);
            ordered_json rep = make_report("dlink", cfg, sp);
            rep["result"] = vrmorse::dlink_json(sp, sigma, cls);
            return emit_report(rep, c.out);
        },
        any);
}

struct CriteriaOpts {
    std::vector<std::string> scales;
    int max_subset = 4;
};

int run_criteria(const CommonOpts& c, const SourceOpts& src,
                 const CriteriaOpts& o) {
    ordered_json cfg = base_config(c);
    add_source(cfg, src);
    cfg["scales"] = o.scales;
    cfg["max_subset"] = o.max_subset;
    AnySpace any = load_space(src);
    return std::visit(
        [&](const auto& sp) {
            using S = std::decay_t<decltype(sp)>;
            std::vector<typename S::V> values;
            if (o.scales.empty()) {
                values = vrmorse::diameter_spectrum(sp).values;
            } else {
                for (const auto& s : o.scales)
                    values.push_back(scale_value<S>(s));
            }
            const auto entries =
                vrmorse::criterion_range_scan(sp, values, o.max_subset);
            long certified = 0, refuted = 0, unknown = 0;
            ordered_json rows = ordered_json::array();
            for (const auto& e : entries) {
                rows.push_back(vrmorse::scan_entry_json(sp, e));
                switch (e.status) {
                    case vrmorse::ScanStatus::Certified: ++certified; break;
                    case vrmorse::ScanStatus::Refuted: ++refuted; break;
                    case vrmorse::ScanStatus::Unknown: ++unknown; break;
                }
            }
            ordered_json rep = make_report("criteria", cfg, sp);
            ordered_json result;
            ordered_json summary;
            summary["certified"] = certified;
            summary["refuted"] = refuted;
            summary["unknown"] = unknown;
            result["summary"] = summary;
            result["entries"] = rows;
            rep["result"] = result;
            emit_report(rep, c.out);
            return (c.strict && refuted > 0) ? 2 : 0;
        },
        any);
}

struct PersistenceOpts {
    int max_subset = 4;
    int betti_dim = -1;  // < 0: skip the profile and the cross check
};

int run_persistence(CommonOpts& c, const SourceOpts& src,
                    const PersistenceOpts& o) {
    ordered_json cfg = base_config(c);
    add_source(cfg, src);
    cfg["max_subset"] = o.max_subset;
    cfg["betti_dim"] = o.betti_dim;
    AnySpace any = load_space(src);
    return std::visit(
        [&](const auto& sp) {
            auto pr = vrmorse::persistence_intervals(sp, o.max_subset);
            if (o.betti_dim >= 0)
                vrmorse::add_betti_profile(sp, pr, o.betti_dim, &c.budget);
            ordered_json rep = make_report("persistence", cfg, sp);
            ordered_json result = vrmorse::persistence_json(sp, pr);
            bool cv_failed = false;
            std::string cv_detail;
            if (pr.has_betti) {
                const auto cv = vrmorse::cross_validate(pr, sp);
                ordered_json cj;
                cj["pass"] = cv.pass;
                if (!cv.pass) cj["detail"] = cv.detail;
                result["cross_validation"] = cj;
                cv_failed = !cv.pass;
                cv_detail = cv.detail;
            }
            rep["result"] = result;
            emit_report(rep, c.out);
            if (cv_failed) {
                // a certified interval disagreeing with homology is a bug in
                // the analysis, not a property of the input
                std::cerr << "error: cross-validation failed: " << cv_detail
                          << "\n";
                return 1;
            }
            bool refuted = false;
            for (const auto& e : pr.per_scale)
                if (e.status == vrmorse::ScanStatus::Refuted) refuted = true;
            return (c.strict && refuted) ? 2 : 0;
        },
        any);
}

int run_forman(const CommonOpts& c, const std::string& input) {
    ordered_json cfg = base_config(c);
    cfg["input"] = input;
    std::ifstream f(input);
    if (!f) throw std::runtime_error("cannot read " + input);
    nlohmann::json j;
    f >> j;
    const auto fc = vrmorse::forman_from_json(j);
    ordered_json rep;
    rep["tool"] = "vrmorse";
    rep["subcommand"] = "forman";
    rep["config"] = cfg;
    ordered_json meta;
    meta["kind"] = "forman";
    ordered_json counts = ordered_json::array();
    for (const auto& level : fc.c.dims) counts.push_back(level.size());
    meta["counts"] = counts;
    meta["hash"] = vrmorse::hex64(vrmorse::fnv1a64(j.dump()));
    rep["space"] = meta;

    const auto violations = vrmorse::validate_forman(fc);
    ordered_json result;
    result["valid"] = violations.empty();
    if (!violations.empty()) {
        ordered_json rows = ordered_json::array();
        for (const auto& v : violations) {
            ordered_json one;
            one["simplex"] = v.simplex;
            one["detail"] = v.what;
            rows.push_back(one);
        }
        result["violations"] = rows;
        rep["result"] = result;
        emit_report(rep, c.out);
        return c.strict ? 2 : 0;
    }

    const auto cls = vrmorse::classify_simplices(fc);
    result.update(vrmorse::forman_report_json(fc, cls));
    const auto dt = vrmorse::verify_descending_types(fc);
    const auto at = vrmorse::verify_forman_attachment(fc);
    ordered_json checks;
    checks["descending_types"] = dt.pass;
    checks["attachment"] = at.pass;
    result["checks"] = checks;
    rep["result"] = result;
    emit_report(rep, c.out);
    if (!dt.pass || !at.pass) {
        std::cerr << "error: internal verification failed: "
                  << (dt.pass ? at.detail : dt.detail) << "\n";
        return 1;
    }
    return 0;
}

struct GroupOpts {
    std::string spec;
    int radius = 0;
    std::vector<int> scales;
    std::string combing;  // "", "prefix", "staircase"
    int combing_N = 0;
};

std::string canonical_group(const vrmorse::GroupSpec& spec) {
    switch (spec.kind) {
        case vrmorse::GroupSpec::Kind::FreeGroup:
            return "free_group:" + std::to_string(spec.rank);
        case vrmorse::GroupSpec::Kind::FreeAbelian:
            return "free_abelian:" + std::to_string(spec.rank);
        case vrmorse::GroupSpec::Kind::ExplicitCayley: {
            std::string s = "cayley:";
            for (const auto& e : spec.edges)
                s += e.u + ">" + e.v + "#" + e.label + ";";
            return s;
        }
    }
    return "?";
}

int run_group(CommonOpts& c, const GroupOpts& o) {
    ordered_json cfg = base_config(c);
    cfg["spec"] = o.spec;
    cfg["radius"] = o.radius;
    cfg["scales"] = o.scales;
    if (!o.combing.empty()) {
        cfg["combing"] = o.combing;
        cfg["combing_N"] = o.combing_N;
    }
    const auto spec = vrmorse::parse_group_spec(o.spec);
    const auto ball = vrmorse::cayley_ball(spec, o.radius, &c.budget);

    ordered_json rep;
    rep["tool"] = "vrmorse";
    rep["subcommand"] = "group";
    rep["config"] = cfg;
    ordered_json meta;
    const std::string canon = canonical_group(spec);
    meta["kind"] = "group";
    meta["spec"] = canon;
    meta["radius"] = ball.radius;
    meta["nodes"] = ball.n();
    meta["complete"] = ball.complete;
    meta["hash"] = vrmorse::hex64(vrmorse::fnv1a64(canon));
    rep["space"] = meta;

    ordered_json result;
    bool refuted = false;
    ordered_json checks = ordered_json::array();
    for (int t : o.scales) {
        const auto v = vrmorse::boundary_safe_strong_check(ball, t);
        if (v.status == vrmorse::GroupCriterionVerdict::Status::Refuted)
            refuted = true;
        checks.push_back(vrmorse::group_verdict_json(ball, v));
    }
    result["checks"] = checks;
    if (!o.combing.empty()) {
        vrmorse::CombingReport cr;
        if (o.combing == "prefix")
            cr = vrmorse::good_combing_check(ball, vrmorse::prefix_combing,
                                             o.combing_N);
        else
            cr = vrmorse::good_combing_check(ball, vrmorse::staircase_combing,
                                             o.combing_N);
        if (cr.failed > 0) refuted = true;
        result["combing"] = vrmorse::combing_report_json(ball, cr);
    }
    rep["result"] = result;
    emit_report(rep, c.out);
    return (c.strict && refuted) ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Vietoris-Rips / discrete Morse analyses over finite metric spaces"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOpts common;
    app.add_option("--out", common.out, "write the JSON report to this file");
    app.add_flag("--strict", common.strict,
                 "exit 2 when an analysis refutes its criterion");
    app.add_option("--threads", common.threads,
                   "worker threads (reserved; analyses run single threaded)")
        ->check(CLI::PositiveNumber);

    SourceOpts src;
    auto add_src = [&](CLI::App* sc) {
        sc->add_option("--input", src.input, "point-cloud CSV");
        sc->add_option("--matrix", src.matrix, "distance-matrix CSV");
        sc->add_option("--gen", src.gen,
                       "generated space: circle:m, lattice_box:d:s, sphere4");
    };

    auto* sc_validate =
        app.add_subcommand("validate", "check the metric axioms");
    add_src(sc_validate);

    SimplicesOpts so;
    auto* sc_simplices = app.add_subcommand(
        "simplices", "attachment order of the complex at one scale");
    add_src(sc_simplices);
    sc_simplices->add_option("--scale", so.scale, "scale t (decimal or p/q)")
        ->required();
    sc_simplices->add_option("--max-dim", so.max_dim,
                             "top simplex dimension (default 3)");

    std::string simplex;
    auto* sc_dlink = app.add_subcommand(
        "dlink", "classify the descending link of one simplex");
    add_src(sc_dlink);
    sc_dlink
        ->add_option("--simplex", simplex,
                     "comma separated vertex ids, e.g. 0,4,8")
        ->required();

    CriteriaOpts co;
    auto* sc_criteria = app.add_subcommand(
        "criteria", "strong link criterion scan with refuting subsets");
    add_src(sc_criteria);
    sc_criteria->add_option(
        "--scale", co.scales,
        "scale to scan (repeatable; default: whole spectrum)");
    sc_criteria->add_option("--max-subset", co.max_subset,
                            "largest refuting subset size (default 4)");

    PersistenceOpts po;
    auto* sc_persistence = app.add_subcommand(
        "persistence", "certified intervals over the whole spectrum");
    add_src(sc_persistence);
    sc_persistence->add_option("--max-subset", po.max_subset,
                               "largest refuting subset size (default 4)");
    sc_persistence->add_option(
        "--betti-dim", po.betti_dim,
        "also compute Betti numbers up to this dimension and cross-validate");

    std::string forman_input;
    auto* sc_forman = app.add_subcommand(
        "forman", "validate and classify a discrete Morse function");
    sc_forman
        ->add_option("--input", forman_input,
                     "JSON file with simplices and h values")
        ->required();

    GroupOpts go;
    auto* sc_group = app.add_subcommand(
        "group", "strong criterion and combings on a Cayley ball");
    sc_group
        ->add_option("--spec", go.spec,
                     "free_group:k, free_abelian:n, or cayley:edges.csv")
        ->required();
    sc_group->add_option("--radius", go.radius, "ball radius")->required();
    sc_group->add_option("--scale", go.scales,
                         "integer scale to check (repeatable)");
    sc_group
        ->add_option("--combing", go.combing,
                     "combing to audit: prefix or staircase")
        ->check(CLI::IsMember({"prefix", "staircase"}));
    sc_group->add_option("--combing-N", go.combing_N,
                         "fellow-traveling constant N (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    try {
        if (const char* env = std::getenv("VRMORSE_BUDGET")) {
            char* end = nullptr;
            const long long v = std::strtoll(env, &end, 10);
            if (end == env || *end != '\0' || v <= 0)
                throw std::invalid_argument(
                    "VRMORSE_BUDGET must be a positive integer");
            common.budget.limit = std::size_t(v);
        }
        if (app.got_subcommand(sc_validate)) return run_validate(common, src);
        if (app.got_subcommand(sc_simplices))
            return run_simplices(common, src, so);
        if (app.got_subcommand(sc_dlink))
            return run_dlink(common, src, simplex);
        if (app.got_subcommand(sc_criteria))
            return run_criteria(common, src, co);
        if (app.got_subcommand(sc_persistence))
            return run_persistence(common, src, po);
        if (app.got_subcommand(sc_forman))
            return run_forman(common, forman_input);
        if (app.got_subcommand(sc_group)) return run_group(common, go);
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const vrmorse::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
