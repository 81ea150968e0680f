// JSON shapes for CLI reports. All exact values are serialized as "p/q"
// strings (squared-distance encodings flagged once in the space block), so
// a report round-trips without any float damage. Everything uses ordered
// JSON and fixed key order: same config + input means byte-identical output.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "forman.hpp"
#include "groups.hpp"
#include "hash.hpp"
#include "link_criteria.hpp"
#include "metric.hpp"
#include "morse.hpp"
#include "persistence.hpp"

namespace vrmorse {

using ordered_json = nlohmann::ordered_json;

template <class S>
ordered_json space_meta(const S& sp) {
    ordered_json j;
    j["kind"] = S::kKind;
    j["sq"] = S::kSquared;
    j["n"] = sp.n;
    j["provenance"] = sp.provenance;
    j["hash"] = space_content_hash(sp);
    return j;
}

inline ordered_json betti_trimmed(const std::vector<long>& b) {
    std::size_t keep = b.size();
    while (keep > 1 && b[keep - 1] == 0) --keep;
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < keep; ++i) arr.push_back(b[i]);
    return arr;
}

inline ordered_json betti_full(const std::vector<long>& b) {
    ordered_json arr = ordered_json::array();
    for (long v : b) arr.push_back(v);
    return arr;
}

template <class S>
ordered_json dlink_json(const S& sp, const Vertices& sigma,
                        const DLinkClassification& cls) {
    ordered_json j;
    j["simplex"] = sigma;
    j["diam"] = sp.fmt(simplex_diameter(sp, sigma));
    j["kind"] = to_string(cls.kind);
    if (cls.kind == DLinkClassification::Kind::ConeFace ||
        cls.kind == DLinkClassification::Kind::ConeCoface)
        j["witness"] = cls.witness;
    if (cls.kind == DLinkClassification::Kind::Nontrivial)
        j["betti"] = betti_trimmed(cls.betti);
    return j;
}

template <class S>
ordered_json scan_entry_json(const S& sp, const ScanEntry<S>& e) {
    ordered_json j;
    j["scale"] = sp.fmt(e.scale);
    j["status"] = to_string(e.status);
    if (e.status == ScanStatus::Certified) {
        ordered_json ws = ordered_json::array();
        for (const auto& w : e.strong.witnesses) {
            ordered_json one;
            one["pair"] = {w.x, w.y};
            one["z"] = w.z;
            ws.push_back(one);
        }
        j["witnesses"] = ws;
    } else {
        if (e.strong.failing_pair.first >= 0)
            j["strong_failing_pair"] = {e.strong.failing_pair.first,
                                        e.strong.failing_pair.second};
        if (e.status == ScanStatus::Refuted) {
            j["refuting_subset"] = e.refuting_subset;
            ordered_json by;
            for (const auto& [sz, f] : e.failures_by_size)
                by[std::to_string(sz)] = f;
            j["failures_by_size"] = by;
        }
    }
    return j;
}

template <class S>
ordered_json persistence_json(const S& sp, const PersistenceReport<S>& rep) {
    ordered_json j;
    ordered_json spec = ordered_json::array();
    for (const auto& v : rep.spectrum.values) spec.push_back(sp.fmt(v));
    j["spectrum"] = spec;
    ordered_json scales = ordered_json::array();
    for (const auto& e : rep.per_scale) {
        ordered_json one;
        one["scale"] = sp.fmt(e.scale);
        one["status"] = to_string(e.status);
        scales.push_back(one);
    }
    j["scales"] = scales;
    ordered_json ivs = ordered_json::array();
    for (const auto& iv : rep.intervals) {
        ordered_json one;
        one["left"] = sp.fmt(iv.left) + "(open)";
        one["right"] = sp.fmt(iv.right);
        one["status"] = "certified";
        one["contractible_beyond"] = iv.contractible_beyond;
        ivs.push_back(one);
    }
    j["intervals"] = ivs;
    if (rep.has_betti) {
        ordered_json b;
        for (std::size_t i = 0; i < rep.spectrum.values.size(); ++i)
            b[sp.fmt(rep.spectrum.values[i])] = betti_full(rep.betti[i]);
        j["betti"] = b;
    }
    return j;
}

// ----------------------------------------------------------------- forman --

// {"simplices":[[0],[1],[0,1]],"h":[0,2,1]}; h entries may be numbers or
// "p/q" strings
inline FormanComplex forman_from_json(const nlohmann::json& j) {
    if (!j.contains("simplices") || !j.contains("h"))
        throw std::invalid_argument("forman JSON needs 'simplices' and 'h'");
    std::vector<Vertices> simplices;
    for (const auto& s : j["simplices"])
        simplices.push_back(s.get<Vertices>());
    std::vector<Rational> values;
    for (const auto& v : j["h"]) {
        if (v.is_string())
            values.push_back(Rational::parse(v.get<std::string>()));
        else if (v.is_number_integer())
            values.push_back(Rational(v.get<std::int64_t>()));
        else
            throw std::invalid_argument(
                "forman JSON: h entries must be integers or 'p/q' strings");
    }
    return FormanComplex::from_lists(std::move(simplices), std::move(values));
}

inline ordered_json forman_report_json(const FormanComplex& fc,
                                       const FormanClassification& cls) {
    ordered_json j;
    ordered_json rows = ordered_json::array();
    for (std::size_t k = 0; k < fc.c.dims.size(); ++k)
        for (std::size_t i = 0; i < fc.c.dims[k].size(); ++i) {
            ordered_json one;
            one["simplex"] = fc.c.dims[k][i];
            one["h"] = fc.h[k][i].str();
            one["class"] = to_string(cls.cls[k][i]);
            if (cls.cls[k][i] != SimplexClass::Critical)
                one["matched"] = cls.matched[k][i];
            rows.push_back(one);
        }
    j["simplices"] = rows;
    ordered_json crit = ordered_json::array();
    for (long c : cls.critical_per_dim) crit.push_back(c);
    j["critical_per_dim"] = crit;
    return j;
}

// ----------------------------------------------------------------- groups --

// {"kind":"free_group","rank":2} | {"kind":"free_abelian","rank":2}
// | {"kind":"explicit_cayley","edges":[["u","v","g"],...]}
inline GroupSpec group_spec_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "free_group") return GroupSpec::free_group(j.at("rank").get<int>());
    if (kind == "free_abelian")
        return GroupSpec::free_abelian(j.at("rank").get<int>());
    if (kind == "explicit_cayley") {
        std::vector<GroupSpec::Edge> edges;
        for (const auto& e : j.at("edges")) {
            GroupSpec::Edge edge;
            edge.u = e.at(0).get<std::string>();
            edge.v = e.at(1).get<std::string>();
            if (e.size() > 2) edge.label = e.at(2).get<std::string>();
            edges.push_back(std::move(edge));
        }
        return GroupSpec::explicit_cayley(std::move(edges));
    }
    throw std::invalid_argument("unknown group kind '" + kind + "'");
}

inline ordered_json group_verdict_json(const CayleyBall& ball,
                                       const GroupCriterionVerdict& v) {
    ordered_json j;
    j["scale"] = v.scale;
    j["mode"] = v.mode;
    j["status"] = to_string(v.status);
    j["coverage"] = v.coverage;
    ordered_json ws = ordered_json::array();
    for (const auto& w : v.witnesses) {
        ordered_json one;
        if (v.mode == "translation") {
            one["g"] = ball.label(w[1]);
        } else {
            one["pair"] = {ball.label(w[0]), ball.label(w[1])};
        }
        one["z"] = ball.label(w[2]);
        ws.push_back(one);
    }
    j["witnesses"] = ws;
    if (v.status == GroupCriterionVerdict::Status::Refuted) {
        j["failing_pair"] = {ball.label(v.failing[0]), ball.label(v.failing[1])};
        j["lens_size"] = v.lens_size;
        j["widest_lens_pair"] = {ball.label(v.widest[0]),
                                 ball.label(v.widest[1])};
        j["widest_dist"] = v.widest_dist;
    }
    return j;
}

inline ordered_json combing_report_json(const CayleyBall& ball,
                                        const CombingReport& rep) {
    ordered_json j;
    j["N"] = rep.N;
    j["t_max"] = rep.t_max;
    j["checked"] = rep.checked;
    j["failed"] = rep.failed;
    if (rep.failed > 0) {
        ordered_json ff;
        ff["g"] = ball.label(rep.first_failing.g);
        ff["t"] = rep.first_failing.t;
        j["first_failing"] = ff;
    }
    ordered_json per = ordered_json::array();
    for (const auto& e : rep.per_g) {
        ordered_json one;
        one["g"] = ball.label(e.g);
        one["t"] = e.t;
        if (e.n >= 0)
            one["n"] = e.n;
        else
            one["n"] = nullptr;
        per.push_back(one);
    }
    j["per_g"] = per;
    return j;
}

}  // namespace vrmorse
