#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "formant/corpus.hpp"
#include "formant/evaluate.hpp"
#include "formant/plot.hpp"

namespace formant {

namespace detail {

inline std::string axis_label(Method m, int i) {
    const std::string idx = std::to_string(i);
    switch (m) {
        case Method::Raw: return "F" + idx + " (mel)";
        case Method::Intrinsic: return "NF" + idx;
        case Method::Gmagm: return "NNF" + idx + " (mel)";
        case Method::Iht: return "DF" + idx + " (mel)";
        case Method::Lobanov: return "Z" + idx;
        case Method::Wattfab: return "S" + idx;
    }
    return idx;
}

inline VowelStatistics feature_stats(const std::vector<FeaturePoint>& pts, Space space,
                                     const std::string& stage,
                                     std::optional<SpeakerGroup> group = std::nullopt) {
    std::vector<LabeledPoint> lp;
    for (const auto& p : pts)
        if (!group || p.group == *group) lp.push_back({p.label, {p.x1, p.x2, 0.0}});
    return vowel_stats(lp, 2, space, stage);
}

}  // namespace detail

// Scatter figure for one procedure over a pooled corpus (Figs. 1-6 family):
// all sample points, per-vowel mean cross-hairs and, for the procedures the
// figures show them for, male/female corner-vowel triangles.
inline ScatterSpec scatter_for_method(const Corpus& pooled, Method method, std::string title,
                                      bool with_triangles) {
    const ProcedureContext ctx = build_context(pooled, method);
    const auto pts = map_corpus(pooled, ctx);

    ScatterSpec spec;
    spec.title = std::move(title);
    spec.x_label = detail::axis_label(method, 1);
    spec.y_label = detail::axis_label(method, 2);
    for (const auto& p : pts) spec.points.push_back({p.x1, p.x2, p.label, p.group});

    const auto all_stats = detail::feature_stats(pts, ctx.feature_space, method_name(method));
    for (VowelClass v : kWorkingVowels)
        if (all_stats.has(v))
            spec.crosshairs.push_back({all_stats.mean(v, 1), all_stats.mean(v, 2), v});

    if (with_triangles) {
        for (SpeakerGroup g : {SpeakerGroup::Man, SpeakerGroup::Woman}) {
            bool have_group = false;
            for (const auto& p : pts)
                if (p.group == g) have_group = true;
            if (!have_group) continue;
            const auto gstats =
                detail::feature_stats(pts, ctx.feature_space, method_name(method), g);
            spec.triangles.push_back(vowel_triangle(gstats, g));
        }
    }
    return spec;
}

// Picks the sample for the distance-ray figures: the first /ɑ/ sample whose
// nearest vowel mean (unweighted, mel raw space) is /ɔ/, mirroring the
// incorrect assignment the illustration makes. Falls back to the first /ɑ/.
inline FormantSample pick_ray_sample(const Corpus& pooled) {
    const ProcedureContext ctx = build_context(pooled, Method::Raw);
    const auto stats = detail::feature_stats(map_corpus(pooled, ctx), Space::Mel, "raw");
    const FormantSample* fallback = nullptr;
    for (const auto& s : pooled.samples) {
        if (s.vowel != VowelClass::AA) continue;
        if (!fallback) fallback = &s;
        const double x1 = hz_to_mel(s.f1_hz), x2 = hz_to_mel(s.f2_hz);
        VowelClass best = VowelClass::IY;
        double best_d = 1e300;
        for (VowelClass v : kWorkingVowels) {
            if (!stats.has(v)) continue;
            const double d = std::hypot(x1 - stats.mean(v, 1), x2 - stats.mean(v, 2));
            if (d < best_d) {
                best_d = d;
                best = v;
            }
        }
        if (best == VowelClass::AO) return s;
    }
    if (!fallback) throw EmptyResult("no /AA/ sample available for the ray figure");
    return *fallback;
}

// Fig. 7 family: rays from one raw sample to every vowel mean, in mel.
inline DistanceRaySpec rays_raw(const Corpus& pooled, const FormantSample& sample) {
    const ProcedureContext ctx = build_context(pooled, Method::Raw);
    const auto stats = detail::feature_stats(map_corpus(pooled, ctx), Space::Mel, "raw");
    DistanceRaySpec spec;
    spec.title = "Euclidean distances in the raw formant space";
    const double x1 = hz_to_mel(sample.f1_hz), x2 = hz_to_mel(sample.f2_hz);
    double best = 1e300;
    for (VowelClass v : kWorkingVowels) {
        if (!stats.has(v)) continue;
        DistanceRay r;
        r.sx = x1;
        r.sy = x2;
        r.tx = stats.mean(v, 1);
        r.ty = stats.mean(v, 2);
        r.vowel = v;
        r.length = std::hypot(r.sx - r.tx, r.sy - r.ty);
        best = std::min(best, r.length);
        spec.means.push_back({r.tx, r.ty, v});
        spec.rays.push_back(r);
    }
    for (auto& r : spec.rays) r.shortest = (r.length == best);
    return spec;
}

// Fig. 8 family: one ray per hypothesis, each from the hypothesized DF
// location to the corresponding de-normalized vowel mean.
inline DistanceRaySpec rays_iht(const Corpus& pooled, const FormantSample& sample) {
    const ProcedureContext ctx = build_context(pooled, Method::Iht);
    DistanceRaySpec spec;
    spec.title = "Euclidean distances under the hypothesize-test procedure";
    spec.x_label = detail::axis_label(Method::Iht, 1);
    spec.y_label = detail::axis_label(Method::Iht, 2);
    const auto nf = intrinsic_normalize(sample);
    double best = 1e300;
    for (VowelClass J : kWorkingVowels) {
        if (!ctx.denorm_mel.has(J)) continue;
        const auto df = denormalize_hypothesis(nf, J, ctx.raw_hz);
        DistanceRay r;
        r.sx = hz_to_mel(df.df_hz[0]);
        r.sy = hz_to_mel(df.df_hz[1]);
        r.tx = ctx.denorm_mel.mean(J, 1);
        r.ty = ctx.denorm_mel.mean(J, 2);
        r.vowel = J;
        r.length = std::hypot(r.sx - r.tx, r.sy - r.ty);
        best = std::min(best, r.length);
        spec.means.push_back({r.tx, r.ty, J});
        spec.rays.push_back(r);
    }
    for (auto& r : spec.rays) r.shortest = (r.length == best);
    return spec;
}

}  // namespace formant
