#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "formant/classify.hpp"
#include "formant/corpus.hpp"
#include "formant/errors.hpp"
#include "formant/normalize.hpp"
#include "formant/scales.hpp"
#include "formant/stats.hpp"

namespace formant {

enum class Method { Raw, Intrinsic, Gmagm, Iht, Lobanov, Wattfab };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::Raw: return "raw";
        case Method::Intrinsic: return "intrinsic";
        case Method::Gmagm: return "gmagm";
        case Method::Iht: return "iht";
        case Method::Lobanov: return "lobanov";
        case Method::Wattfab: return "wattfab";
    }
    return "?";
}

inline std::optional<Method> method_from_name(const std::string& name) {
    for (Method m : {Method::Raw, Method::Intrinsic, Method::Gmagm, Method::Iht, Method::Lobanov,
                     Method::Wattfab})
        if (name == method_name(m)) return m;
    return std::nullopt;
}

// Frozen statistics for one procedure, computed once from the statistics
// corpus before any sample is mapped or classified.
struct ProcedureContext {
    Method method = Method::Raw;
    Space feature_space = Space::Mel;
    VowelStatistics raw_hz;           // gmagm, iht
    VowelStatistics denorm_mel;       // iht
    SpeakerStatistics speakers;       // lobanov
    std::map<int, CornerCentroid> centroids;  // wattfab
    VowelStatistics classifier;       // feature-space stats for nearest_vowel
};

// A sample mapped into a procedure's 2-D feature space.
struct FeaturePoint {
    double x1 = 0.0;
    double x2 = 0.0;
    VowelClass label = VowelClass::IY;
    SpeakerGroup group = SpeakerGroup::Man;
    int speaker_id = 0;
    int repetition = 1;
    Space space = Space::Mel;
    std::optional<VowelClass> predicted;
    double distance = 0.0;
};

namespace detail {

inline FeaturePoint base_point(const FormantSample& s, Space space) {
    FeaturePoint p;
    p.label = s.vowel;
    p.group = s.group;
    p.speaker_id = s.speaker_id;
    p.repetition = s.repetition;
    p.space = space;
    return p;
}

}  // namespace detail

// Maps one sample into the procedure's feature space. For IE-HT the point
// is the final (post hypothesize-test) DF in mel and carries the predicted
// vowel; for IE-GMAGM the known label parameterizes the mapping.
inline FeaturePoint map_sample(const FormantSample& s, const ProcedureContext& ctx) {
    switch (ctx.method) {
        case Method::Raw: {
            auto p = detail::base_point(s, Space::Mel);
            p.x1 = hz_to_mel(s.f1_hz);
            p.x2 = hz_to_mel(s.f2_hz);
            return p;
        }
        case Method::Intrinsic: {
            auto p = detail::base_point(s, Space::Hz);  // dimensionless, tagged non-mel
            const auto nf = intrinsic_normalize(s);
            p.x1 = nf.nf[0];
            p.x2 = nf.nf[1];
            return p;
        }
        case Method::Gmagm: {
            auto p = detail::base_point(s, Space::Mel);
            const auto nnf = denormalize_gmagm(intrinsic_normalize(s), s.vowel, ctx.raw_hz);
            p.x1 = hz_to_mel(nnf.df_hz[0]);
            p.x2 = hz_to_mel(nnf.df_hz[1]);
            return p;
        }
        case Method::Iht: {
            auto p = detail::base_point(s, Space::Mel);
            const auto df = iht_denormalize(intrinsic_normalize(s), ctx.raw_hz, ctx.denorm_mel);
            p.x1 = hz_to_mel(df.df_hz[0]);
            p.x2 = hz_to_mel(df.df_hz[1]);
            p.predicted = df.hypothesis;
            p.distance = df.distance;
            return p;
        }
        case Method::Lobanov: {
            auto p = detail::base_point(s, Space::Hz);
            const auto z = lobanov(s, ctx.speakers);
            p.x1 = z.x1;
            p.x2 = z.x2;
            return p;
        }
        case Method::Wattfab: {
            auto p = detail::base_point(s, Space::Hz);
            auto it = ctx.centroids.find(s.speaker_id);
            if (it == ctx.centroids.end()) throw UnknownSpeaker(s.speaker_id);
            const auto sc = s_centroid(s, it->second);
            p.x1 = sc.x1;
            p.x2 = sc.x2;
            return p;
        }
    }
    throw Error("unreachable method");
}

// Builds all statistics for a procedure from the labeled statistics corpus.
inline ProcedureContext build_context(const Corpus& stats_corpus, Method method,
                                      std::string pooling = "") {
    ProcedureContext ctx;
    ctx.method = method;
    switch (method) {
        case Method::Raw:
        case Method::Intrinsic:
            break;
        case Method::Gmagm:
        case Method::Iht:
            ctx.raw_hz = vowel_stats(stats_corpus, Space::Hz, "raw", pooling);
            if (method == Method::Iht)
                ctx.denorm_mel = bootstrap_denorm_stats(stats_corpus, ctx.raw_hz, pooling);
            break;
        case Method::Lobanov:
            ctx.speakers = speaker_stats(stats_corpus);
            break;
        case Method::Wattfab:
            ctx.centroids = corner_centroids(stats_corpus);
            break;
    }
    ctx.feature_space =
        (method == Method::Raw || method == Method::Gmagm || method == Method::Iht) ? Space::Mel
                                                                                    : Space::Hz;
    if (method != Method::Iht && method != Method::Intrinsic) {
        std::vector<LabeledPoint> pts;
        pts.reserve(stats_corpus.samples.size());
        for (const auto& s : stats_corpus.samples) {
            const auto p = map_sample(s, ctx);
            pts.push_back({p.label, {p.x1, p.x2, 0.0}});
        }
        ctx.classifier = vowel_stats(pts, 2, ctx.feature_space, method_name(method), pooling);
    }
    return ctx;
}

inline std::vector<FeaturePoint> map_corpus(const Corpus& corpus, const ProcedureContext& ctx) {
    std::vector<FeaturePoint> out;
    out.reserve(corpus.samples.size());
    for (const auto& s : corpus.samples) out.push_back(map_sample(s, ctx));
    return out;
}

// Full evaluation protocol. The statistics corpus is the pooled labeled
// data for in-sample runs and the repetition-1 half for train/test and
// train-on-train runs.
inline ClassificationReport evaluate(const Corpus& corpus, Method method, PoolMode pool_mode,
                                     SplitMode split) {
    if (method == Method::Intrinsic)
        throw Error("intrinsic normalization has no classification protocol");
    if (split != SplitMode::InSample) {
        if (method == Method::Lobanov || method == Method::Wattfab)
            throw Error("baseline procedures require known speaker identity and are evaluated "
                        "in-sample only");
        if (method == Method::Gmagm)
            throw Error("IE-GMAGM assumes known vowel identity and is evaluated in-sample only");
    }

    const Corpus pooled =
        pool(corpus, pool_mode == PoolMode::MW ? groups_mw() : groups_mwc());

    Corpus stats_corpus, eval_corpus;
    if (split == SplitMode::InSample) {
        stats_corpus = pooled;
        eval_corpus = pooled;
    } else {
        auto [train, test] = split_repetitions(pooled);
        stats_corpus = train;
        eval_corpus = (split == SplitMode::TrainTest) ? test : train;
    }

    const ProcedureContext ctx = build_context(stats_corpus, method, pool_name(pool_mode));

    ClassificationReport report;
    report.method = method_name(method);
    report.pool = pool_mode;
    report.split = split;
    for (const auto& s : eval_corpus.samples) {
        const auto p = map_sample(s, ctx);
        const VowelClass predicted =
            p.predicted ? *p.predicted : nearest_vowel(p.x1, p.x2, ctx.classifier).first;
        report.tally(s.vowel, predicted);
    }
    return report;
}

}  // namespace formant
