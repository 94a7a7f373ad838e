#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "formant/classify.hpp"
#include "formant/corpus.hpp"
#include "formant/errors.hpp"
#include "formant/scales.hpp"
#include "formant/stats.hpp"

namespace formant {

// A sample after intrinsic normalization: three dimensionless ratios whose
// product is 1 by construction.
struct IntrinsicNormalized {
    std::array<double, 3> nf{};
    double gm123_hz = 0.0;
    // carried through from the source sample
    int speaker_id = 0;
    SpeakerGroup group = SpeakerGroup::Man;
    VowelClass vowel = VowelClass::IY;
    int repetition = 1;
};

struct DenormalizedSample {
    std::array<double, 3> df_hz{};
    VowelClass hypothesis = VowelClass::IY;  // known label (gmagm) or selected J-bar (iht)
    std::string procedure;                   // "gmagm" | "iht" | "hypothesis"
    double distance = 0.0;                   // squared WED of the winning hypothesis (iht)
    int speaker_id = 0;
    SpeakerGroup group = SpeakerGroup::Man;
    VowelClass label = VowelClass::IY;
    int repetition = 1;
};

// Dimensionless 2-D feature produced by the z-score / S-centroid baselines.
struct NormalizedSample {
    double x1 = 0.0;
    double x2 = 0.0;
    std::string procedure;  // "lobanov" | "wattfab"
    int speaker_id = 0;
    SpeakerGroup group = SpeakerGroup::Man;
    VowelClass vowel = VowelClass::IY;
    int repetition = 1;
};

// Geometric mean of the first three formants.
inline double gm123(const FormantSample& s) {
    return std::cbrt(s.f1_hz * s.f2_hz * s.f3_hz);
}

inline IntrinsicNormalized intrinsic_normalize(const FormantSample& s) {
    IntrinsicNormalized out;
    out.gm123_hz = gm123(s);
    out.nf = {s.f1_hz / out.gm123_hz, s.f2_hz / out.gm123_hz, s.f3_hz / out.gm123_hz};
    out.speaker_id = s.speaker_id;
    out.group = s.group;
    out.vowel = s.vowel;
    out.repetition = s.repetition;
    return out;
}

// Geometric mean of the pooled average formant frequencies of one vowel.
// stats must be raw Hz statistics.
inline double gma123(const VowelStatistics& stats, VowelClass vowel) {
    const Moments& m = stats.at(vowel);
    return std::cbrt(m.mean[0] * m.mean[1] * m.mean[2]);
}

// IE-GMAGM: rescale NF by the vowel's GMA123. Requires the vowel identity
// to be known (acoustic-phonetic mode).
inline DenormalizedSample denormalize_gmagm(const IntrinsicNormalized& nf, VowelClass vowel,
                                            const VowelStatistics& raw_hz_stats) {
    const double g = gma123(raw_hz_stats, vowel);
    DenormalizedSample out;
    for (int i = 0; i < 3; ++i)
        out.df_hz[static_cast<std::size_t>(i)] = nf.nf[static_cast<std::size_t>(i)] * g;
    out.hypothesis = vowel;
    out.procedure = "gmagm";
    out.speaker_id = nf.speaker_id;
    out.group = nf.group;
    out.label = nf.vowel;
    out.repetition = nf.repetition;
    return out;
}

// One hypothesized de-normalization: DF(i,J) = NF(i) * mu(i,J).
inline DenormalizedSample denormalize_hypothesis(const IntrinsicNormalized& nf, VowelClass J,
                                                 const VowelStatistics& raw_hz_stats) {
    const Moments& m = raw_hz_stats.at(J);
    DenormalizedSample out;
    for (int i = 0; i < 3; ++i)
        out.df_hz[static_cast<std::size_t>(i)] =
            nf.nf[static_cast<std::size_t>(i)] * m.mean[static_cast<std::size_t>(i)];
    out.hypothesis = J;
    out.procedure = "hypothesis";
    out.speaker_id = nf.speaker_id;
    out.group = nf.group;
    out.label = nf.vowel;
    out.repetition = nf.repetition;
    return out;
}

// Bootstrap stage: de-normalize every labeled sample with J = its known
// label, then collect mel-space mean/SD per vowel. These statistics seed
// the hypothesize-test pass.
inline VowelStatistics bootstrap_denorm_stats(const Corpus& labeled,
                                              const VowelStatistics& raw_hz_stats,
                                              std::string pooling = "") {
    std::vector<LabeledPoint> points;
    points.reserve(labeled.samples.size());
    for (const auto& s : labeled.samples) {
        const auto nf = intrinsic_normalize(s);
        const auto df = denormalize_hypothesis(nf, s.vowel, raw_hz_stats);
        points.push_back({s.vowel,
                          {hz_to_mel(df.df_hz[0]), hz_to_mel(df.df_hz[1]), hz_to_mel(df.df_hz[2])}});
    }
    return vowel_stats(points, 3, Space::Mel, "denormalized", std::move(pooling));
}

// Hypothesize-test: evaluate all V hypotheses, keep the one whose mel-space
// (DF1, DF2) is nearest (WED) to that vowel's de-normalized statistics.
inline DenormalizedSample iht_denormalize(const IntrinsicNormalized& nf,
                                          const VowelStatistics& raw_hz_stats,
                                          const VowelStatistics& denorm_stats) {
    bool found = false;
    DenormalizedSample best;
    double best_d = 0.0;
    for (VowelClass J : kAllVowels) {
        if (!denorm_stats.has(J) || !raw_hz_stats.has(J)) continue;
        DenormalizedSample cand = denormalize_hypothesis(nf, J, raw_hz_stats);
        const double d =
            wed2(hz_to_mel(cand.df_hz[0]), hz_to_mel(cand.df_hz[1]), denorm_stats.mean(J, 1),
                 denorm_stats.mean(J, 2), denorm_stats.sd(J, 1), denorm_stats.sd(J, 2));
        if (!found || d < best_d) {  // strict <: ties keep the lowest index
            found = true;
            best = std::move(cand);
            best_d = d;
        }
    }
    if (!found) throw MissingVowel("any");
    best.procedure = "iht";
    best.distance = best_d;
    return best;
}

// z-score (Lobanov) baseline over F1, F2 in Hz.
inline NormalizedSample lobanov(const FormantSample& s, const SpeakerStatistics& sstats) {
    const Moments& m = sstats.at(s.speaker_id);
    if (!(m.sd[0] > 0.0) || !(m.sd[1] > 0.0))
        throw ZeroVariance("speaker " + std::to_string(s.speaker_id));
    NormalizedSample out;
    out.x1 = (s.f1_hz - m.mean[0]) / m.sd[0];
    out.x2 = (s.f2_hz - m.mean[1]) / m.sd[1];
    out.procedure = "lobanov";
    out.speaker_id = s.speaker_id;
    out.group = s.group;
    out.vowel = s.vowel;
    out.repetition = s.repetition;
    return out;
}

// S-centroid (Watt-Fabricius) baseline: divide F1, F2 by the speaker's
// corner-vowel centroid.
inline NormalizedSample s_centroid(const FormantSample& s, const CornerCentroid& centroid) {
    if (s.speaker_id != centroid.speaker_id) throw UnknownSpeaker(s.speaker_id);
    NormalizedSample out;
    out.x1 = s.f1_hz / centroid.s1;
    out.x2 = s.f2_hz / centroid.s2;
    out.procedure = "wattfab";
    out.speaker_id = s.speaker_id;
    out.group = s.group;
    out.vowel = s.vowel;
    out.repetition = s.repetition;
    return out;
}

}  // namespace formant
