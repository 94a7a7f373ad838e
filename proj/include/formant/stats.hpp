#pragma once

#include <array>
#include <cmath>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "formant/corpus.hpp"
#include "formant/errors.hpp"
#include "formant/scales.hpp"

namespace formant {

// Per-formant population moments (denominator N) for one vowel or speaker.
struct Moments {
    std::array<double, 3> mean{};
    std::array<double, 3> sd{};
    std::size_t count = 0;
};

// A labeled feature point in an arbitrary space (2 or 3 dimensions used).
struct LabeledPoint {
    VowelClass vowel = VowelClass::IY;
    std::array<double, 3> x{};
};

struct VowelStatistics {
    Space space = Space::Hz;
    std::string stage = "raw";  // raw | intrinsic | denormalized | zscore | scentroid
    std::string pooling;
    int dims = 3;
    std::map<VowelClass, Moments> by_vowel;

    bool has(VowelClass v) const { return by_vowel.count(v) != 0; }
    const Moments& at(VowelClass v) const {
        auto it = by_vowel.find(v);
        if (it == by_vowel.end()) throw MissingVowel(std::string(vowel_code(v)));
        return it->second;
    }
    // i is the 1-based formant (or feature) index.
    double mean(VowelClass v, int i) const { return at(v).mean[static_cast<std::size_t>(i - 1)]; }
    double sd(VowelClass v, int i) const { return at(v).sd[static_cast<std::size_t>(i - 1)]; }
};

struct SpeakerStatistics {
    std::map<int, Moments> by_speaker;

    const Moments& at(int speaker) const {
        auto it = by_speaker.find(speaker);
        if (it == by_speaker.end()) throw UnknownSpeaker(speaker);
        return it->second;
    }
};

// Watt-Fabricius corner-vowel centroid over (F1, F2), per speaker.
struct CornerCentroid {
    int speaker_id = 0;
    double s1 = 0.0;
    double s2 = 0.0;
};

namespace detail {

inline Moments moments_of(const std::vector<std::array<double, 3>>& xs, int dims,
                          const std::string& who) {
    if (xs.size() < 2) throw InsufficientSamples(who + ": fewer than 2 samples");
    Moments m;
    m.count = xs.size();
    const double n = static_cast<double>(xs.size());
    for (int i = 0; i < dims; ++i) {
        double sum = 0.0;
        for (const auto& x : xs) sum += x[static_cast<std::size_t>(i)];
        const double mu = sum / n;
        double ss = 0.0;
        for (const auto& x : xs) {
            const double d = x[static_cast<std::size_t>(i)] - mu;
            ss += d * d;
        }
        m.mean[static_cast<std::size_t>(i)] = mu;
        m.sd[static_cast<std::size_t>(i)] = std::sqrt(ss / n);
        if (!(m.sd[static_cast<std::size_t>(i)] > 0.0))
            throw ZeroVariance(who + ": formant " + std::to_string(i + 1));
    }
    return m;
}

}  // namespace detail

// Population mean/SD per (vowel, formant), computed after conversion to
// the requested space.
inline VowelStatistics vowel_stats(const Corpus& corpus, Space space,
                                   std::string stage = "raw", std::string pooling = "") {
    std::map<VowelClass, std::vector<std::array<double, 3>>> grouped;
    for (const auto& s : corpus.samples) {
        std::array<double, 3> f{s.f1_hz, s.f2_hz, s.f3_hz};
        if (space == Space::Mel)
            for (auto& v : f) v = hz_to_mel(v);
        grouped[s.vowel].push_back(f);
    }
    VowelStatistics out;
    out.space = space;
    out.stage = std::move(stage);
    out.pooling = std::move(pooling);
    for (const auto& [v, xs] : grouped)
        out.by_vowel[v] = detail::moments_of(xs, 3, std::string(vowel_code(v)));
    return out;
}

// Same computation over pre-built feature points (z-score, S-centroid,
// de-normalized features). The points are taken in their own space.
inline VowelStatistics vowel_stats(const std::vector<LabeledPoint>& points, int dims,
                                   Space space, std::string stage, std::string pooling = "") {
    std::map<VowelClass, std::vector<std::array<double, 3>>> grouped;
    for (const auto& p : points) grouped[p.vowel].push_back(p.x);
    VowelStatistics out;
    out.space = space;
    out.stage = std::move(stage);
    out.pooling = std::move(pooling);
    out.dims = dims;
    for (const auto& [v, xs] : grouped)
        out.by_vowel[v] = detail::moments_of(xs, dims, std::string(vowel_code(v)));
    return out;
}

// Per-speaker, per-formant mean/SD over all of that speaker's samples, in Hz.
inline SpeakerStatistics speaker_stats(const Corpus& corpus) {
    std::map<int, std::vector<std::array<double, 3>>> grouped;
    std::map<int, std::set<VowelClass>> vowels_seen;
    for (const auto& s : corpus.samples) {
        grouped[s.speaker_id].push_back({s.f1_hz, s.f2_hz, s.f3_hz});
        vowels_seen[s.speaker_id].insert(s.vowel);
    }
    SpeakerStatistics out;
    for (const auto& [id, xs] : grouped) {
        if (vowels_seen[id].size() < 2)
            throw InsufficientSamples("speaker " + std::to_string(id) +
                                      ": fewer than 2 distinct vowels");
        out.by_speaker[id] = detail::moments_of(xs, 3, "speaker " + std::to_string(id));
    }
    return out;
}

// Watt-Fabricius construction over (F1, F2): corners are the speaker's mean
// /i/, mean /ɑ/, and the derived u' with F1(u') = F2(u') = F1(/i/).
inline CornerCentroid corner_centroid(const Corpus& corpus, int speaker) {
    std::array<double, 2> sum_i{}, sum_a{};
    std::size_t n_i = 0, n_a = 0;
    for (const auto& s : corpus.samples) {
        if (s.speaker_id != speaker) continue;
        if (s.vowel == VowelClass::IY) {
            sum_i[0] += s.f1_hz;
            sum_i[1] += s.f2_hz;
            ++n_i;
        } else if (s.vowel == VowelClass::AA) {
            sum_a[0] += s.f1_hz;
            sum_a[1] += s.f2_hz;
            ++n_a;
        }
    }
    if (n_i == 0) throw MissingCorner("IY");
    if (n_a == 0) throw MissingCorner("AA");
    const double i_f1 = sum_i[0] / static_cast<double>(n_i);
    const double i_f2 = sum_i[1] / static_cast<double>(n_i);
    const double a_f1 = sum_a[0] / static_cast<double>(n_a);
    const double a_f2 = sum_a[1] / static_cast<double>(n_a);
    const double u_f1 = i_f1;  // derived corner
    const double u_f2 = i_f1;
    CornerCentroid c;
    c.speaker_id = speaker;
    c.s1 = (i_f1 + a_f1 + u_f1) / 3.0;
    c.s2 = (i_f2 + a_f2 + u_f2) / 3.0;
    return c;
}

inline std::map<int, CornerCentroid> corner_centroids(const Corpus& corpus) {
    std::set<int> speakers;
    for (const auto& s : corpus.samples) speakers.insert(s.speaker_id);
    std::map<int, CornerCentroid> out;
    for (int id : speakers) out[id] = corner_centroid(corpus, id);
    return out;
}

}  // namespace formant
