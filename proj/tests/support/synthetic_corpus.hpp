#pragma once

// Deterministic P&B-shaped synthetic corpus used by tests and demos.
// Group-level vowel templates are plausible American English formant
// targets; each speaker applies a uniform vocal-tract scale plus small
// per-formant biases, and each utterance adds independent jitter.

#include <array>
#include <cmath>
#include <random>

#include "formant/corpus.hpp"

namespace formant::testing {

struct VowelTemplate {
    double f0, f1, f2, f3;
};

inline const std::array<std::array<VowelTemplate, 10>, 3>& group_templates() {
    static const std::array<std::array<VowelTemplate, 10>, 3> t = {{
        // men
        {{{136, 270, 2290, 3010},
          {135, 390, 1990, 2550},
          {130, 530, 1840, 2480},
          {127, 660, 1720, 2410},
          {124, 640, 1190, 2390},
          {124, 730, 1090, 2440},
          {129, 570, 840, 2410},
          {137, 440, 1020, 2240},
          {141, 300, 870, 2240},
          {133, 490, 1350, 1690}}},
        // women
        {{{235, 310, 2790, 3310},
          {232, 430, 2480, 3070},
          {223, 610, 2330, 2990},
          {210, 860, 2050, 2850},
          {221, 760, 1400, 2780},
          {212, 850, 1220, 2810},
          {216, 590, 920, 2710},
          {232, 470, 1160, 2680},
          {231, 370, 950, 2670},
          {218, 500, 1640, 1960}}},
        // children
        {{{272, 370, 3200, 3730},
          {269, 530, 2730, 3600},
          {260, 690, 2610, 3570},
          {251, 1010, 2320, 3320},
          {256, 850, 1590, 3360},
          {246, 1030, 1370, 3170},
          {263, 680, 1060, 3180},
          {276, 560, 1410, 3310},
          {274, 430, 1170, 3260},
          {261, 560, 1820, 2160}}},
    }};
    return t;
}

inline Corpus make_synthetic_corpus(int n_men = 33, int n_women = 28, int n_children = 15,
                                    unsigned seed = 42) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> vtl(1.0, 0.06);
    std::normal_distribution<double> bias(1.0, 0.03);
    std::normal_distribution<double> jitter(1.0, 0.035);

    Corpus corpus;
    corpus.provenance = "synthetic seed=" + std::to_string(seed);
    int speaker = 0;
    const std::array<int, 3> counts{n_men, n_women, n_children};
    for (int g = 0; g < 3; ++g) {
        for (int k = 0; k < counts[static_cast<std::size_t>(g)]; ++k) {
            ++speaker;
            double scale = std::clamp(vtl(rng), 0.85, 1.15);
            std::array<double, 3> fbias{std::clamp(bias(rng), 0.92, 1.08),
                                        std::clamp(bias(rng), 0.92, 1.08),
                                        std::clamp(bias(rng), 0.92, 1.08)};
            for (std::size_t vi = 0; vi < kAllVowels.size(); ++vi) {
                const auto& t = group_templates()[static_cast<std::size_t>(g)][vi];
                for (int rep = 1; rep <= 2; ++rep) {
                    FormantSample s;
                    s.speaker_id = speaker;
                    s.group = static_cast<SpeakerGroup>(g + 1);
                    s.vowel = kAllVowels[vi];
                    s.repetition = rep;
                    for (;;) {
                        s.f0_hz = std::round(t.f0 * scale * std::clamp(jitter(rng), 0.9, 1.1));
                        s.f1_hz = std::round(t.f1 * scale * fbias[0] *
                                             std::clamp(jitter(rng), 0.9, 1.1));
                        s.f2_hz = std::round(t.f2 * scale * fbias[1] *
                                             std::clamp(jitter(rng), 0.9, 1.1));
                        s.f3_hz = std::round(t.f3 * scale * fbias[2] *
                                             std::clamp(jitter(rng), 0.9, 1.1));
                        if (s.f0_hz > 0 && s.f1_hz > 0 && s.f1_hz < s.f2_hz && s.f2_hz < s.f3_hz)
                            break;
                    }
                    corpus.samples.push_back(s);
                }
            }
        }
    }
    return corpus;
}

}  // namespace formant::testing
