#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "formant/corpus.hpp"
#include "formant/errors.hpp"
#include "formant/stats.hpp"

namespace formant {

// Squared weighted Euclidean distance over the first two features.
// The squared form is monotone-equivalent for argmin purposes.
inline double wed2(double x1, double x2, double mu1, double mu2, double sd1, double sd2) {
    if (!(sd1 > 0.0) || !(sd2 > 0.0)) throw ZeroVariance("wed: nonpositive sd");
    const double d1 = (x1 - mu1) / sd1;
    const double d2 = (x2 - mu2) / sd2;
    return d1 * d1 + d2 * d2;
}

// Nearest vowel under WED. Ties break to the lowest enumeration index.
inline std::pair<VowelClass, double> nearest_vowel(double x1, double x2,
                                                   const VowelStatistics& stats) {
    bool found = false;
    VowelClass best = VowelClass::IY;
    double best_d = 0.0;
    for (VowelClass v : kAllVowels) {
        if (!stats.has(v)) continue;
        const double d = wed2(x1, x2, stats.mean(v, 1), stats.mean(v, 2), stats.sd(v, 1),
                              stats.sd(v, 2));
        if (!found || d < best_d) {
            found = true;
            best = v;
            best_d = d;
        }
    }
    if (!found) throw MissingVowel("any");
    return {best, best_d};
}

enum class PoolMode { MW, MWC };
enum class SplitMode { InSample, TrainTest, TrainOnTrain };

inline const char* pool_name(PoolMode p) { return p == PoolMode::MW ? "mw" : "mwc"; }

inline const char* split_name(SplitMode s) {
    switch (s) {
        case SplitMode::InSample: return "insample";
        case SplitMode::TrainTest: return "traintest";
        case SplitMode::TrainOnTrain: return "trainontrain";
    }
    return "?";
}

struct ClassificationReport {
    std::string method;
    PoolMode pool = PoolMode::MWC;
    SplitMode split = SplitMode::InSample;
    std::size_t total = 0;
    std::size_t correct = 0;
    double accuracy = 0.0;
    // confusion[true][predicted], indexed by vowel enumeration value.
    std::array<std::array<std::size_t, 10>, 10> confusion{};

    void tally(VowelClass truth, VowelClass predicted) {
        ++total;
        if (truth == predicted) ++correct;
        ++confusion[static_cast<std::size_t>(truth)][static_cast<std::size_t>(predicted)];
        accuracy = static_cast<double>(correct) / static_cast<double>(total);
    }
};

}  // namespace formant
