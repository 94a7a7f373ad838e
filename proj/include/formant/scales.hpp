#pragma once

#include <cmath>

#include "formant/errors.hpp"

namespace formant {

enum class Space { Hz, Mel };

inline const char* space_name(Space s) { return s == Space::Hz ? "hz" : "mel"; }

// O'Shaughnessy mel: 2595 * log10(1 + f/700).
inline double hz_to_mel(double f_hz) {
    if (!(f_hz >= 0.0) || !std::isfinite(f_hz)) throw NegativeFrequency(f_hz);
    return 2595.0 * std::log10(1.0 + f_hz / 700.0);
}

inline double mel_to_hz(double mel) {
    if (!(mel >= 0.0) || !std::isfinite(mel)) throw NegativeFrequency(mel);
    return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

}  // namespace formant
