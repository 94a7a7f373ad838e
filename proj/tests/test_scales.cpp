#include <catch_amalgamated.hpp>

#include "formant/scales.hpp"

using Catch::Approx;
using namespace formant;

TEST_CASE("hz_to_mel known values") {
    CHECK(hz_to_mel(0.0) == 0.0);
    // 2595 * log10(2)
    CHECK(hz_to_mel(700.0) == Approx(781.17).margin(0.01));
    CHECK(hz_to_mel(1000.0) == Approx(999.99).margin(0.01));
}

TEST_CASE("mel_to_hz known values") {
    CHECK(mel_to_hz(0.0) == 0.0);
    CHECK(mel_to_hz(781.17) == Approx(700.0).margin(0.01));
    for (double x : {250.0, 1500.0, 3000.0})
        CHECK(mel_to_hz(hz_to_mel(x)) == Approx(x).epsilon(1e-9));
}

TEST_CASE("negative frequencies rejected") {
    CHECK_THROWS_AS(hz_to_mel(-1.0), NegativeFrequency);
    CHECK_THROWS_AS(mel_to_hz(-0.5), NegativeFrequency);
}

TEST_CASE("mel map is strictly monotonic and round-trips on [0, 10 kHz]") {
    double prev = hz_to_mel(0.0);
    for (int i = 1; i <= 1000; ++i) {
        const double f = 10.0 * i;
        const double m = hz_to_mel(f);
        CHECK(m > prev);
        prev = m;
        CHECK(std::fabs(mel_to_hz(m) - f) <= 1e-6 * f);
    }
}
