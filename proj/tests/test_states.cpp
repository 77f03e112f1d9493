#include <doctest.h>

#include <cmath>
#include <complex>

#include "ergent/accum.hpp"
#include "ergent/errors.hpp"
#include "ergent/spectra.hpp"
#include "ergent/states.hpp"

using namespace ergent;

namespace {
double norm2(const StateProfile& phi) {
    double acc = 0.0;
    for (const auto& a : phi.amplitudes) acc += std::norm(a);
    return acc;
}
}  // namespace

TEST_CASE("flat state") {
    StateProfile phi = flat_state(4);
    for (const auto& a : phi.amplitudes) CHECK(a == std::complex<double>(0.5, 0.0));
    CHECK(flat_state(1).amplitudes[0] == std::complex<double>(1.0, 0.0));
    for (int d : {2, 7, 1024}) CHECK(std::abs(norm2(flat_state(d)) - 1.0) < 1e-12);
}

TEST_CASE("gaussian wavepacket limits") {
    Spectrum s = picket_fence_spectrum(64, 1.0);

    // sigma much larger than the span: flat limit
    StateProfile wide = gaussian_wavepacket(s, 32.0, 1e6 * s.span());
    StateProfile flat = flat_state(64);
    for (int n = 0; n < 64; ++n)
        CHECK(std::abs(wide.amplitudes[n] - flat.amplitudes[n]) < 1e-6);

    // sigma much smaller than the spacing: localized on the nearest level
    StateProfile narrow = gaussian_wavepacket(s, 32.0, 0.05);
    CHECK(std::norm(narrow.amplitudes[32]) > 0.99);

    // symmetric about the center
    StateProfile sym = gaussian_wavepacket(s, 32.0, 8.0);
    for (int j = 1; j <= 31; ++j)
        CHECK(std::abs(std::abs(sym.amplitudes[32 + j]) - std::abs(sym.amplitudes[32 - j])) <
              1e-12);

    // everything real non-negative
    for (const auto& a : sym.amplitudes) {
        CHECK(a.imag() == 0.0);
        CHECK(a.real() >= 0.0);
    }

    // underflow to all-zeros: E0 mid-gap, sigma tiny relative to the distance
    CHECK_THROWS_AS(gaussian_wavepacket(s, 31.5, 1e-4), Error);
    CHECK_THROWS_AS(gaussian_wavepacket(s, 32.0, 0.0), Error);
}

TEST_CASE("coherent gibbs state") {
    Spectrum s = picket_fence_spectrum(16, 1.0);

    // beta = 0 is exactly the flat state
    StateProfile zero = coherent_gibbs_state(s, 0.0);
    StateProfile flat = flat_state(16);
    for (int n = 0; n < 16; ++n) CHECK(zero.amplitudes[n] == flat.amplitudes[n]);

    // analytic weight ratio on the picket fence
    StateProfile b1 = coherent_gibbs_state(s, 1.0);
    for (int n = 0; n < 16; ++n)
        CHECK(std::norm(b1.amplitudes[n]) / std::norm(b1.amplitudes[0]) ==
              doctest::Approx(std::exp(-double(n))).epsilon(1e-12));

    // large beta: ground-state dominance, no overflow thanks to the shift
    Spectrum wide = picket_fence_spectrum(64, 10.0);
    StateProfile cold = coherent_gibbs_state(wide, 500.0);
    CHECK(std::norm(cold.amplitudes[0]) > 0.99);
    CHECK(std::isfinite(norm2(cold)));

    CHECK_THROWS_AS(coherent_gibbs_state(s, -0.5), Error);
}

TEST_CASE("haar random state statistics") {
    for (std::uint64_t seed : {1u, 2u, 3u})
        CHECK(std::abs(norm2(haar_random_state(512, seed)) - 1.0) < 1e-12);

    // determinism
    StateProfile a = haar_random_state(64, 9);
    StateProfile b = haar_random_state(64, 9);
    for (int n = 0; n < 64; ++n) CHECK(a.amplitudes[n] == b.amplitudes[n]);

    // generically complex
    bool has_imag = false;
    for (const auto& z : a.amplitudes) has_imag |= z.imag() != 0.0;
    CHECK(has_imag);

    // Porter-Thomas: mean weight 1/d_B, participation ratio ~ d_B / 2
    const int d_B = 1024;
    KahanSum mean_w, mean_pr;
    for (int seed = 0; seed < 100; ++seed) {
        StateProfile phi = haar_random_state(d_B, 1000 + seed);
        double w4 = 0.0;
        for (const auto& z : phi.amplitudes) w4 += std::norm(z) * std::norm(z);
        mean_pr.add(1.0 / w4);
        mean_w.add(norm2(phi) / d_B);
    }
    CHECK(std::abs(mean_w.value() / 100 - 1.0 / d_B) < 0.05 / d_B);
    CHECK(std::abs(mean_pr.value() / 100 - d_B / 2.0) < 0.1 * d_B / 2.0);
}

TEST_CASE("smooth profiles are real non-negative") {
    Spectrum s = unfold(sample_gue_spectrum(128, 4));
    for (const StateProfile& phi :
         {flat_state(128), gaussian_wavepacket(s, 64.0, 16.0), coherent_gibbs_state(s, 0.03)}) {
        CHECK(std::abs(norm2(phi) - 1.0) < 1e-10);
        for (const auto& a : phi.amplitudes) {
            CHECK(a.imag() == 0.0);
            CHECK(a.real() >= 0.0);
        }
    }
}

TEST_CASE("custom profiles renormalize with a warning") {
    bool warned = false;
    StateProfile ok = custom_profile({{0.6, 0.0}, {0.8, 0.0}}, &warned);
    CHECK_FALSE(warned);
    CHECK(std::abs(norm2(ok) - 1.0) < 1e-12);

    StateProfile off = custom_profile({{1.0, 0.0}, {1.0, 0.0}}, &warned);
    CHECK(warned);
    CHECK(std::abs(norm2(off) - 1.0) < 1e-12);

    CHECK_THROWS_AS(custom_profile({{0.0, 0.0}}), Error);
}
