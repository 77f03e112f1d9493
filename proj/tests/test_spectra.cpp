#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ergent/accum.hpp"
#include "ergent/errors.hpp"
#include "ergent/rng.hpp"
#include "ergent/spectra.hpp"

using namespace ergent;

namespace {
constexpr double kPi = std::numbers::pi;

double sum(const std::vector<double>& xs) {
    KahanSum s;
    for (double x : xs) s.add(x);
    return s.value();
}
}  // namespace

TEST_CASE("gue eigenvalues preserve the sampled trace") {
    for (std::uint64_t seed : {3u, 17u, 91u}) {
        auto rng = make_rng(seed);
        Eigen::MatrixXcd H = gue_matrix(2, rng);
        double trace = H.trace().real();
        auto rng2 = make_rng(seed);  // same draw
        (void)rng2;
        Spectrum s = sample_gue_spectrum(2, seed);
        CHECK(std::abs(sum(s.energies) - trace) < 1e-9);
    }
}

TEST_CASE("gue spectra stay inside the semicircle edge") {
    // Monte Carlo over 100 seeds at d_B = 256: the fraction of eigenvalues
    // beyond 2.1 sqrt(d_B) stays below 1%.
    const int d_B = 256;
    const double edge = 2.1 * std::sqrt(double(d_B));
    int outside = 0, total = 0;
    for (int seed = 0; seed < 100; ++seed) {
        Spectrum s = sample_gue_spectrum(d_B, 7 + seed);
        for (double e : s.energies) {
            if (std::abs(e) > edge) ++outside;
            ++total;
        }
    }
    CHECK(double(outside) / total < 0.01);
}

TEST_CASE("gue sampling is deterministic per seed") {
    Spectrum a = sample_gue_spectrum(64, 3);
    Spectrum b = sample_gue_spectrum(64, 3);
    REQUIRE(a.energies.size() == b.energies.size());
    for (std::size_t i = 0; i < a.energies.size(); ++i)
        CHECK(a.energies[i] == b.energies[i]);
    CHECK_THROWS_AS(sample_gue_spectrum(1, 3), Error);
}

TEST_CASE("poisson spectrum has the requested mean spacing") {
    Spectrum s = sample_poisson_spectrum(1024, 1.0, 1);
    double mean = (s.max_energy() - s.min_energy()) / (s.d_B() - 1);
    CHECK(mean == doctest::Approx(1.0).epsilon(0.1));
    Spectrum two = sample_poisson_spectrum(2, 1.0, 5);
    CHECK(two.d_B() == 2);
    CHECK(two.energies[0] <= two.energies[1]);
    CHECK_THROWS_AS(sample_poisson_spectrum(8, 0.0, 1), Error);
    CHECK_THROWS_AS(sample_poisson_spectrum(8, -1.0, 1), Error);
}

TEST_CASE("spacing ratio statistic separates the ensembles") {
    // Poisson: 2 ln 2 - 1 = 0.3863; GUE: 0.5996. Monte Carlo averages.
    KahanSum poisson;
    for (int seed = 0; seed < 100; ++seed)
        poisson.add(spacing_ratio_statistic(sample_poisson_spectrum(1024, 1.0, seed)));
    CHECK(std::abs(poisson.value() / 100 - 0.386) < 0.02);

    KahanSum gue;
    for (int seed = 0; seed < 50; ++seed)
        gue.add(spacing_ratio_statistic(sample_gue_spectrum(256, 100 + seed)));
    CHECK(std::abs(gue.value() / 50 - 0.600) < 0.02);

    CHECK(spacing_ratio_statistic(picket_fence_spectrum(16, 0.7)) == doctest::Approx(1.0));
}

TEST_CASE("spacing ratio is invariant under affine maps") {
    Spectrum s = sample_gue_spectrum(128, 11);
    double r = spacing_ratio_statistic(s);
    for (double scale : {0.25, 3.0, 1e4}) {
        std::vector<double> mapped;
        for (double e : s.energies) mapped.push_back(scale * e - 5.0);
        CHECK(spacing_ratio_statistic(custom_spectrum(mapped)) == doctest::Approx(r).epsilon(1e-12));
    }
}

TEST_CASE("picket fence spectra") {
    Spectrum s = picket_fence_spectrum(4, 1.0);
    CHECK(s.energies == std::vector<double>{0.0, 1.0, 2.0, 3.0});
    CHECK(picket_fence_spectrum(1, 2.0).energies == std::vector<double>{0.0});
    Spectrum h = picket_fence_spectrum(8, 0.5);
    for (int n = 0; n + 1 < 8; ++n)
        CHECK(h.energies[n + 1] - h.energies[n] == doctest::Approx(0.5));
}

TEST_CASE("unfold rescales to unit mean spacing") {
    Spectrum p = unfold(picket_fence_spectrum(16, 0.5));
    for (int n = 0; n + 1 < 16; ++n)
        CHECK(p.energies[n + 1] - p.energies[n] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.unfolded);

    Spectrum g = unfold(sample_gue_spectrum(512, 21));
    double mean = (g.max_energy() - g.min_energy()) / (g.d_B() - 1);
    CHECK(std::abs(mean - 1.0) < 1e-9);
    CHECK(std::is_sorted(g.energies.begin(), g.energies.end()));

    // idempotence
    Spectrum gg = unfold(g);
    for (int n = 0; n < g.d_B(); ++n)
        CHECK(std::abs(gg.energies[n] - g.energies[n]) < 1e-9);

    CHECK_THROWS_AS(unfold(custom_spectrum({1.0, 1.0, 1.0})), Error);
}

TEST_CASE("heisenberg time tracks the mean density of states") {
    CHECK(heisenberg_time(picket_fence_spectrum(32, 1.0)) == doctest::Approx(2 * kPi));
    CHECK(heisenberg_time(picket_fence_spectrum(32, 0.5)) == doctest::Approx(4 * kPi));
    Spectrum u = unfold(sample_gue_spectrum(256, 5));
    CHECK(std::abs(heisenberg_time(u) - 2 * kPi) < 1e-6);

    // dilation: t_H(c E) = t_H(E) / c
    Spectrum s = sample_poisson_spectrum(64, 1.0, 9);
    std::vector<double> dilated;
    for (double e : s.energies) dilated.push_back(2.5 * e);
    CHECK(heisenberg_time(custom_spectrum(dilated)) ==
          doctest::Approx(heisenberg_time(s) / 2.5).epsilon(1e-9));

    CHECK_THROWS_AS(heisenberg_time(custom_spectrum({2.0, 2.0})), Error);
}

TEST_CASE("generated spectra are sorted") {
    for (int seed = 0; seed < 20; ++seed) {
        Spectrum g = sample_gue_spectrum(48, seed);
        CHECK(std::is_sorted(g.energies.begin(), g.energies.end()));
        Spectrum p = sample_poisson_spectrum(48, 0.3, seed);
        CHECK(std::is_sorted(p.energies.begin(), p.energies.end()));
    }
}

TEST_CASE("zero spacings contribute zero ratio") {
    Spectrum s = custom_spectrum({0.0, 0.0, 1.0, 2.0});
    // pairs: (0,1) -> 0/1 = 0, (1,1) -> 1
    CHECK(spacing_ratio_statistic(s) == doctest::Approx(0.5));
}

TEST_CASE("diagonalize_hermitian recovers eigensystems") {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
    d.diagonal() << 2.0, -1.0, 0.5;
    EigenSystem es = diagonalize_hermitian(d);
    CHECK(es.spectrum.energies == std::vector<double>{-1.0, 0.5, 2.0});

    Eigen::MatrixXcd pauli_x(2, 2);
    pauli_x << 0, 1, 1, 0;
    EigenSystem px = diagonalize_hermitian(pauli_x);
    CHECK(px.spectrum.energies[0] == doctest::Approx(-1.0));
    CHECK(px.spectrum.energies[1] == doctest::Approx(1.0));

    // basis is unitary and diagonalizes H
    auto rng = make_rng(42);
    Eigen::MatrixXcd H = gue_matrix(16, rng);
    EigenSystem sys = diagonalize_hermitian(H);
    Eigen::MatrixXcd lambda = Eigen::MatrixXcd::Zero(16, 16);
    for (int i = 0; i < 16; ++i) lambda(i, i) = sys.spectrum.energies[i];
    CHECK((sys.basis.adjoint() * sys.basis - Eigen::MatrixXcd::Identity(16, 16))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    CHECK((H * sys.basis - sys.basis * lambda).cwiseAbs().maxCoeff() < 1e-10);

    // spectrum invariant under a unitary change of basis
    Eigen::MatrixXcd U = haar_unitary(16, rng);
    EigenSystem rotated = diagonalize_hermitian(U * H * U.adjoint());
    for (int i = 0; i < 16; ++i)
        CHECK(std::abs(rotated.spectrum.energies[i] - sys.spectrum.energies[i]) < 1e-8);

    Eigen::MatrixXcd bad(2, 2);
    bad << 0, 1, 0, 0;
    CHECK_THROWS_AS(diagonalize_hermitian(bad), Error);
}
