#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ergent/errors.hpp"
#include "ergent/rng.hpp"
#include "ergent/transfer.hpp"
#include "test_support.hpp"

using namespace ergent;

namespace {
constexpr double kPi = std::numbers::pi;

GramMatrix identity_gram(int d_A) {
    GramMatrix g;
    g.d_A = d_A;
    g.t0 = 1.0;
    g.toeplitz = true;
    g.entries = Eigen::MatrixXcd::Identity(d_A, d_A);
    return g;
}

GramMatrix all_ones_gram(int d_A) {
    GramMatrix g;
    g.d_A = d_A;
    g.t0 = 1.0;
    g.toeplitz = true;
    g.entries = Eigen::MatrixXcd::Ones(d_A, d_A);
    return g;
}
}  // namespace

TEST_CASE("diagnostics of the extremal grams") {
    TransferDiagnostics id = transfer_diagnostics(identity_gram(6));
    CHECK(id.r_min == doctest::Approx(1.0));
    CHECK(id.r_max == doctest::Approx(1.0));
    CHECK(id.worst_case_error == doctest::Approx(0.0));
    CHECK(id.eta2 == doctest::Approx(0.0));
    CHECK(id.bd_product == doctest::Approx(0.0));

    TransferDiagnostics ones = transfer_diagnostics(all_ones_gram(2));
    CHECK(ones.r_min == doctest::Approx(0.0));
    CHECK(ones.r_max == doctest::Approx(2.0));
    CHECK(ones.worst_case_error == doctest::Approx(1.0));
    CHECK(ones.eta2 == doctest::Approx(1.0));
    CHECK(ones.bd_product == doctest::Approx(1.0));  // equality case
}

TEST_CASE("eigenvalue eta2 equals the trace route") {
    for (int k = 0; k < 30; ++k) {
        GramMatrix g = test::random_gram(606, k);
        TransferDiagnostics diag = transfer_diagnostics(g);
        double tr = (g.entries * g.entries).trace().real() / g.d_A - 1.0;
        CHECK(std::abs(diag.eta2 - tr) < 1e-10);
        double mean = 0.0;
        for (double r : diag.gram_eigenvalues) mean += r;
        CHECK(std::abs(mean / g.d_A - 1.0) < 1e-10);
    }
}

TEST_CASE("transfer error basics") {
    auto rng = make_rng(8);
    Eigen::MatrixXcd O = complex_gaussian_matrix(4, 4, rng);
    Eigen::MatrixXcd P = complex_gaussian_matrix(4, 4, rng);

    CHECK(transfer_error(identity_gram(4), O, P) == doctest::Approx(0.0));

    // unit Gram diagonal makes Tr[G - I] vanish identically
    Eigen::MatrixXcd id4 = Eigen::MatrixXcd::Identity(4, 4);
    GramMatrix g = test::random_gram(12, 1, 4, 4);
    CHECK(transfer_error(g, id4, id4) == doctest::Approx(0.0));

    CHECK_THROWS_AS(transfer_error(g, Eigen::MatrixXcd::Zero(4, 4), P), Error);
}

TEST_CASE("transfer error is bounded by the worst-case eigenvalue deviation") {
    for (int k = 0; k < 50; ++k) {
        GramMatrix g = test::random_gram(4242, k);
        TransferDiagnostics diag = transfer_diagnostics(g);
        auto rng = make_rng(derive_seed(4242, 1000 + k));
        Eigen::MatrixXcd O = complex_gaussian_matrix(g.d_A, g.d_A, rng);
        CHECK(transfer_error(g, O, O) <= diag.worst_case_error + 1e-10);

        // elementary matrix units probe the extremal inner products
        Eigen::MatrixXcd unit = Eigen::MatrixXcd::Zero(g.d_A, g.d_A);
        unit(k % g.d_A, (k / 2) % g.d_A) = 1.0;
        CHECK(transfer_error(g, unit, unit) <= diag.worst_case_error + 1e-10);
    }
}

TEST_CASE("epr transfer identity") {
    for (int d : {2, 4, 8}) {
        auto rng = make_rng(100 + d);
        for (int rep = 0; rep < 10; ++rep) {
            Eigen::MatrixXcd O = complex_gaussian_matrix(d, d, rng);
            CHECK(epr_transfer_residual(d, O) < 1e-12);

            // pre-loaded transformation on system 2 commutes through
            Eigen::MatrixXcd R = complex_gaussian_matrix(d, d, rng);
            CHECK(epr_transfer_residual(d, O, R) < 1e-12);
        }
        CHECK(epr_transfer_residual(d, Eigen::MatrixXcd::Identity(d, d)) == 0.0);
    }
}

TEST_CASE("purity threshold arithmetic") {
    CapacityCase c = CapacityCase::make(CapacityCase::Tag::ergodic_smooth, 0.1, 1.0, 0.0);
    CHECK(purity_threshold(16, c) == doctest::Approx(0.063125).epsilon(1e-12));

    // epsilon -> 1 limit of the excess: 1/d_A
    CapacityCase near_one = CapacityCase::make(CapacityCase::Tag::ergodic_smooth, 0.999999);
    CHECK(purity_threshold(8, near_one) ==
          doctest::Approx(1.0 / 8 + 0.999999 * 0.999999 / 8).epsilon(1e-12));

    // excess scales exactly as eps^2 d_A^-gamma (ln d_A)^-kappa
    for (int d_A : {3, 9, 27}) {
        for (double kappa : {0.0, 1.0, 2.5}) {
            CapacityCase cc = CapacityCase::make(CapacityCase::Tag::ergodic_smooth, 0.2, 1.5,
                                                 kappa);
            double excess = purity_threshold(d_A, cc) - 1.0 / d_A;
            double expected = 0.04 / (std::pow(double(d_A), 1.5) *
                                      std::pow(std::log(double(d_A)), kappa));
            CHECK(excess == doctest::Approx(expected).epsilon(1e-12));
        }
    }

    CHECK_THROWS_AS(purity_threshold(1, CapacityCase::make(
                                            CapacityCase::Tag::ergodic_smooth, 0.1, 1.0, 1.0)),
                    Error);
}

TEST_CASE("minimum d_B bounds") {
    CapacityCase smooth = CapacityCase::make(CapacityCase::Tag::ergodic_smooth, 0.1);
    CHECK(min_dB_bound(16, smooth) == doctest::Approx(160.0).epsilon(1e-12));

    CapacityCase generic = CapacityCase::make(CapacityCase::Tag::generic_or_infinite_t, 0.1);
    CHECK(min_dB_bound(16, generic) == doctest::Approx(1600.0).epsilon(1e-12));

    CapacityCase poisson = CapacityCase::make(CapacityCase::Tag::poisson_generic, 0.1);
    CHECK(min_dB_bound(16, poisson) / min_dB_bound(16, generic) ==
          doctest::Approx(2.0).epsilon(1e-14));

    // gamma = 2 sufficient condition
    CapacityCase strict = CapacityCase::make(CapacityCase::Tag::ergodic_smooth, 0.1, 2.0);
    CHECK(min_dB_bound(16, strict) == doctest::Approx(640.0).epsilon(1e-12));

    CHECK_THROWS_AS(CapacityCase::make(CapacityCase::Tag::ergodic_smooth, 1.5), Error);
    CHECK_THROWS_AS(min_dB_bound(1, smooth), Error);
}

TEST_CASE("bhatia-davis inequality") {
    auto id = bhatia_davis_check(transfer_diagnostics(identity_gram(4)));
    CHECK(id.holds);
    CHECK(id.slack == doctest::Approx(0.0));

    auto ones = bhatia_davis_check(transfer_diagnostics(all_ones_gram(2)));
    CHECK(ones.holds);
    CHECK(ones.slack == doctest::Approx(0.0));  // equality

    for (int k = 0; k < 200; ++k) {
        auto chk = bhatia_davis_check(transfer_diagnostics(test::random_gram(246, k)));
        CHECK(chk.holds);
    }
}

TEST_CASE("perfect ergodicity equivalences") {
    // worst_case = 0 <=> eta2 = 0 <=> purity = 1/d_A
    const int d_B = 32, d_A = 8;
    GramMatrix g = krylov_gram(picket_fence_spectrum(d_B, 1.0), flat_state(d_B),
                               2 * kPi / d_B, d_A);
    TransferDiagnostics diag = transfer_diagnostics(g);
    CHECK(diag.worst_case_error < 1e-10);
    CHECK(std::abs(diag.eta2) < 1e-10);
    double purity = g.entries.squaredNorm() / double(d_A * d_A);
    CHECK(std::abs(purity - 1.0 / d_A) < 1e-10);

    // and a generic instance breaks all three together
    GramMatrix gen = test::random_gram(777, 4);
    TransferDiagnostics dg = transfer_diagnostics(gen);
    if (dg.worst_case_error > 1e-6) {
        CHECK(dg.eta2 > 0.0);
        CHECK(gen.entries.squaredNorm() / double(gen.d_A * gen.d_A) > 1.0 / gen.d_A);
    }
}

TEST_CASE("gaussian-tail ratio is measured, not asserted") {
    // (r_max - 1) / sqrt(2 eta2 ln d_A): reported for diagnostics only.
    GramMatrix g = test::random_gram(135, 2, 8, 12, 32, 64);
    TransferDiagnostics diag = transfer_diagnostics(g);
    if (diag.eta2 > 0.0 && g.d_A >= 2) {
        double ratio = (diag.r_max - 1.0) /
                       std::sqrt(2.0 * diag.eta2 * std::log(double(g.d_A)));
        CHECK(std::isfinite(ratio));
        CHECK(ratio >= 0.0);
    }
}
