#include "ergent/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ergent/errors.hpp"
#include "ergent/rng.hpp"

namespace ergent {

const char* ensemble_name(Spectrum::Ensemble e) {
    switch (e) {
        case Spectrum::Ensemble::gue: return "gue";
        case Spectrum::Ensemble::poisson: return "poisson";
        case Spectrum::Ensemble::picket_fence: return "picket_fence";
        case Spectrum::Ensemble::custom: return "custom";
    }
    return "custom";
}

Spectrum::Ensemble ensemble_from_name(const std::string& name) {
    if (name == "gue") return Spectrum::Ensemble::gue;
    if (name == "poisson") return Spectrum::Ensemble::poisson;
    if (name == "picket_fence") return Spectrum::Ensemble::picket_fence;
    if (name == "custom") return Spectrum::Ensemble::custom;
    fail(errc::invalid_parameter, "unknown ensemble tag: " + name);
}

void Spectrum::validate() const {
    require(!energies.empty(), errc::invalid_dimension, "spectrum has no levels");
    require(std::is_sorted(energies.begin(), energies.end()),
            errc::malformed_input, "spectrum energies must be sorted");
}

Spectrum custom_spectrum(std::vector<double> energies, bool unfolded) {
    Spectrum s;
    s.energies = std::move(energies);
    s.ensemble = Spectrum::Ensemble::custom;
    s.unfolded = unfolded;
    s.validate();
    return s;
}

Eigen::MatrixXcd gue_matrix(int d_B, std::mt19937_64& rng) {
    require(d_B >= 2, errc::invalid_dimension, "GUE requires d_B >= 2");
    Eigen::MatrixXcd A = complex_gaussian_matrix(d_B, d_B, rng);
    return (A + A.adjoint()) / 2.0;
}

Spectrum sample_gue_spectrum(int d_B, std::uint64_t rng_seed) {
    auto rng = make_rng(rng_seed);
    Eigen::MatrixXcd H = gue_matrix(d_B, rng);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H, Eigen::EigenvaluesOnly);
    Spectrum s;
    s.energies.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + d_B);
    std::sort(s.energies.begin(), s.energies.end());
    s.ensemble = Spectrum::Ensemble::gue;
    return s;
}

Spectrum sample_poisson_spectrum(int d_B, double mean_spacing, std::uint64_t rng_seed) {
    require(d_B >= 2, errc::invalid_dimension, "Poisson spectrum requires d_B >= 2");
    require(mean_spacing > 0.0, errc::invalid_parameter, "mean_spacing must be positive");
    auto rng = make_rng(rng_seed);
    std::exponential_distribution<double> expo(1.0 / mean_spacing);
    Spectrum s;
    s.energies.resize(d_B);
    double e = 0.0;
    for (int n = 0; n < d_B; ++n) {
        e += expo(rng);
        s.energies[n] = e;
    }
    s.ensemble = Spectrum::Ensemble::poisson;
    return s;
}

Spectrum picket_fence_spectrum(int d_B, double spacing) {
    require(d_B >= 1, errc::invalid_dimension, "picket fence requires d_B >= 1");
    require(spacing > 0.0, errc::invalid_parameter, "spacing must be positive");
    Spectrum s;
    s.energies.resize(d_B);
    for (int n = 0; n < d_B; ++n) s.energies[n] = n * spacing;
    s.ensemble = Spectrum::Ensemble::picket_fence;
    return s;
}

Spectrum unfold(const Spectrum& s) {
    s.validate();
    require(s.d_B() >= 2, errc::invalid_dimension, "unfolding requires d_B >= 2");
    double span = s.span();
    require(span > 0.0, errc::degenerate_spectrum, "cannot unfold a degenerate spectrum");
    double mean_spacing = span / (s.d_B() - 1);
    Spectrum out;
    out.energies.resize(s.energies.size());
    double e0 = s.min_energy();
    for (std::size_t n = 0; n < s.energies.size(); ++n)
        out.energies[n] = (s.energies[n] - e0) / mean_spacing;
    out.ensemble = s.ensemble;
    out.unfolded = true;
    return out;
}

double heisenberg_time(const Spectrum& s) {
    s.validate();
    require(s.d_B() >= 2, errc::invalid_dimension, "heisenberg_time requires d_B >= 2");
    double span = s.span();
    require(span > 0.0, errc::degenerate_spectrum, "degenerate spectrum has no density scale");
    return 2.0 * std::numbers::pi * (s.d_B() - 1) / span;
}

double spacing_ratio_statistic(const Spectrum& s) {
    s.validate();
    require(s.d_B() >= 3, errc::invalid_dimension, "spacing ratios require d_B >= 3");
    const auto& e = s.energies;
    double acc = 0.0;
    int count = 0;
    for (std::size_t n = 0; n + 2 < e.size(); ++n) {
        double a = e[n + 1] - e[n];
        double b = e[n + 2] - e[n + 1];
        double hi = std::max(a, b);
        double lo = std::min(a, b);
        acc += hi > 0.0 ? lo / hi : 0.0;  // 0/x counted as 0
        ++count;
    }
    return acc / count;
}

Eigen::VectorXcd EigenSystem::to_eigenbasis(const Eigen::VectorXcd& state) const {
    require(state.size() == basis.rows(), errc::pairing_mismatch,
            "state dimension does not match the diagonalized Hamiltonian");
    return basis.adjoint() * state;
}

EigenSystem diagonalize_hermitian(const Eigen::MatrixXcd& H) {
    require(H.rows() == H.cols() && H.rows() >= 1, errc::invalid_dimension,
            "Hamiltonian must be square");
    double asym = (H - H.adjoint()).cwiseAbs().maxCoeff();
    require(asym <= 1e-10, errc::symmetry_violation,
            "Hamiltonian is not Hermitian within 1e-10");
    Eigen::MatrixXcd Hs = (H + H.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Hs);
    EigenSystem out;
    out.spectrum.energies.assign(solver.eigenvalues().data(),
                                 solver.eigenvalues().data() + H.rows());
    out.spectrum.ensemble = Spectrum::Ensemble::custom;
    out.basis = solver.eigenvectors();
    return out;
}

}  // namespace ergent
