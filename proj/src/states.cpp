#include "ergent/states.hpp"

#include <algorithm>
#include <cmath>

#include "ergent/errors.hpp"
#include "ergent/rng.hpp"

namespace ergent {

const char* profile_name(StateProfile::Profile p) {
    switch (p) {
        case StateProfile::Profile::flat: return "flat";
        case StateProfile::Profile::gaussian: return "gaussian";
        case StateProfile::Profile::gibbs: return "gibbs";
        case StateProfile::Profile::haar_random: return "haar_random";
        case StateProfile::Profile::custom: return "custom";
    }
    return "custom";
}

StateProfile::Profile profile_from_name(const std::string& name) {
    if (name == "flat") return StateProfile::Profile::flat;
    if (name == "gaussian") return StateProfile::Profile::gaussian;
    if (name == "gibbs") return StateProfile::Profile::gibbs;
    if (name == "haar_random") return StateProfile::Profile::haar_random;
    if (name == "custom") return StateProfile::Profile::custom;
    fail(errc::invalid_parameter, "unknown profile tag: " + name);
}

void StateProfile::validate() const {
    require(!amplitudes.empty(), errc::invalid_dimension, "profile has no amplitudes");
    double norm2 = 0.0;
    for (const auto& a : amplitudes) norm2 += std::norm(a);
    require(std::abs(norm2 - 1.0) <= 1e-10, errc::malformed_input,
            "profile is not normalized");
}

std::vector<double> StateProfile::weights() const {
    std::vector<double> w(amplitudes.size());
    for (std::size_t n = 0; n < amplitudes.size(); ++n) w[n] = std::norm(amplitudes[n]);
    return w;
}

namespace {

void normalize_in_place(std::vector<std::complex<double>>& amps, errc on_zero,
                        const char* message) {
    double norm2 = 0.0;
    for (const auto& a : amps) norm2 += std::norm(a);
    require(norm2 > 0.0, on_zero, message);
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= inv;
}

}  // namespace

StateProfile flat_state(int d_B) {
    require(d_B >= 1, errc::invalid_dimension, "flat state requires d_B >= 1");
    StateProfile phi;
    phi.tag = StateProfile::Profile::flat;
    phi.amplitudes.assign(d_B, std::complex<double>(1.0 / std::sqrt(double(d_B)), 0.0));
    return phi;
}

StateProfile gaussian_wavepacket(const Spectrum& s, double E0, double sigma) {
    s.validate();
    require(sigma > 0.0, errc::invalid_parameter, "sigma must be positive");
    StateProfile phi;
    phi.tag = StateProfile::Profile::gaussian;
    phi.amplitudes.resize(s.energies.size());
    // No exponent shift here: total underflow is reported, per contract.
    for (std::size_t n = 0; n < s.energies.size(); ++n) {
        double d = s.energies[n] - E0;
        phi.amplitudes[n] = std::exp(-d * d / (4.0 * sigma * sigma));
    }
    normalize_in_place(phi.amplitudes, errc::degenerate_profile,
                       "gaussian profile underflowed to zero; sigma too narrow for E0");
    return phi;
}

StateProfile coherent_gibbs_state(const Spectrum& s, double beta) {
    s.validate();
    require(beta >= 0.0, errc::invalid_parameter, "beta must be non-negative");
    StateProfile phi;
    phi.tag = StateProfile::Profile::gibbs;
    phi.amplitudes.resize(s.energies.size());
    // exp(-beta (E - E_min) / 2): max-exponent subtraction, normalization
    // is scale invariant so this never under/overflows to all zeros.
    double e0 = s.min_energy();
    for (std::size_t n = 0; n < s.energies.size(); ++n)
        phi.amplitudes[n] = std::exp(-beta * (s.energies[n] - e0) / 2.0);
    normalize_in_place(phi.amplitudes, errc::degenerate_profile, "gibbs profile collapsed");
    return phi;
}

StateProfile haar_random_state(int d_B, std::uint64_t rng_seed) {
    require(d_B >= 1, errc::invalid_dimension, "haar state requires d_B >= 1");
    auto rng = make_rng(rng_seed);
    Eigen::VectorXcd v = complex_gaussian_vector(d_B, rng);
    StateProfile phi;
    phi.tag = StateProfile::Profile::haar_random;
    phi.amplitudes.assign(v.data(), v.data() + d_B);
    normalize_in_place(phi.amplitudes, errc::degenerate_profile, "zero Gaussian vector");
    return phi;
}

StateProfile custom_profile(std::vector<std::complex<double>> amplitudes,
                            bool* renormalized) {
    require(!amplitudes.empty(), errc::invalid_dimension, "empty amplitude list");
    double norm2 = 0.0;
    for (const auto& a : amplitudes) norm2 += std::norm(a);
    require(norm2 > 0.0, errc::degenerate_profile, "custom profile has zero norm");
    if (renormalized) *renormalized = std::abs(std::sqrt(norm2) - 1.0) > 1e-6;
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amplitudes) a *= inv;
    StateProfile phi;
    phi.tag = StateProfile::Profile::custom;
    phi.amplitudes = std::move(amplitudes);
    return phi;
}

}  // namespace ergent
