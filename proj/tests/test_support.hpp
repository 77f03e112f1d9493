#pragma once

#include <cstdint>
#include <vector>

#include "ergent/dynamics.hpp"
#include "ergent/entanglement.hpp"
#include "ergent/rng.hpp"
#include "ergent/spectra.hpp"
#include "ergent/states.hpp"

namespace ergent::test {

// Deterministic protocol instances cycling through every ensemble x
// profile combination; instance k is fully determined by (base_seed, k).
inline ProtocolConfig random_instance(std::uint64_t base_seed, int k, int d_A_min = 2,
                                      int d_A_max = 8, int d_B_min = 8, int d_B_max = 64) {
    std::uint64_t seed = derive_seed(base_seed, std::uint64_t(k));
    auto rng = make_rng(seed);
    const Spectrum::Ensemble ensembles[] = {Spectrum::Ensemble::gue,
                                            Spectrum::Ensemble::poisson,
                                            Spectrum::Ensemble::picket_fence};
    const StateProfile::Profile profiles[] = {
        StateProfile::Profile::flat, StateProfile::Profile::gaussian,
        StateProfile::Profile::gibbs, StateProfile::Profile::haar_random};
    auto ensemble = ensembles[k % 3];
    auto profile = profiles[(k / 3) % 4];
    std::uniform_int_distribution<int> d_A_dist(d_A_min, d_A_max);
    std::uniform_int_distribution<int> d_B_dist(d_B_min, d_B_max);
    int d_A = d_A_dist(rng);
    int d_B = d_B_dist(rng);

    Spectrum s;
    switch (ensemble) {
        case Spectrum::Ensemble::gue:
            s = sample_gue_spectrum(d_B, derive_seed(seed, 1));
            break;
        case Spectrum::Ensemble::poisson:
            s = sample_poisson_spectrum(d_B, 1.0, derive_seed(seed, 1));
            break;
        default:
            s = picket_fence_spectrum(d_B, 1.0);
            break;
    }
    s = unfold(s);

    StateProfile phi;
    switch (profile) {
        case StateProfile::Profile::flat:
            phi = flat_state(d_B);
            break;
        case StateProfile::Profile::gaussian:
            phi = gaussian_wavepacket(s, s.min_energy() + 0.5 * s.span(), 0.125 * s.span());
            break;
        case StateProfile::Profile::gibbs:
            phi = coherent_gibbs_state(s, 4.0 / s.span());
            break;
        default:
            phi = haar_random_state(d_B, derive_seed(seed, 2));
            break;
    }

    std::uniform_real_distribution<double> t0_dist(0.05, 2.0);
    return ProtocolConfig{d_A, t0_dist(rng), std::move(s), std::move(phi)};
}

inline GramMatrix random_gram(std::uint64_t base_seed, int k, int d_A_min = 2,
                              int d_A_max = 12, int d_B_min = 8, int d_B_max = 64) {
    ProtocolConfig cfg = random_instance(base_seed, k, d_A_min, d_A_max, d_B_min, d_B_max);
    return krylov_gram(cfg.spectrum, cfg.profile, cfg.t0, cfg.d_A);
}

}  // namespace ergent::test
