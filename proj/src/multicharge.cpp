#include "ergent/multicharge.hpp"

#include <cmath>

#include "ergent/entanglement.hpp"
#include "ergent/errors.hpp"

namespace ergent {

void ChargeSet::validate() const {
    require(a_eigenvalues.rows() >= 1 && b_eigenvalues.rows() >= 1,
            errc::invalid_dimension, "charge tables must have at least one row");
    require(a_eigenvalues.cols() >= 1, errc::invalid_dimension,
            "at least one charge is required");
    require(a_eigenvalues.cols() == b_eigenvalues.cols(), errc::pairing_mismatch,
            "charge tables disagree on the number of charges");
}

GramMatrix multicharge_gram(const ChargeSet& charges, const StateProfile& phi, double t0) {
    charges.validate();
    phi.validate();
    require(phi.d_B() == charges.d_B(), errc::pairing_mismatch,
            "profile length does not match the B-charge table");
    require(t0 > 0.0, errc::invalid_parameter, "t0 must be positive");

    const int d_A = charges.d_A();
    const int d_B = charges.d_B();
    // Krylov vector n has components phi_mu e^{-i theta(n, mu)} with
    // theta = t0 * sum_k q_{Ak,n} Q_{Bk,mu}; the Gram is conj(V) V^T.
    Eigen::MatrixXd theta = t0 * (charges.a_eigenvalues * charges.b_eigenvalues.transpose());
    Eigen::MatrixXcd v(d_A, d_B);
    for (int n = 0; n < d_A; ++n)
        for (int m = 0; m < d_B; ++m)
            v(n, m) = phi.amplitudes[m] *
                      std::complex<double>(std::cos(theta(n, m)), -std::sin(theta(n, m)));
    GramMatrix g;
    g.entries = v.conjugate() * v.transpose();
    g.entries = ((g.entries + g.entries.adjoint()) / 2.0).eval();
    g.entries.diagonal().setOnes();  // exact by normalization
    g.t0 = t0;
    g.d_A = d_A;
    g.toeplitz = false;
    return g;
}

std::pair<double, double> multicharge_purity(const ChargeSet& charges,
                                             const StateProfile& phi, double t0) {
    GramMatrix g = multicharge_gram(charges, phi, t0);
    return {purity_from_gram(g), eta2(g)};
}

}  // namespace ergent
