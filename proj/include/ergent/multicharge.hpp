#pragma once

#include <utility>

#include <Eigen/Dense>

#include "ergent/dynamics.hpp"
#include "ergent/states.hpp"

namespace ergent {

/// Joint eigenvalue tables of K mutually commuting conserved charges on
/// the control register (q, d_A x K) and the complex system (Q, d_B x K).
/// The charges are fully specified by these tables; commutation is
/// implicit in sharing a joint eigenbasis.
struct ChargeSet {
    Eigen::MatrixXd a_eigenvalues;  // (n, k) -> q_{Ak,n}
    Eigen::MatrixXd b_eigenvalues;  // (m, k) -> Q_{Bk,m}

    int d_A() const { return static_cast<int>(a_eigenvalues.rows()); }
    int d_B() const { return static_cast<int>(b_eigenvalues.rows()); }
    int num_charges() const { return static_cast<int>(a_eigenvalues.cols()); }
    void validate() const;
};

/// General (Hermitian, non-Toeplitz) Krylov Gram matrix of the
/// multicharge coupling:
///   G_nm = sum_mu |phi_mu|^2 exp(-i t0 sum_k (q_{Ak,m} - q_{Ak,n}) Q_{Bk,mu}).
/// A single charge with q_{A,n} = n and Q_{B,m} = E_m reduces to the
/// standard Toeplitz Gram.
GramMatrix multicharge_gram(const ChargeSet& charges, const StateProfile& phi, double t0);

/// (purity, eta2) of the multicharge Gram.
std::pair<double, double> multicharge_purity(const ChargeSet& charges,
                                             const StateProfile& phi, double t0);

}  // namespace ergent
