#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ergent/dynamics.hpp"

namespace ergent {

/// Spectrum of the Krylov Gram matrix and the derived operator-transfer
/// error measures. The eigenvalues r_k average to 1 (unit Gram diagonal);
/// max |r_k - 1| is the worst-case relative error of inner products of
/// transferred operators.
struct TransferDiagnostics {
    std::vector<double> gram_eigenvalues;  // sorted ascending, clipped at 0
    double r_max = 0.0;
    double r_min = 0.0;
    double worst_case_error = 0.0;  // max_k |r_k - 1|
    double eta2 = 0.0;              // mean squared deviation of r_k from 1
    double bd_product = 0.0;        // (r_max - 1)(1 - r_min)
};

TransferDiagnostics transfer_diagnostics(const GramMatrix& g);

/// Relative inner-product error of transferring O and P through the
/// entangled state with Gram matrix G:
///   |Tr[(G - I) O^T conj(P)]| / sqrt(Tr[O O^dag] Tr[P P^dag]).
double transfer_error(const GramMatrix& g, const Eigen::MatrixXcd& O,
                      const Eigen::MatrixXcd& P);

/// || (O x I)|EPR> - (I x O^T)|EPR> || on a d x d product space, built
/// from the explicit EPR vector; zero in exact arithmetic.
double epr_transfer_residual(int d, const Eigen::MatrixXcd& O);

/// Pre-loaded variant: || (O x I)(I x R)|EPR> - (I x R)(I x O^T)|EPR> ||,
/// with R acting on the second factor only.
double epr_transfer_residual(int d, const Eigen::MatrixXcd& O, const Eigen::MatrixXcd& R);

/// Parameter set for the operator-transfer capacity bounds: which spectral
/// case applies and the (gamma, kappa, epsilon, varphi) exponents.
struct CapacityCase {
    enum class Tag { ergodic_smooth, generic_or_infinite_t, poisson_generic };

    Tag tag = Tag::ergodic_smooth;
    double gamma = 1.0;
    double kappa = 0.0;
    double epsilon = 0.1;
    double varphi = 1.0;  // 1 for random-matrix/ideal scrambler, 2 for Poisson

    static CapacityCase make(Tag tag, double epsilon, double gamma = 1.0,
                             double kappa = 0.0);
    void validate() const;
};

const char* capacity_case_name(CapacityCase::Tag t);
CapacityCase::Tag capacity_case_from_name(const std::string& name);

/// Purity ceiling for operator transfer at relative error epsilon:
/// 1/d_A + epsilon^2 / (d_A^gamma (ln d_A)^kappa).
double purity_threshold(int d_A, const CapacityCase& c);

/// Smallest complex-system dimension able to carry the transfer:
///   ergodic & smooth: d_A^((1+gamma)/2) (ln d_A)^(kappa/2) / epsilon
///   otherwise:        varphi d_A^gamma (ln d_A)^kappa / epsilon^2.
double min_dB_bound(int d_A, const CapacityCase& c);

struct BhatiaDavisCheck {
    bool holds = false;
    double slack = 0.0;  // bd_product - eta2
};

/// eta2 <= (r_max - 1)(1 - r_min): variance of a [r_min, r_max] sample
/// with mean 1 is capped by the Bhatia-Davis product.
BhatiaDavisCheck bhatia_davis_check(const TransferDiagnostics& diag);

}  // namespace ergent
