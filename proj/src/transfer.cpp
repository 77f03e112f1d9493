#include "ergent/transfer.hpp"

#include <algorithm>
#include <cmath>

#include "ergent/errors.hpp"

namespace ergent {

namespace {

// Kronecker product, kept explicit: the EPR identities are verified by
// direct construction, not by index gymnastics.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
    Eigen::MatrixXcd out(A.rows() * B.rows(), A.cols() * B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return out;
}

Eigen::VectorXcd epr_vector(int d) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d * d);
    const double amp = 1.0 / std::sqrt(double(d));
    for (int k = 0; k < d; ++k) v(k * d + k) = amp;
    return v;
}

}  // namespace

TransferDiagnostics transfer_diagnostics(const GramMatrix& g) {
    g.validate();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g.entries, Eigen::EigenvaluesOnly);
    TransferDiagnostics diag;
    diag.gram_eigenvalues.reserve(g.d_A);
    double mean = 0.0;
    double var = 0.0;
    for (int k = 0; k < g.d_A; ++k) {
        double r = es.eigenvalues()(k);
        require(r >= -1e-10, errc::malformed_input, "Gram eigenvalue below -1e-10");
        mean += r;
        var += (r - 1.0) * (r - 1.0);
        diag.gram_eigenvalues.push_back(std::max(r, 0.0));
    }
    mean /= g.d_A;
    require(std::abs(mean - 1.0) <= 1e-10, errc::malformed_input,
            "Gram eigenvalues do not average to 1");
    std::sort(diag.gram_eigenvalues.begin(), diag.gram_eigenvalues.end());
    diag.r_min = diag.gram_eigenvalues.front();
    diag.r_max = diag.gram_eigenvalues.back();
    diag.worst_case_error = std::max(diag.r_max - 1.0, 1.0 - diag.r_min);
    diag.eta2 = var / g.d_A;
    diag.bd_product = (diag.r_max - 1.0) * (1.0 - diag.r_min);
    return diag;
}

double transfer_error(const GramMatrix& g, const Eigen::MatrixXcd& O,
                      const Eigen::MatrixXcd& P) {
    g.validate();
    require(O.rows() == g.d_A && O.cols() == g.d_A && P.rows() == g.d_A &&
                P.cols() == g.d_A,
            errc::pairing_mismatch, "operators must be d_A x d_A");
    double no2 = O.squaredNorm();
    double np2 = P.squaredNorm();
    require(no2 > 0.0 && np2 > 0.0, errc::invalid_parameter,
            "zero operator in transfer_error");
    Eigen::MatrixXcd gm1 = g.entries;
    gm1.diagonal().array() -= 1.0;
    std::complex<double> tr = (gm1 * (O.transpose() * P.conjugate())).trace();
    return std::abs(tr) / std::sqrt(no2 * np2);
}

double epr_transfer_residual(int d, const Eigen::MatrixXcd& O) {
    require(d >= 1, errc::invalid_dimension, "d must be >= 1");
    require(O.rows() == d && O.cols() == d, errc::pairing_mismatch, "O must be d x d");
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    Eigen::VectorXcd epr = epr_vector(d);
    Eigen::VectorXcd lhs = kron(O, id) * epr;
    Eigen::VectorXcd rhs = kron(id, O.transpose()) * epr;
    return (lhs - rhs).norm();
}

double epr_transfer_residual(int d, const Eigen::MatrixXcd& O, const Eigen::MatrixXcd& R) {
    require(d >= 1, errc::invalid_dimension, "d must be >= 1");
    require(O.rows() == d && O.cols() == d && R.rows() == d && R.cols() == d,
            errc::pairing_mismatch, "operators must be d x d");
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    Eigen::MatrixXcd r_b = kron(id, R);
    Eigen::VectorXcd epr = epr_vector(d);
    Eigen::VectorXcd lhs = kron(O, id) * (r_b * epr);
    Eigen::VectorXcd rhs = r_b * (kron(id, O.transpose()) * epr);
    return (lhs - rhs).norm();
}

const char* capacity_case_name(CapacityCase::Tag t) {
    switch (t) {
        case CapacityCase::Tag::ergodic_smooth: return "ergodic_smooth";
        case CapacityCase::Tag::generic_or_infinite_t: return "generic_or_infiniteT";
        case CapacityCase::Tag::poisson_generic: return "poisson_generic";
    }
    return "ergodic_smooth";
}

CapacityCase::Tag capacity_case_from_name(const std::string& name) {
    if (name == "ergodic_smooth") return CapacityCase::Tag::ergodic_smooth;
    if (name == "generic_or_infiniteT") return CapacityCase::Tag::generic_or_infinite_t;
    if (name == "poisson_generic") return CapacityCase::Tag::poisson_generic;
    fail(errc::invalid_parameter, "unknown capacity case: " + name);
}

CapacityCase CapacityCase::make(Tag tag, double epsilon, double gamma, double kappa) {
    CapacityCase c;
    c.tag = tag;
    c.epsilon = epsilon;
    c.gamma = gamma;
    c.kappa = kappa;
    c.varphi = (tag == Tag::poisson_generic) ? 2.0 : 1.0;
    c.validate();
    return c;
}

void CapacityCase::validate() const {
    require(epsilon > 0.0 && epsilon < 1.0, errc::configuration,
            "epsilon must lie in (0, 1)");
    require(gamma >= 1.0, errc::configuration, "gamma must be >= 1");
    require(kappa >= 0.0, errc::configuration, "kappa must be >= 0");
    require(varphi == 1.0 || varphi == 2.0, errc::configuration,
            "varphi must be 1 or 2");
}

double purity_threshold(int d_A, const CapacityCase& c) {
    c.validate();
    require(d_A >= 1, errc::invalid_dimension, "d_A must be >= 1");
    double log_factor = 1.0;
    if (c.kappa > 0.0) {
        require(d_A >= 2, errc::invalid_parameter,
                "ln(d_A) vanishes at d_A = 1; kappa > 0 is undefined there");
        log_factor = std::pow(std::log(double(d_A)), c.kappa);
    }
    return 1.0 / d_A + c.epsilon * c.epsilon / (std::pow(double(d_A), c.gamma) * log_factor);
}

double min_dB_bound(int d_A, const CapacityCase& c) {
    c.validate();
    require(d_A >= 2, errc::invalid_dimension, "capacity bounds require d_A >= 2");
    double ln = std::log(double(d_A));
    if (c.tag == CapacityCase::Tag::ergodic_smooth) {
        return std::pow(double(d_A), (1.0 + c.gamma) / 2.0) *
               std::pow(ln, c.kappa / 2.0) / c.epsilon;
    }
    // dividing by epsilon twice keeps exact-decimal cases exact
    return c.varphi * std::pow(double(d_A), c.gamma) * std::pow(ln, c.kappa) / c.epsilon /
           c.epsilon;
}

BhatiaDavisCheck bhatia_davis_check(const TransferDiagnostics& diag) {
    BhatiaDavisCheck out;
    out.slack = diag.bd_product - diag.eta2;
    out.holds = diag.eta2 <= diag.bd_product + 1e-10;
    return out;
}

}  // namespace ergent
