#pragma once

#include <Eigen/Dense>

#include "nct/skewmat.hpp"

namespace nct {

// Float-backend bridge helpers.
Eigen::MatrixXd to_eigen(const SkewMatrix& A);
Eigen::MatrixXd to_eigen(const DenseMatrix& A);
// Skew-symmetrizes the input (upper triangle wins) and attaches the split.
SkewMatrix skew_from_eigen(const Eigen::MatrixXd& M,
                           std::optional<std::pair<int, int>> split = std::nullopt);

// J0 in the block-diagonal convention (p blocks of [[0,1],[-1,0]]) and the
// stacked convention [[0, I_p], [-I_p, 0]].
Eigen::MatrixXd j0_blockdiag_mat(int p);
Eigen::MatrixXd j0_stacked_mat(int p);

// Perfect-shuffle conversion: given T with T^t J0_blockdiag T = Theta,
// returns T' with T'^t J0_stacked T' = Theta. det changes by the shuffle
// sign (-1)^(p(p-1)/2).
Eigen::MatrixXd stacked_from_blockdiag_factor(const Eigen::MatrixXd& T);

struct FactorizeResult {
    Eigen::MatrixXd T; // T^t J0_blockdiag T = Theta; det T = pf(Theta) > 0
    double residual;   // max-norm of T^t J0 T - Theta
};

// Constructive congruence factorization of a positive-pfaffian skew matrix by
// skew-symmetric elimination with deterministic max-magnitude pivoting.
// Throws precondition_error for pf <= 0 or a near-singular input.
FactorizeResult skew_factorize(const Eigen::MatrixXd& theta11);
FactorizeResult skew_factorize(const SkewMatrix& theta11);

// Path r -> gamma(r) of skew matrices from psi to theta: the leading block
// stays in the positive-pfaffian cone by construction (it is T(r)^t J0 T(r)
// for an invertible interpolation T(r) of the endpoint factors), the other
// blocks move along straight lines.
class FieldPath {
  public:
    struct Fiber {
        SkewMatrix gamma;      // n x n, float backend, split (p, q)
        Eigen::MatrixXd T11;   // factor, block-diagonal J0 convention
        SkewMatrix gamma_dual; // dual parameter of gamma
        double factor_residual;
    };

    int n() const { return n_; }
    int p() const { return p_; }
    int q() const { return q_; }
    const SkewMatrix& psi() const { return psi_; }
    const SkewMatrix& theta() const { return theta_; }
    const Eigen::MatrixXd& factor_psi() const { return T_psi_; }
    const Eigen::MatrixXd& factor_theta() const { return T_theta_; }

    // Evaluate the fiber at r in [0,1].
    Fiber fiber(double r) const;
    // gamma(r) without the dual parameter (cheaper; used for dense sampling).
    Eigen::MatrixXd gamma_at(double r) const;
    Eigen::MatrixXd factor_at(double r) const;

  private:
    friend FieldPath build_path(const SkewMatrix&, const SkewMatrix&, int, int);
    int n_ = 0, p_ = 0, q_ = 0;
    SkewMatrix psi_ = SkewMatrix::zero(0, Backend::real);
    SkewMatrix theta_ = SkewMatrix::zero(0, Backend::real);
    Eigen::MatrixXd T_psi_, T_theta_;
    // interpolation data: T(r) = Q(r) P(r) T_psi with Q(r) a scaled-angle
    // Givens product and P(r) the SPD geodesic
    struct GivensStep {
        int i, j;
        double angle;
    };
    std::vector<GivensStep> rotations_;
    Eigen::MatrixXd spd_basis_;
    Eigen::VectorXd spd_log_eigs_;
    // endpoint residual carries, blended affinely so gamma(0), gamma(1)
    // reproduce the inputs to roundoff
    Eigen::MatrixXd carry0_, carry1_;
};

// Requires pf(psi11) > 0 and pf(theta11) > 0 (block-diagonal J0 convention),
// matching dimensions, n = 2p + q. Inputs are float-backend skew matrices.
FieldPath build_path(const SkewMatrix& psi, const SkewMatrix& theta, int p, int q);

} // namespace nct
