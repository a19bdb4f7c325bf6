// gaussian.hpp — covariance matrices, symplectic spectra and entanglement
// measures for N-mode Gaussian states.
//
// Conventions: quadratures are dimensionless and ordered (q1,p1,...,qN,pN);
// the vacuum covariance matrix is I/2, so a state is physical iff every
// symplectic eigenvalue is >= 1/2.

#pragma once

#include <Eigen/Dense>

#include <set>
#include <vector>

#include "omech/errors.hpp"

namespace omech::gauss {

constexpr double kDefaultPhysicalTol = 1e-9;

/// Real symmetric 2N x 2N matrix of symmetrized quadrature second moments.
class CovarianceMatrix {
  public:
    CovarianceMatrix(int n_modes, const Eigen::MatrixXd& entries);

    int n_modes() const { return n_; }
    const Eigen::MatrixXd& entries() const { return m_; }
    double operator()(int r, int c) const { return m_(r, c); }

    static CovarianceMatrix vacuum(int n_modes);
    /// Product of single-mode thermal states, diag(nu_j, nu_j) per mode.
    static CovarianceMatrix thermal(const std::vector<double>& nu);
    /// Tensor product (direct sum of covariance matrices).
    static CovarianceMatrix tensor(const CovarianceMatrix& a, const CovarianceMatrix& b);

  private:
    int n_;
    Eigen::MatrixXd m_;
};

/// Set of mode indices (0-based) whose momenta are sign-flipped under
/// partial transposition. Must be a nonempty proper subset of {0..N-1}.
struct ModePartition {
    std::set<int> transposed_modes;

    void validate(int n_modes) const;
};

/// Omega_N: block-diagonal antisymmetric form with 2x2 blocks [[0,1],[-1,0]].
Eigen::MatrixXd symplectic_form(int n_modes);

/// Moduli of the eigenvalues of i*Omega*sigma, paired into N values,
/// sorted descending. Throws PhysicsError if sigma is not positive definite.
std::vector<double> symplectic_spectrum(const CovarianceMatrix& cov);

/// True iff the minimum symplectic eigenvalue is >= 1/2 - tol.
bool is_physical(const CovarianceMatrix& cov, double tol = kDefaultPhysicalTol);

/// P sigma P with P flipping the momenta of the given modes. Involution.
CovarianceMatrix partial_transpose(const CovarianceMatrix& cov, const ModePartition& part);

/// Minimum symplectic eigenvalue of the partially transposed matrix.
double min_pt_symplectic(const CovarianceMatrix& cov, const ModePartition& part);

/// Logarithmic negativity max(0, -ln(2 nu_min)) across the given partition.
/// Throws PhysicsError if the input state is unphysical.
double log_negativity(const CovarianceMatrix& cov, const ModePartition& part,
                      double tol = kDefaultPhysicalTol);

/// 1 / (2^N sqrt(det sigma)); equals 1 exactly for pure states.
double purity(const CovarianceMatrix& cov);

/// Principal submatrix on the kept modes (partial trace for Gaussian states).
CovarianceMatrix reduce(const CovarianceMatrix& cov, const std::set<int>& keep);

} // namespace omech::gauss
