// gaussian.cpp — symplectic linear algebra on covariance matrices

#include "omech/gaussian.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace omech::gauss {

namespace {

void check_square(const Eigen::MatrixXd& m, int n_modes) {
    if (n_modes < 1) {
        throw PhysicsError("covariance matrix needs at least one mode");
    }
    if (m.rows() != 2 * n_modes || m.cols() != 2 * n_modes) {
        std::ostringstream os;
        os << "covariance matrix must be " << 2 * n_modes << "x" << 2 * n_modes
           << ", got " << m.rows() << "x" << m.cols();
        throw PhysicsError(os.str());
    }
}

} // namespace

CovarianceMatrix::CovarianceMatrix(int n_modes, const Eigen::MatrixXd& entries)
    : n_(n_modes), m_(entries) {
    check_square(m_, n_);
    const double scale = std::max(m_.cwiseAbs().maxCoeff(), 1.0);
    const double asym = (m_ - m_.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * scale) {
        std::ostringstream os;
        os << "covariance matrix not symmetric (relative asymmetry " << asym / scale << ")";
        throw PhysicsError(os.str());
    }
    m_ = ((m_ + m_.transpose()) / 2.0).eval();
}

CovarianceMatrix CovarianceMatrix::vacuum(int n_modes) {
    if (n_modes < 1) throw PhysicsError("vacuum: n_modes must be >= 1");
    return CovarianceMatrix(n_modes, 0.5 * Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

CovarianceMatrix CovarianceMatrix::thermal(const std::vector<double>& nu) {
    const int n = static_cast<int>(nu.size());
    if (n < 1) throw PhysicsError("thermal: need at least one mode");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        if (nu[j] < 0.5) throw PhysicsError("thermal: symplectic eigenvalue below vacuum");
        m(2 * j, 2 * j) = nu[j];
        m(2 * j + 1, 2 * j + 1) = nu[j];
    }
    return CovarianceMatrix(n, m);
}

CovarianceMatrix CovarianceMatrix::tensor(const CovarianceMatrix& a, const CovarianceMatrix& b) {
    const int n = a.n_modes() + b.n_modes();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    m.topLeftCorner(2 * a.n_modes(), 2 * a.n_modes()) = a.entries();
    m.bottomRightCorner(2 * b.n_modes(), 2 * b.n_modes()) = b.entries();
    return CovarianceMatrix(n, m);
}

void ModePartition::validate(int n_modes) const {
    if (transposed_modes.empty()) {
        throw PhysicsError("mode partition must be nonempty");
    }
    if (static_cast<int>(transposed_modes.size()) >= n_modes) {
        throw PhysicsError("mode partition must be a proper subset of the modes");
    }
    for (int idx : transposed_modes) {
        if (idx < 0 || idx >= n_modes) {
            throw PhysicsError("mode partition index out of range");
        }
    }
}

Eigen::MatrixXd symplectic_form(int n_modes) {
    if (n_modes < 1) throw PhysicsError("symplectic_form: n_modes must be >= 1");
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (int j = 0; j < n_modes; ++j) {
        omega(2 * j, 2 * j + 1) = 1.0;
        omega(2 * j + 1, 2 * j) = -1.0;
    }
    return omega;
}

std::vector<double> symplectic_spectrum(const CovarianceMatrix& cov) {
    const Eigen::MatrixXd& sigma = cov.entries();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sa(sigma);
    if (sa.eigenvalues().minCoeff() <= 0.0) {
        throw PhysicsError("matrix not a valid covariance candidate");
    }

    const Eigen::MatrixXd prod = symplectic_form(cov.n_modes()) * sigma;
    Eigen::EigenSolver<Eigen::MatrixXd> es(prod, /*computeEigenvectors=*/false);
    std::vector<double> moduli(prod.rows());
    for (int i = 0; i < prod.rows(); ++i) {
        moduli[i] = std::abs(es.eigenvalues()[i]);
    }
    // Eigenvalues of i*Omega*sigma come in pairs +-nu; pair conjugate moduli
    // and average them, largest first.
    std::sort(moduli.begin(), moduli.end(), std::greater<double>());
    std::vector<double> spectrum(cov.n_modes());
    for (int k = 0; k < cov.n_modes(); ++k) {
        spectrum[k] = 0.5 * (moduli[2 * k] + moduli[2 * k + 1]);
    }
    return spectrum;
}

bool is_physical(const CovarianceMatrix& cov, double tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sa(cov.entries());
    if (sa.eigenvalues().minCoeff() <= 0.0) return false;
    const std::vector<double> nu = symplectic_spectrum(cov);
    return nu.back() >= 0.5 - tol;
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& cov, const ModePartition& part) {
    part.validate(cov.n_modes());
    Eigen::VectorXd p = Eigen::VectorXd::Ones(2 * cov.n_modes());
    for (int idx : part.transposed_modes) {
        p(2 * idx + 1) = -1.0;
    }
    const Eigen::MatrixXd flipped = p.asDiagonal() * cov.entries() * p.asDiagonal();
    return CovarianceMatrix(cov.n_modes(), flipped);
}

double min_pt_symplectic(const CovarianceMatrix& cov, const ModePartition& part) {
    return symplectic_spectrum(partial_transpose(cov, part)).back();
}

double log_negativity(const CovarianceMatrix& cov, const ModePartition& part, double tol) {
    if (!is_physical(cov, tol)) {
        throw PhysicsError("log_negativity: input covariance matrix is unphysical");
    }
    const double nu_min = min_pt_symplectic(cov, part);
    return std::max(0.0, -std::log(2.0 * nu_min));
}

double purity(const CovarianceMatrix& cov) {
    Eigen::LLT<Eigen::MatrixXd> llt(cov.entries());
    if (llt.info() != Eigen::Success) {
        throw PhysicsError("purity: covariance matrix not positive definite");
    }
    // det sigma = prod(L_ii)^2, so sqrt(det) = prod(L_ii).
    const double sqrt_det = Eigen::MatrixXd(llt.matrixL()).diagonal().prod();
    return 1.0 / (std::pow(2.0, cov.n_modes()) * sqrt_det);
}

CovarianceMatrix reduce(const CovarianceMatrix& cov, const std::set<int>& keep) {
    if (keep.empty()) throw PhysicsError("reduce: keep-set must be nonempty");
    for (int idx : keep) {
        if (idx < 0 || idx >= cov.n_modes()) {
            throw PhysicsError("reduce: mode index out of range");
        }
    }
    const int n = static_cast<int>(keep.size());
    Eigen::VectorXi rows(2 * n);
    int k = 0;
    for (int idx : keep) {
        rows(2 * k) = 2 * idx;
        rows(2 * k + 1) = 2 * idx + 1;
        ++k;
    }
    Eigen::MatrixXd sub(2 * n, 2 * n);
    for (int r = 0; r < 2 * n; ++r) {
        for (int c = 0; c < 2 * n; ++c) {
            sub(r, c) = cov.entries()(rows(r), rows(c));
        }
    }
    return CovarianceMatrix(n, sub);
}

} // namespace omech::gauss
