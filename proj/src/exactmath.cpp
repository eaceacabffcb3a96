#include "probhopf/exactmath.hpp"

#include <Eigen/Eigenvalues>

#include <random>
#include <sstream>
#include <stdexcept>

namespace probhopf {

PerronResult perron_root(const RMatrix& M, double tol, int max_iter) {
    const auto n = M.rows();
    if (n == 0 || M.cols() != n)
        throw std::domain_error("perron_root: matrix must be square and nonempty");
    if (!M.allFinite())
        throw std::domain_error("perron_root: matrix has non-finite entries");
    if (M.minCoeff() < -1e-12)
        throw std::domain_error("perron_root: matrix has negative entries");

    Eigen::VectorXd v = Eigen::VectorXd::Ones(n) / std::sqrt(static_cast<double>(n));
    double rho = 0.0, resid = 0.0;
    for (int it = 1; it <= max_iter; ++it) {
        Eigen::VectorXd w = M * v + v;  // (M + I) v, strictly positive
        v = w / w.norm();
        Eigen::VectorXd Mv = M * v;
        rho = v.dot(Mv);                // Rayleigh quotient on the original M
        resid = (Mv - rho * v).cwiseAbs().maxCoeff();
        if (resid <= tol * std::max(1.0, std::abs(rho)))
            return {rho, v, it, resid};
    }
    std::ostringstream os;
    os << "perron_root: no convergence after " << max_iter
       << " iterations (last residual " << resid << ")";
    throw std::domain_error(os.str());
}

CommonEigenbasis common_eigenbasis(const std::vector<CMatrix>& mats, double tol,
                                   unsigned seed) {
    if (mats.empty())
        throw std::domain_error("common_eigenbasis: no matrices given");
    const auto n = mats[0].rows();
    for (const auto& m : mats)
        if (m.rows() != n || m.cols() != n)
            throw std::domain_error("common_eigenbasis: matrices must be square, same size");

    // Commutativity is a precondition, not something the combination can fix.
    for (size_t i = 0; i < mats.size(); ++i)
        for (size_t j = i + 1; j < mats.size(); ++j) {
            double scale = std::max(1.0, max_norm(mats[i]) * max_norm(mats[j]));
            double c = max_norm(mats[i] * mats[j] - mats[j] * mats[i]);
            if (c > tol * scale) {
                std::ostringstream os;
                os << "common_eigenbasis: matrices " << i << " and " << j
                   << " do not commute (residual " << c << ")";
                throw std::domain_error(os.str());
            }
        }

    double opscale = 1.0;
    for (const auto& m : mats) opscale = std::max(opscale, max_norm(m));

    double best_resid = -1.0;
    for (unsigned attempt = 0; attempt < 8; ++attempt) {
        std::mt19937_64 rng(seed + attempt);
        // Small coefficients keep ||T|| (and with it the eigensolver's own
        // backward error) low; collisions between distinct joint eigenvalue
        // tuples are what the retry loop is for.
        std::uniform_int_distribution<long long> dist(1, 1000);
        CMatrix T = CMatrix::Zero(n, n);
        for (const auto& m : mats) T += static_cast<double>(dist(rng)) * m;

        Eigen::ComplexEigenSolver<CMatrix> solver(T, /*computeEigenvectors=*/true);
        if (solver.info() != Eigen::Success) continue;

        CommonEigenbasis out;
        out.vectors = solver.eigenvectors();  // unit columns
        out.eigenvalues = CMatrix(mats.size(), n);
        out.seed_used = seed + attempt;
        double worst = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            CVector v = out.vectors.col(j);
            double vn = v.norm();
            for (size_t i = 0; i < mats.size(); ++i) {
                CVector Mv = mats[i] * v;
                std::complex<double> lam = v.dot(Mv) / (vn * vn);  // v^H M v
                out.eigenvalues(static_cast<Eigen::Index>(i), j) = lam;
                worst = std::max(worst, (Mv - lam * v).norm() / vn);
            }
        }
        out.residual = worst;
        if (worst <= tol * opscale) return out;
        best_resid = best_resid < 0 ? worst : std::min(best_resid, worst);
    }
    std::ostringstream os;
    os << "common_eigenbasis: no random combination separated the eigenspaces "
          "after 8 attempts (best residual "
       << best_resid << "); matrices may not be simultaneously diagonalizable";
    throw std::domain_error(os.str());
}

}  // namespace probhopf
