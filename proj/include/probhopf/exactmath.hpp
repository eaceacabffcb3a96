// Numeric kernels shared by every module: Perron (largest nonnegative)
// eigenvalue of a nonnegative matrix, and a simultaneous eigenbasis for a
// family of commuting matrices.  Dense complex matrices are Eigen types;
// everything here is deterministic given (tol, seed).
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "probhopf/rational.hpp"

namespace probhopf {

using CMatrix = Eigen::MatrixXcd;   // rows() x cols(), complex entries
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;

struct PerronResult {
    double value = 0.0;          // spectral radius (Perron root)
    Eigen::VectorXd vector;      // nonnegative eigenvector, unit 2-norm
    int iterations = 0;
    double residual = 0.0;       // ||Mv - value*v||_inf at termination
};

// Power iteration with Rayleigh-quotient estimates.  Iterates on M + I so the
// Perron root is strictly dominant in modulus even for periodic (bipartite)
// nonnegative matrices, whose raw iteration oscillates forever; the +1 shift
// changes neither eigenvectors nor the ordering of real parts.  Starts from
// the all-ones vector (positive overlap with the Perron vector is guaranteed),
// stops when ||Mv - rho v||_inf <= tol * max(1, rho).
PerronResult perron_root(const RMatrix& M, double tol = 1e-9, int max_iter = 100000);

struct CommonEigenbasis {
    CMatrix vectors;      // n x n, column j = joint eigenvector v_j (unit norm)
    CMatrix eigenvalues;  // m x n, (i,j) = eigenvalue of matrix i on v_j
    unsigned seed_used = 0;
    double residual = 0.0;  // worst ||M_i v_j - lambda_ij v_j||_2 over all i,j
};

// Simultaneous diagonalization of pairwise-commuting matrices: eigensolve a
// single random linear combination sum_i r_i M_i with integer coefficients
// drawn from a generator seeded with `seed`, then read each matrix's
// eigenvalue off every vector and verify the residuals.  If a draw fails to
// separate the joint eigenspaces the seed is bumped by one and the draw
// retried, up to 8 attempts.  Throws std::domain_error if the inputs do not
// commute (within tol, scaled by the operand norms) or no attempt succeeds.
CommonEigenbasis common_eigenbasis(const std::vector<CMatrix>& mats, double tol = 1e-9,
                                   unsigned seed = 0);

// Convenience: max-norm of a complex matrix.
inline double max_norm(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace probhopf
