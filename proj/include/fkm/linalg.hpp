#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace fkm {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using IntMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

struct EigenCluster {
    double value = 0.0;
    int multiplicity = 0;
};

/// Appends to `basis` every candidate that survives modified Gram-Schmidt
/// (two passes) against the current basis with residual norm above `rank_tol`.
/// Stops once `basis` holds `target` vectors (target < 0: no limit).
void extend_orthonormal(std::vector<Vec>& basis, std::span<const Vec> candidates,
                        double rank_tol = 1e-8, int target = -1);

/// Orthonormal complement of span(`basis`) in R^dim, built from the standard basis.
std::vector<Vec> orthonormal_complement(std::span<const Vec> basis, int dim, double rank_tol = 1e-8);

/// Orthonormalizes `vectors` in order; throws if they are rank deficient.
std::vector<Vec> orthonormalize(std::span<const Vec> vectors, double rank_tol = 1e-8);

/// Columns are the given vectors.
Mat stack_columns(std::span<const Vec> vectors);

/// Max |G - I| over the Gram matrix of the given vectors.
double gram_deviation(std::span<const Vec> vectors);

/// Sorted eigenvalues of a symmetric matrix (ascending).
Vec symmetric_eigenvalues(const Mat& a);

/// Groups sorted eigenvalues whose consecutive gap is at most `gap`.
std::vector<EigenCluster> cluster_eigenvalues(const Vec& sorted, double gap = 1e-6);

/// Standard Gaussian vector.
Vec gaussian_vector(int dim, std::mt19937_64& rng);

/// Gaussian vector normalized to unit length.
Vec random_unit_vector(int dim, std::mt19937_64& rng);

Mat to_real(const IntMat& m);

/// Subtask seed: base xor FNV-1a(label, index).
std::uint64_t derive_seed(std::uint64_t base, std::string_view label, std::uint64_t index);

}  // namespace fkm
