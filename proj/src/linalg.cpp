#include "fkm/linalg.hpp"

#include "fkm/errors.hpp"

#include <algorithm>
#include <cmath>

namespace fkm {

namespace {

// Two passes of modified Gram-Schmidt; returns the residual norm before normalization.
double orthogonalize_against(Vec& v, const std::vector<Vec>& basis) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const Vec& b : basis) v -= b.dot(v) * b;
    }
    return v.norm();
}

}  // namespace

void extend_orthonormal(std::vector<Vec>& basis, std::span<const Vec> candidates, double rank_tol, int target) {
    for (const Vec& c : candidates) {
        if (target >= 0 && static_cast<int>(basis.size()) >= target) return;
        Vec v = c;
        const double scale = std::max(1.0, c.norm());
        const double r = orthogonalize_against(v, basis);
        if (r > rank_tol * scale) basis.push_back(v / r);
    }
}

std::vector<Vec> orthonormal_complement(std::span<const Vec> basis, int dim, double rank_tol) {
    std::vector<Vec> all(basis.begin(), basis.end());
    const std::size_t start = all.size();
    for (int i = 0; i < dim && static_cast<int>(all.size()) < dim; ++i) {
        Vec e = Vec::Zero(dim);
        e(i) = 1.0;
        extend_orthonormal(all, std::span<const Vec>(&e, 1), rank_tol, dim);
    }
    return {all.begin() + static_cast<std::ptrdiff_t>(start), all.end()};
}

std::vector<Vec> orthonormalize(std::span<const Vec> vectors, double rank_tol) {
    std::vector<Vec> out;
    extend_orthonormal(out, vectors, rank_tol);
    if (out.size() != vectors.size()) throw Error(ErrorKind::InvalidArgument, "vectors are linearly dependent");
    return out;
}

Mat stack_columns(std::span<const Vec> vectors) {
    if (vectors.empty()) return Mat();
    Mat m(vectors.front().size(), static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vectors[j];
    return m;
}

double gram_deviation(std::span<const Vec> vectors) {
    if (vectors.empty()) return 0.0;
    const Mat v = stack_columns(vectors);
    const Mat g = v.transpose() * v;
    return (g - Mat::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

Vec symmetric_eigenvalues(const Mat& a) {
    if (a.rows() == 0) return Vec();
    Eigen::SelfAdjointEigenSolver<Mat> solver(a, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

std::vector<EigenCluster> cluster_eigenvalues(const Vec& sorted, double gap) {
    std::vector<EigenCluster> clusters;
    double sum = 0.0;
    for (Eigen::Index i = 0; i < sorted.size(); ++i) {
        if (clusters.empty() || sorted(i) - sorted(i - 1) > gap) {
            if (!clusters.empty()) clusters.back().value = sum / clusters.back().multiplicity;
            clusters.push_back({sorted(i), 0});
            sum = 0.0;
        }
        clusters.back().multiplicity += 1;
        sum += sorted(i);
    }
    if (!clusters.empty()) clusters.back().value = sum / clusters.back().multiplicity;
    return clusters;
}

Vec gaussian_vector(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = normal(rng);
    return v;
}

Vec random_unit_vector(int dim, std::mt19937_64& rng) {
    for (;;) {
        Vec v = gaussian_vector(dim, rng);
        const double n = v.norm();
        if (n > 1e-12) return v / n;
    }
}

Mat to_real(const IntMat& m) { return m.cast<double>(); }

std::uint64_t derive_seed(std::uint64_t base, std::string_view label, std::uint64_t index) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](unsigned char c) {
        h ^= c;
        h *= 1099511628211ULL;
    };
    for (char c : label) mix(static_cast<unsigned char>(c));
    for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>((index >> (8 * i)) & 0xffU));
    return base ^ h;
}

}  // namespace fkm
