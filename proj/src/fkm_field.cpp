#include "fkm/fkm_field.hpp"

#include "fkm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace fkm {

FkmField::FkmField(const CliffordSystem& sys) : FkmField(sys.real()) {}

FkmField::FkmField(std::vector<Mat> generators) {
    if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "FKM field needs at least one generator");
    dim_ = static_cast<int>(generators.front().rows());
    if (dim_ % 2 != 0) throw Error(ErrorKind::DimensionMismatch, "ambient dimension must be even");
    for (auto& p : generators) {
        if (p.rows() != dim_ || p.cols() != dim_) throw Error(ErrorKind::DimensionMismatch, "generators differ in size");
        Mat s = 0.5 * (p + p.transpose());
        traces_.push_back(s.trace());
        sym_.push_back(std::move(s));
    }
}

void FkmField::check_dim(const Vec& x) const {
    if (x.size() != dim_)
        throw Error(ErrorKind::DimensionMismatch,
                    "point has dimension " + std::to_string(x.size()) + ", expected " + std::to_string(dim_));
}

Vec FkmField::moments(const Vec& x) const {
    check_dim(x);
    Vec u(static_cast<Eigen::Index>(sym_.size()));
    for (std::size_t a = 0; a < sym_.size(); ++a) u(static_cast<Eigen::Index>(a)) = x.dot(sym_[a] * x);
    return u;
}

double FkmField::value(const Vec& x) const {
    const Vec u = moments(x);
    const double r2 = x.squaredNorm();
    return r2 * r2 - 2.0 * u.squaredNorm();
}

Vec FkmField::gradient(const Vec& x) const {
    check_dim(x);
    Vec g = 4.0 * x.squaredNorm() * x;
    for (const Mat& p : sym_) {
        const Vec px = p * x;
        g -= 8.0 * x.dot(px) * px;
    }
    return g;
}

double FkmField::laplacian(const Vec& x) const {
    check_dim(x);
    // lap |x|^4 = 4 (n + 2) |x|^2; lap <Px,x>^2 = 8 |Px|^2 + 4 <Px,x> tr P
    double lap = 4.0 * (dim_ + 2) * x.squaredNorm();
    for (std::size_t a = 0; a < sym_.size(); ++a) {
        const Vec px = sym_[a] * x;
        lap -= 2.0 * (8.0 * px.squaredNorm() + 4.0 * x.dot(px) * traces_[a]);
    }
    return lap;
}

FieldBundle FkmField::evaluate(const Vec& x) const {
    FieldBundle b;
    b.F = value(x);
    b.grad = gradient(x);
    b.lap = laplacian(x);
    const double r = x.norm();
    b.f = r > 0.0 ? b.F / (r * r * r * r) : 0.0;
    return b;
}

double evaluate_F(const CliffordSystem& sys, const Vec& x) { return FkmField(sys).value(x); }
Vec gradient_F(const CliffordSystem& sys, const Vec& x) { return FkmField(sys).gradient(x); }
double laplacian_F(const CliffordSystem& sys, const Vec& x) { return FkmField(sys).laplacian(x); }

CartanMunznerReport verify_cartan_munzner(const FkmField& field, int n_samples, std::uint64_t seed, double tol) {
    if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
    CartanMunznerReport report;
    report.samples = n_samples;
    report.tol = tol;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.25, 2.0);
    const double lap_coeff = 8.0 * (field.m2() - field.m1());
    for (int i = 0; i < n_samples; ++i) {
        const Vec x = radius(rng) * random_unit_vector(field.dim(), rng);
        const double r2 = x.squaredNorm();
        const double g = field.gradient(x).squaredNorm() - 16.0 * r2 * r2 * r2;
        const double l = field.laplacian(x) - lap_coeff * r2;
        report.gradient_residual = std::max(report.gradient_residual, std::abs(g));
        report.laplacian_residual = std::max(report.laplacian_residual, std::abs(l));
    }
    report.pass = report.gradient_residual <= tol && report.laplacian_residual <= tol;
    return report;
}

double tangential_gradient_norm(const FkmField& field, const Vec& x) {
    const double f = field.value(x);
    return (field.gradient(x) - 4.0 * f * x).norm();
}

SphericalGradientReport spherical_gradient_check(const FkmField& field, int n_samples, std::uint64_t seed, double tol) {
    if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
    SphericalGradientReport report;
    report.samples = n_samples;
    report.tol = tol;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n_samples; ++i) {
        const Vec x = random_unit_vector(field.dim(), rng);
        const double f = field.value(x);
        const double t = tangential_gradient_norm(field, x);
        report.residual = std::max(report.residual, std::abs(t * t - 16.0 * (1.0 - f * f)));
    }
    report.pass = report.residual <= tol;
    return report;
}

}  // namespace fkm
