#pragma once

#include "clifford.hpp"
#include "linalg.hpp"

#include <cstdint>
#include <vector>

namespace fkm {

struct FieldBundle {
    double F = 0.0;
    Vec grad;
    double lap = 0.0;
    double f = 0.0;  // F(x / |x|)
};

struct CartanMunznerReport {
    int samples = 0;
    double tol = 0.0;
    double gradient_residual = 0.0;   // max | |grad F|^2 - 16 |x|^6 |
    double laplacian_residual = 0.0;  // max | lap F - 8 (m2 - m1) |x|^2 |
    bool pass = false;
};

struct SphericalGradientReport {
    int samples = 0;
    double tol = 0.0;
    double residual = 0.0;  // max | |grad F - 4 f x|^2 - 16 (1 - f^2) |
    bool pass = false;
};

/// The degree-4 polynomial F(x) = |x|^4 - 2 sum <P_a x, x>^2 built from a
/// list of generators. Generators need not satisfy the Clifford relations,
/// which lets the checks below detect broken systems.
class FkmField {
public:
    explicit FkmField(const CliffordSystem& sys);
    explicit FkmField(std::vector<Mat> generators);

    int dim() const { return dim_; }
    int m1() const { return static_cast<int>(sym_.size()) - 1; }
    int m2() const { return dim_ / 2 - m1() - 1; }

    double value(const Vec& x) const;
    Vec gradient(const Vec& x) const;
    double laplacian(const Vec& x) const;
    FieldBundle evaluate(const Vec& x) const;

    /// <P_a x, x> for every generator.
    Vec moments(const Vec& x) const;

    const std::vector<Mat>& generators() const { return sym_; }

private:
    void check_dim(const Vec& x) const;

    std::vector<Mat> sym_;  // symmetric parts of the generators
    std::vector<double> traces_;
    int dim_ = 0;
};

double evaluate_F(const CliffordSystem& sys, const Vec& x);
Vec gradient_F(const CliffordSystem& sys, const Vec& x);
double laplacian_F(const CliffordSystem& sys, const Vec& x);

/// Checks both Cartan-Munzner identities on `n_samples` points with radii in [0.25, 2].
CartanMunznerReport verify_cartan_munzner(const FkmField& field, int n_samples, std::uint64_t seed, double tol);

/// Checks |grad F - 4 f x|^2 = 16 (1 - f^2) on unit-sphere samples.
SphericalGradientReport spherical_gradient_check(const FkmField& field, int n_samples, std::uint64_t seed, double tol);

/// Tangential gradient |grad F - 4 f x| at a unit vector.
double tangential_gradient_norm(const FkmField& field, const Vec& x);

}  // namespace fkm
