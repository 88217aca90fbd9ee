#include "fkm/errors.hpp"
#include "fkm/fkm_field.hpp"
#include "fkm/focal.hpp"

#include <doctest.h>

#include <random>

using namespace fkm;

namespace {

Vec fd_gradient(const FkmField& f, const Vec& x, double h) {
    Vec g(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        Vec a = x, b = x;
        a(i) += h;
        b(i) -= h;
        g(i) = (f.value(a) - f.value(b)) / (2 * h);
    }
    return g;
}

double fd_laplacian(const FkmField& f, const Vec& x, double h) {
    double s = 0;
    const double f0 = f.value(x);
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        Vec a = x, b = x;
        a(i) += h;
        b(i) -= h;
        s += (f.value(a) - 2 * f0 + f.value(b)) / (h * h);
    }
    return s;
}

}  // namespace

TEST_CASE("gradient and Laplacian against finite differences") {
    std::mt19937_64 rng(11);
    for (auto [m, k] : {std::pair{1, 3}, {3, 2}, {4, 2}, {5, 1}, {9, 1}}) {
        const FkmField f(build_system(m, k, std::vector<int>(k, 1)));
        for (int t = 0; t < 3; ++t) {
            const Vec x = gaussian_vector(f.dim(), rng) * 0.5;
            const Vec g = f.gradient(x);
            const Vec fd = fd_gradient(f, x, 1e-5);
            CHECK((g - fd).norm() <= 1e-6 * std::max(1.0, g.norm()));
            const double lap = f.laplacian(x);
            CHECK(std::abs(lap - fd_laplacian(f, x, 1e-3)) <= 1e-4 * std::max(1.0, std::abs(lap)));
        }
    }
}

TEST_CASE("Cartan-Munzner identities hold for the built families") {
    for (int m = 1; m <= 9; ++m) {
        for (int k = 1; k <= 2; ++k) {
            if (k * delta_of_m(m) - m - 1 < 1) continue;
            const FkmField f(build_system(m, k, std::vector<int>(k, 1)));
            const auto r = verify_cartan_munzner(f, 20, 5, 1e-8);
            CAPTURE(m);
            CHECK(r.pass);
            CHECK(r.gradient_residual <= 1e-8);
            CHECK(r.laplacian_residual <= 1e-8);
            CHECK(spherical_gradient_check(f, 20, 6, 1e-8).pass);
        }
    }
}

TEST_CASE("broken generators are detected") {
    std::vector<Mat> P = build_system(3, 2, {1, 1}).real();
    P[3] = (P[3] + P[2]) / std::sqrt(2.0);  // symmetric and orthogonal, but no longer anticommuting with P[2]
    const FkmField f(P);
    const auto r = verify_cartan_munzner(f, 20, 5, 1e-8);
    CHECK_FALSE(r.pass);
    CHECK(r.gradient_residual > 1e-3);
}

TEST_CASE("homogeneity and range on the sphere") {
    const FkmField f(build_system(4, 2, {1, -1}));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const Vec x = random_unit_vector(f.dim(), rng);
        const double v = f.value(x);
        CHECK(v <= 1.0 + 1e-12);
        CHECK(v >= -1.0 - 1e-12);
        CHECK(f.value(1.7 * x) == doctest::Approx(std::pow(1.7, 4) * v).epsilon(1e-12));
        const FieldBundle b = f.evaluate(2.0 * x);
        CHECK(b.f == doctest::Approx(v).epsilon(1e-12));
        CHECK(b.F == doctest::Approx(16 * v).epsilon(1e-12));
    }
}

TEST_CASE("focal submanifolds are the extreme level sets") {
    for (auto [m, k] : {std::pair{2, 2}, {3, 2}, {5, 1}}) {
        const CliffordSystem sys = build_system(m, k, std::vector<int>(k, 1));
        const FkmField f(sys);
        for (int s = 0; s < 5; ++s) {
            const Vec xp = sample_focal_point(sys, FocalSide::Plus, s);
            const Vec xm = sample_focal_point(sys, FocalSide::Minus, s);
            CHECK(f.value(xp) == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(f.value(xm) == doctest::Approx(-1.0).epsilon(1e-10));
            CHECK(tangential_gradient_norm(f, xp) <= 1e-5);
            CHECK(tangential_gradient_norm(f, xm) <= 1e-5);
        }
    }
}

TEST_CASE("free functions and dimension checks") {
    const CliffordSystem sys = build_system(2, 2, {1, 1});
    Vec x = Vec::LinSpaced(sys.dim(), -1.0, 1.0);
    const FkmField f(sys);
    CHECK(evaluate_F(sys, x) == doctest::Approx(f.value(x)));
    CHECK((gradient_F(sys, x) - f.gradient(x)).norm() < 1e-12);
    CHECK(laplacian_F(sys, x) == doctest::Approx(f.laplacian(x)));
    try {
        f.value(Vec::Zero(3));
        FAIL("expected dimension-mismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
}

TEST_CASE("F is invariant under each generator") {
    std::mt19937_64 rng(12);
    for (auto [m, k, q] : {std::tuple{3, 2, 0}, {4, 2, 0}, {4, 3, 3}, {5, 1, 0}}) {
        const CliffordSystem sys = build_system(m, k, m % 4 == 0 ? signs_for_q(k, q) : std::vector<int>(k, 1));
        const FkmField f(sys);
        const auto P = sys.real();
        for (int t = 0; t < 10; ++t) {
            const Vec x = gaussian_vector(f.dim(), rng);
            for (const Mat& p : P) CHECK(std::abs(f.value(p * x) - f.value(x)) <= 1e-10 * std::max(1.0, std::abs(f.value(x))));
        }
    }
}
