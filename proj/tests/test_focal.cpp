#include "fkm/errors.hpp"
#include "fkm/focal.hpp"

#include <doctest.h>

#include <random>

using namespace fkm;

namespace {

CliffordSystem sys_of(int m, int k, int q = -100) {
    if (q == -100) return build_system(m, k, std::vector<int>(k, 1));
    return build_system(m, k, signs_for_q(k, q));
}

}  // namespace

TEST_CASE("sampled points lie on the focal submanifolds") {
    for (auto [m, k] : {std::pair{1, 3}, {2, 2}, {3, 2}, {4, 2}, {5, 1}, {6, 1}, {9, 1}}) {
        const CliffordSystem sys = sys_of(m, k);
        const auto P = sys.real();
        for (int s = 0; s < 5; ++s) {
            CHECK(plus_residual(P, sample_focal_point(sys, FocalSide::Plus, s)) <= 1e-10);
            CHECK(minus_residual(P, sample_focal_point(sys, FocalSide::Minus, s)) <= 1e-10);
        }
    }
}

TEST_CASE("Newton projection and retraction") {
    const CliffordSystem sys = sys_of(3, 2);
    const auto P = sys.real();
    std::mt19937_64 rng(9);
    int converged = 0;
    for (int t = 0; t < 20; ++t) {
        const auto x = project_to_plus(P, random_unit_vector(sys.dim(), rng));
        if (!x) continue;
        ++converged;
        CHECK(plus_residual(P, *x) <= 1e-12);
    }
    CHECK(converged >= 15);
    for (int t = 0; t < 20; ++t) CHECK(minus_residual(P, retract_to_minus(P, random_unit_vector(sys.dim(), rng))) <= 1e-12);
}

TEST_CASE("frames: orthonormality, dimensions and shape-operator spectra") {
    for (auto [m, k, q] : {std::tuple{1, 3, 0}, {2, 2, 0}, {3, 2, 0}, {4, 2, 2}, {4, 2, 0}, {5, 1, 0}, {8, 2, 2}}) {
        const CliffordSystem sys = m % 4 == 0 ? sys_of(m, k, q) : sys_of(m, k);
        for (FocalSide side : {FocalSide::Plus, FocalSide::Minus}) {
            const auto expected = expected_focal_spectrum(side, sys.m1(), sys.m2());
            for (int s = 0; s < 3; ++s) {
                const FocalFrame f = frame_at(sys, side, sample_focal_point(sys, side, s));
                CAPTURE(m);
                CAPTURE(to_string(side));
                CHECK(f.gram_deviation() <= 1e-10);
                CHECK(f.tangent_dim() == (side == FocalSide::Plus ? 2 * sys.l - m - 2 : sys.l + m - 1));
                CHECK(static_cast<int>(f.normal.size()) == (side == FocalSide::Plus ? m + 1 : sys.l - m));
                CHECK(f.shape_ops.size() == f.normal.size());
                for (const Mat& a : f.shape_ops) {
                    CHECK((a - a.transpose()).norm() <= 1e-12);
                    CHECK(std::abs(a.trace()) <= 1e-9);
                    CHECK(spectrum_matches(a, expected));
                }
            }
        }
    }
}

TEST_CASE("expected spectra") {
    const auto plus = expected_focal_spectrum(FocalSide::Plus, 3, 4);
    REQUIRE(plus.size() == 3);
    CHECK(plus[0].value == -1.0);
    CHECK(plus[0].multiplicity == 4);
    CHECK(plus[1].multiplicity == 3);
    CHECK(plus[2].multiplicity == 4);
    const auto minus = expected_focal_spectrum(FocalSide::Minus, 3, 4);
    CHECK(minus[0].multiplicity == 3);
    CHECK(minus[1].multiplicity == 4);
    CHECK(minus[2].multiplicity == 3);
}

TEST_CASE("shape operators agree with curves on the submanifold") {
    for (auto [m, k] : {std::pair{3, 2}, {2, 2}, {5, 1}}) {
        const CliffordSystem sys = sys_of(m, k);
        for (FocalSide side : {FocalSide::Plus, FocalSide::Minus}) {
            const FocalFrame f = frame_at(sys, side, sample_focal_point(sys, side, 4));
            CHECK(second_fundamental_form_defect(sys, f) <= 1e-5);
        }
    }
}

TEST_CASE("membership is enforced") {
    const CliffordSystem sys = sys_of(3, 2);
    Vec x = Vec::Zero(sys.dim());
    x(0) = 1.0;  // <P_0 x, x> = 1: a point of M- but not of M+
    try {
        frame_at(sys, FocalSide::Plus, x);
        FAIL("expected membership-failure");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MembershipFailure);
    }
    CHECK_NOTHROW(frame_at(sys, FocalSide::Minus, x));
}

TEST_CASE("registry witnesses") {
    for (RegistryCase c : all_registry_cases()) {
        CAPTURE(to_string(c));
        const WitnessData w = registry_witness_data(c);
        const auto P = w.sys.real();
        CHECK(plus_residual(P, w.x) <= 1e-12);
        CHECK(w.X.norm() == doctest::Approx(1.0));
        CHECK(w.Y.norm() == doctest::Approx(1.0));
        CHECK(std::abs(w.X.dot(w.Y)) <= 1e-12);
        CHECK(ambient_plus_curvature(P, w.X, w.Y) == doctest::Approx(-1.0).epsilon(1e-9));
        const CurvatureCertificate cert = registry_witness(c);
        CHECK(cert.verified());
        CHECK(std::abs(cert.K + 1.0) <= 1e-9);
    }
    CHECK(registry_witness_data(RegistryCase::Definite87).sys.definite());
    CHECK_FALSE(registry_witness_data(RegistryCase::Indefinite87).sys.definite());
    CHECK_FALSE(registry_witness_data(RegistryCase::Indefinite43).sys.definite());
}

TEST_CASE("orthogonal-slot witness when l > 2m") {
    for (int m = 1; m <= 9; ++m) {
        for (int k = 1; k <= 4; ++k) {
            const int l = k * delta_of_m(m);
            if (l - m - 1 < 1 || l <= 2 * m || l > 32) continue;
            const auto c = orthogonal_slot_witness(sys_of(m, k), 3);
            CAPTURE(m);
            CAPTURE(k);
            CHECK(c.verified());
            CHECK(std::abs(c.K + 1.0) <= 1e-9);
        }
    }
    try {
        orthogonal_slot_witness(sys_of(5, 1));
        FAIL("expected not-applicable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotApplicable);
    }
}

TEST_CASE("negative M- witness for m >= 2") {
    for (auto [m, k] : {std::pair{2, 2}, {3, 2}, {4, 2}, {5, 1}, {6, 1}, {9, 1}}) {
        const auto c = minus_witness(sys_of(m, k), 1);
        CAPTURE(m);
        CHECK(c.verified());
        CHECK(c.K <= -1e-6);
    }
}

TEST_CASE("frame witness rejects non-tangent vectors") {
    const CliffordSystem sys = sys_of(3, 2);
    const FocalFrame f = frame_at(sys, FocalSide::Plus, sample_focal_point(sys, FocalSide::Plus, 0));
    const auto c = frame_witness("normal", f, f.normal[0], f.tangent[0], 1.0, Comparison::Equal, 1e-9);
    CHECK_FALSE(c.verified());
    const auto ok = frame_witness("tangent", f, f.tangent[0], f.tangent[1], 0.0, Comparison::AtLeast, 10.0);
    CHECK(ok.verified());
    CHECK(f.tangency_residual(f.tangent[2]) <= 1e-12);
    CHECK((f.ambient(f.coefficients(f.tangent[1])) - f.tangent[1]).norm() <= 1e-12);
}

TEST_CASE("M- tangent space decomposition") {
    for (auto [m, k] : {std::pair{3, 2}, {2, 2}, {5, 1}}) {
        const CliffordSystem sys = sys_of(m, k);
        const FocalFrame f = frame_at(sys, FocalSide::Minus, sample_focal_point(sys, FocalSide::Minus, 6));
        REQUIRE(static_cast<int>(f.Q.size()) == m + 1);
        const Mat& Q0 = f.Q[0];
        CHECK((Q0 * f.x - f.x).norm() <= 1e-10);
        // span{Q_i x} plus the (+1)-eigenspace of Q_0 orthogonal to x
        std::vector<Vec> span;
        for (int i = 1; i <= m; ++i) span.push_back(f.Q[i] * f.x);
        Eigen::SelfAdjointEigenSolver<Mat> es(Q0);
        std::vector<Vec> plus;
        for (Eigen::Index c = 0; c < es.eigenvalues().size(); ++c)
            if (es.eigenvalues()(c) > 0) plus.push_back(es.eigenvectors().col(c));
        CHECK(static_cast<int>(plus.size()) == sys.l);
        std::vector<Vec> basis{f.x};
        extend_orthonormal(basis, span, 1e-10);
        CHECK(static_cast<int>(basis.size()) == m + 1);
        extend_orthonormal(basis, plus, 1e-10);
        CHECK(static_cast<int>(basis.size()) == 1 + f.tangent_dim());
        // every frame vector lies in that span
        const Mat B = stack_columns(basis);
        for (const Vec& t : f.tangent) CHECK((B * (B.transpose() * t) - t).norm() <= 1e-10);
    }
}

TEST_CASE("witness values do not depend on the generator recipe") {
    for (RegistryCase c : {RegistryCase::Indefinite43, RegistryCase::Pair52, RegistryCase::Indefinite43FromPair52}) {
        const auto a = registry_witness(c, SystemVariant::Standard);
        const auto b = registry_witness(c, SystemVariant::RightMultiplication);
        CAPTURE(to_string(c));
        CHECK(b.verified());
        CHECK(std::abs(a.K - b.K) <= 1e-9);
    }
    for (auto [m, k] : {std::pair{3, 2}, {2, 3}}) {
        const auto a = orthogonal_slot_witness(build_system(m, k, std::vector<int>(k, 1), SystemVariant::Standard), 2);
        const auto b = orthogonal_slot_witness(build_system(m, k, std::vector<int>(k, 1), SystemVariant::RightMultiplication), 2);
        CHECK(std::abs(a.K - b.K) <= 1e-9);
    }
}

TEST_CASE("focal Ricci lower bounds") {
    for (auto [m, k] : {std::pair{3, 2}, {2, 3}, {5, 1}, {1, 5}}) {
        const CliffordSystem sys = sys_of(m, k);
        const FocalFrame fp = frame_at(sys, FocalSide::Plus, sample_focal_point(sys, FocalSide::Plus, 1));
        CHECK(ricci_form(fp.shape_ops, fp.tangent_dim()).spectrum(0) >= 2.0 * (sys.m2() - 1) - 1e-9);
        if (m > 1) {
            const FocalFrame fm = frame_at(sys, FocalSide::Minus, sample_focal_point(sys, FocalSide::Minus, 1));
            CHECK(ricci_form(fm.shape_ops, fm.tangent_dim()).spectrum(0) > 0.0);
        }
    }
}
