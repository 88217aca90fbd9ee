#include "fkm/curvature.hpp"
#include "fkm/errors.hpp"
#include "fkm/focal.hpp"
#include "fkm/homogeneous.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace fkm;

namespace {

FocalFrame sample_frame(int m, int k, int q, FocalSide side, std::uint64_t seed) {
    const CliffordSystem sys = build_system(m, k, m % 4 == 0 ? signs_for_q(k, q) : std::vector<int>(k, 1));
    return frame_at(sys, side, sample_focal_point(sys, side, seed));
}

}  // namespace

TEST_CASE("sectional curvature basics") {
    const std::vector<Mat> zero{Mat::Zero(4, 4)};
    CHECK(sectional_curvature(zero, Vec::Unit(4, 0), Vec::Unit(4, 1)) == doctest::Approx(1.0));
    CHECK(sectional_curvature({}, Vec::Unit(4, 0), Vec::Unit(4, 3)) == doctest::Approx(1.0));
    try {
        sectional_curvature(zero, Vec::Unit(4, 0), 2.0 * Vec::Unit(4, 0));
        FAIL("expected degenerate-pair");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegeneratePair);
    }
    const auto model = load_model(ModelCase::G6M1Plus);
    CHECK(sectional_curvature(model.shape_ops, Vec::Unit(5, 0), Vec::Unit(5, 4)) == doctest::Approx(-5.0));
}

TEST_CASE("basis invariance of the plane") {
    const FocalFrame f = sample_frame(3, 2, 0, FocalSide::Plus, 2);
    std::mt19937_64 rng(5);
    const int n = f.tangent_dim();
    for (int t = 0; t < 20; ++t) {
        const Vec X = gaussian_vector(n, rng), Y = gaussian_vector(n, rng);
        const double K = sectional_curvature(f.shape_ops, X, Y);
        const double a = std::cos(0.7 * t), b = std::sin(0.7 * t);
        CHECK(std::abs(sectional_curvature(f.shape_ops, a * X + b * Y, -b * X + a * Y) - K) <= 1e-10);
        CHECK(std::abs(sectional_curvature(f.shape_ops, 3.0 * X + Y, X - 2.0 * Y) - K) <= 1e-10);
        CHECK(std::abs(sectional_curvature(f.shape_ops, Y, X) - K) <= 1e-10);
    }
}

TEST_CASE("certificates") {
    const auto model = load_model(ModelCase::G6M1Plus);
    const auto ok = certify_pair("g6", model.shape_ops, Vec::Unit(5, 0), Vec::Unit(5, 4), -5.0, Comparison::Equal, 1e-9);
    CHECK(ok.verified());
    CHECK(ok.kind == CertificateKind::Witness);
    const auto wrong = certify_pair("g6", model.shape_ops, Vec::Unit(5, 0), Vec::Unit(5, 4), -4.0, Comparison::Equal, 1e-9);
    CHECK_FALSE(wrong.verified());
    const auto skew = certify_pair("g6", model.shape_ops, Vec::Unit(5, 0), Vec::Unit(5, 0) + Vec::Unit(5, 4), -5.0,
                                   Comparison::AtMost, 10.0);
    CHECK_FALSE(skew.verified());  // not orthonormal
    CHECK(compare(-1.0, -0.5, Comparison::AtMost, 0.0));
    CHECK_FALSE(compare(-0.4, -0.5, Comparison::AtMost, 0.0));
    CHECK(compare(0.0, -1e-9, Comparison::AtLeast, 0.0));
    CHECK(compare(1.0 + 1e-12, 1.0, Comparison::Equal, 1e-10));
}

TEST_CASE("Ricci and scalar consistency on frames") {
    for (auto [m, k, q] : {std::tuple{3, 2, 0}, {4, 2, 2}, {2, 2, 0}, {5, 1, 0}}) {
        for (FocalSide side : {FocalSide::Plus, FocalSide::Minus}) {
            const FocalFrame f = sample_frame(m, k, q, side, 1);
            const int n = f.tangent_dim();
            const RicciForm r = ricci_form(f.shape_ops, n);
            CHECK(r.mean_curvature <= 1e-9);
            CHECK((ricci_from_sectional(f.shape_ops, n) - r.form.diagonal()).cwiseAbs().maxCoeff() <= 1e-8);
            CHECK(std::abs(r.form.trace() - scalar_curvature(f.shape_ops, n)) <= 1e-8);
            CHECK(std::abs(r.spectrum.sum() - r.form.trace()) <= 1e-8);
        }
    }
}

TEST_CASE("scalar curvature is constant along a focal submanifold") {
    for (FocalSide side : {FocalSide::Plus, FocalSide::Minus}) {
        const FocalFrame a = sample_frame(3, 2, 0, side, 10);
        const FocalFrame b = sample_frame(3, 2, 0, side, 20);
        CHECK(std::abs(scalar_curvature(a.shape_ops, a.tangent_dim()) - scalar_curvature(b.shape_ops, b.tangent_dim())) <=
              1e-8);
    }
}

TEST_CASE("Ricci of the round sphere") {
    CHECK(scalar_curvature({Mat::Zero(5, 5)}, 5) == doctest::Approx(20.0));
    const RicciForm r = ricci_form({Mat::Zero(5, 5)}, 5);
    CHECK((r.spectrum.array() - 4.0).abs().maxCoeff() <= 1e-12);
    // a non-minimal example keeps the trace term
    Mat a = Mat::Zero(2, 2);
    a(0, 0) = 1.0;
    a(1, 1) = 1.0;
    const RicciForm u = ricci_form({a}, 2);
    CHECK(u.mean_curvature == doctest::Approx(2.0));
    CHECK(u.spectrum(0) == doctest::Approx(2.0));  // sphere of radius 1/sqrt 2
}

TEST_CASE("scan finds the known minima") {
    ScanOptions opts;
    opts.restarts = 50;
    const auto neg = min_sectional_scan("indefinite (4,3) M+", sample_frame(4, 2, 0, FocalSide::Plus, 0).shape_ops, opts);
    CHECK(neg.kind == CertificateKind::ScanMin);
    CHECK(neg.K <= -1.0 + 1e-6);
    CHECK(neg.X.norm() == doctest::Approx(1.0));
    CHECK(std::abs(neg.X.dot(neg.Y)) <= 1e-10);
    const auto pos = min_sectional_scan("(2,1) M+", sample_frame(2, 2, 0, FocalSide::Plus, 0).shape_ops, opts);
    CHECK(pos.K >= -1e-8);
    const auto model = min_sectional_scan("g6m1+", load_model(ModelCase::G6M1Plus).shape_ops, opts);
    CHECK(model.K <= -5.0 + 1e-6);
}

TEST_CASE("more restarts never raise the minimum") {
    const FocalFrame f = sample_frame(3, 2, 0, FocalSide::Minus, 3);
    double previous = std::numeric_limits<double>::infinity();
    for (int r : {1, 2, 5, 10, 20}) {
        ScanOptions o;
        o.restarts = r;
        o.seed = 77;
        const auto c = min_sectional_scan("mono", f.shape_ops, o);
        CHECK(c.K <= previous);
        CHECK(c.best_restart < r);
        previous = c.K;
    }
}

TEST_CASE("scans are reproducible") {
    const FocalFrame f = sample_frame(5, 1, 0, FocalSide::Plus, 3);
    ScanOptions o;
    o.restarts = 10;
    o.seed = 123;
    const auto a = min_sectional_scan("s", f.shape_ops, o);
    const auto b = min_sectional_scan("s", f.shape_ops, o);
    CHECK(a.K == b.K);
    CHECK(a.best_restart == b.best_restart);
    CHECK(a.X == b.X);
}

TEST_CASE("local descent does not increase K") {
    const FocalFrame f = sample_frame(3, 2, 0, FocalSide::Plus, 3);
    const Vec X = Vec::Unit(f.tangent_dim(), 0), Y = Vec::Unit(f.tangent_dim(), 1);
    const double K0 = sectional_curvature(f.shape_ops, X, Y);
    const auto d = descend_from("d", f.shape_ops, X, Y);
    CHECK(d.K <= K0 + 1e-12);
}

TEST_CASE("expected signs") {
    const auto sign = [](int m, int k, int q, FocalSide s) { return expected_focal_sign(ot_fkm_family(m, k, q), s); };
    CHECK(sign(2, 2, 0, FocalSide::Plus) == CurvatureSign::NonNegative);
    CHECK(sign(6, 1, 0, FocalSide::Plus) == CurvatureSign::NonNegative);
    CHECK(sign(4, 2, 2, FocalSide::Plus) == CurvatureSign::NonNegative);
    CHECK(sign(4, 2, 0, FocalSide::Plus) == CurvatureSign::NegativeSomewhere);
    CHECK(sign(1, 4, 0, FocalSide::Minus) == CurvatureSign::NonNegative);
    CHECK(sign(1, 4, 0, FocalSide::Plus) == CurvatureSign::NegativeSomewhere);
    CHECK(sign(9, 1, 0, FocalSide::Plus) == CurvatureSign::NegativeSomewhere);
    CHECK(sign(2, 2, 0, FocalSide::Minus) == CurvatureSign::NegativeSomewhere);
    CHECK(expected_focal_sign(load_model(ModelCase::G6M1Minus).family, FocalSide::Minus) ==
          CurvatureSign::NegativeSomewhere);
    FamilyDescriptor g22{4, 2, 2, FamilyKind::Homogeneous, Definiteness::NotApplicable};
    CHECK(expected_focal_sign(g22, FocalSide::Minus) == CurvatureSign::NonNegative);
    CHECK(expected_focal_sign(g22, FocalSide::Plus) == CurvatureSign::NegativeSomewhere);
}

TEST_CASE("sign verdicts") {
    ScanOptions o;
    o.restarts = 30;
    const auto def = ot_fkm_family(4, 2, 2);
    const auto scan = min_sectional_scan("definite", sample_frame(4, 2, 2, FocalSide::Plus, 0).shape_ops, o);
    CHECK(sign_verdict(def, FocalSide::Plus, {scan}).consistent);
    const auto w = registry_witness(RegistryCase::Pair96);
    CHECK(sign_verdict(ot_fkm_family(9, 1, 0), FocalSide::Plus, {w}).consistent);
    // wrong evidence is flagged
    CHECK_FALSE(sign_verdict(def, FocalSide::Plus, {w}).consistent);
    CHECK_FALSE(sign_verdict(def, FocalSide::Plus, {}).consistent);
    const auto model = load_model(ModelCase::G6M1Plus);
    CHECK(sign_verdict(model.family, model.side, {model_witness(ModelCase::G6M1Plus)}).consistent);
}
