#include "fkm/curvature.hpp"
#include "fkm/errors.hpp"
#include "fkm/homogeneous.hpp"

#include <doctest.h>

#include <random>

using namespace fkm;

TEST_CASE("polarization") {
    // s = x0^2 - x1^2 + 4 x0 x2
    const Polynomial s{{1.0, {0, 0}}, {-1.0, {1, 1}}, {4.0, {0, 2}}};
    const Mat A = polarize(s, 3);
    CHECK(A(0, 0) == 1.0);
    CHECK(A(1, 1) == -1.0);
    CHECK(A(0, 2) == 2.0);
    CHECK(A(2, 0) == 2.0);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 10; ++t) {
        const Vec X = gaussian_vector(3, rng);
        CHECK(X.dot(A * X) == doctest::Approx(evaluate(s, X)));
    }
    try {
        polarize({{1.0, {0, 1, 2}}}, 3);
        FAIL("expected invalid-argument");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
}

TEST_CASE("models are well formed") {
    for (ModelCase c : all_model_cases()) {
        CAPTURE(to_string(c));
        const HomogeneousFocalModel m = load_model(c);
        CHECK(model_case_from_string(to_string(c)) == c);
        CHECK(static_cast<int>(m.coordinates.size()) == m.dim);
        REQUIRE(!m.shape_ops.empty());
        std::mt19937_64 rng(2);
        for (std::size_t i = 0; i < m.shape_ops.size(); ++i) {
            const Mat& a = m.shape_ops[i];
            CHECK(a.rows() == m.dim);
            CHECK((a - a.transpose()).norm() <= 1e-14);
            CHECK(std::abs(a.trace()) <= 1e-12);
            if (!m.forms.empty()) {
                const Vec X = gaussian_vector(m.dim, rng);
                CHECK(X.dot(a * X) == doctest::Approx(evaluate(m.forms[i], X)));
            }
        }
    }
    CHECK_THROWS_AS(model_case_from_string("g5"), Error);
}

TEST_CASE("model witnesses") {
    const std::vector<std::pair<ModelCase, double>> printed{
        {ModelCase::G6M1Plus, -5.0}, {ModelCase::G6M1Minus, -2.0}, {ModelCase::G6M2Plus, -5.0},
        {ModelCase::G6M2Minus, -2.0}, {ModelCase::G4_22_Plus, -1.0}, {ModelCase::G4_45_Plus, -1.0}};
    for (auto [c, k] : printed) {
        const auto w = model_witness(c);
        CAPTURE(to_string(c));
        CHECK(w.verified());
        CHECK(std::abs(w.K - k) <= 1e-9);
    }
    const auto minus45 = model_witness(ModelCase::G4_45_Minus);
    CHECK(minus45.verified());
    CHECK(minus45.K <= -1.0 / 3 + 1e-9);
}

TEST_CASE("Ricci spectra of the g = 6 models") {
    const auto check = [](ModelCase c, const std::vector<double>& expected) {
        const HomogeneousFocalModel m = load_model(c);
        const Vec s = ricci_form(m.shape_ops, m.dim).spectrum;
        REQUIRE(s.size() == static_cast<Eigen::Index>(expected.size()));
        for (std::size_t i = 0; i < expected.size(); ++i) CHECK(std::abs(s(i) - expected[i]) <= 1e-10);
    };
    check(ModelCase::G6M1Plus, {-2, -2, 10.0 / 3, 10.0 / 3, 4});
    check(ModelCase::G6M1Minus, {-2.0 / 3, -2.0 / 3, 2, 2, 4});
    check(ModelCase::G6M2Plus, {0, 0, 0, 0, 8, 8, 8, 8, 9, 9});
    check(ModelCase::G6M2Minus, {4, 4, 4, 4, 4, 4, 4, 4, 9, 9});
    // G6M1Plus: the trace of the Ricci form is the scalar curvature 20/3
    const auto m = load_model(ModelCase::G6M1Plus);
    CHECK(scalar_curvature(m.shape_ops, m.dim) == doctest::Approx(20.0 / 3));
}

TEST_CASE("Ricci form of the g = 6, m = 2, M- model is diagonal") {
    const auto m = load_model(ModelCase::G6M2Minus);
    const Mat form = ricci_form(m.shape_ops, m.dim).form;
    Mat expected = 4.0 * Mat::Identity(10, 10);
    // a_5, a_6 are the two coordinates of the third block
    expected(4, 4) = expected(5, 5) = 9.0;
    CHECK((form - expected).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("Ricci forms of the g = 6 models coefficient by coefficient") {
    const double s3 = std::sqrt(3.0);
    const auto form = [](ModelCase c) {
        const auto m = load_model(c);
        return ricci_form(m.shape_ops, m.dim).form;
    };
    {
        Mat e = Mat::Zero(5, 5);
        e.diagonal() << -2, 10.0 / 3, 4, 10.0 / 3, -2;
        CHECK((form(ModelCase::G6M1Plus) - e).cwiseAbs().maxCoeff() <= 1e-12);
    }
    {
        Mat e = Mat::Zero(5, 5);
        e.diagonal() << 0, 4.0 / 3, 4, 4.0 / 3, 0;
        e(0, 3) = e(3, 0) = 2 / s3;
        e(1, 4) = e(4, 1) = 2 / s3;
        CHECK((form(ModelCase::G6M1Minus) - e).cwiseAbs().maxCoeff() <= 1e-12);
    }
    {
        Mat e = Mat::Zero(10, 10);
        e.diagonal() << 0, 0, 8, 8, 9, 9, 8, 8, 0, 0;
        CHECK((form(ModelCase::G6M2Plus) - e).cwiseAbs().maxCoeff() <= 1e-12);
    }
    // a non-positive direction on the m = 1, M- model
    const auto m = load_model(ModelCase::G6M1Minus);
    Vec X = Vec::Zero(5);
    X(0) = -std::sqrt(0.5);
    X(3) = std::sqrt(0.5);
    CHECK(X.dot(ricci_form(m.shape_ops, 5).form * X) == doctest::Approx(2.0 / 3 - 2 / s3));
}

TEST_CASE("printed witness pairs") {
    const double h = std::sqrt(0.5);
    {
        const auto m = load_model(ModelCase::G4_22_Plus);
        Vec X = Vec::Zero(6), Y = Vec::Zero(6);
        X(2) = X(3) = h;
        Y(0) = Y(1) = h;
        CHECK(sectional_curvature(m.shape_ops, X, Y) == doctest::Approx(-1.0).epsilon(1e-12));
    }
    {
        const auto m = load_model(ModelCase::G4_45_Plus);
        CHECK(sectional_curvature(m.shape_ops, Vec::Unit(14, 0), Vec::Unit(14, 5)) ==
              doctest::Approx(-1.0).epsilon(1e-12));
    }
    {
        const auto p = load_model(ModelCase::G6M2Plus);
        const auto q = load_model(ModelCase::G6M2Minus);
        CHECK(sectional_curvature(p.shape_ops, Vec::Unit(10, 0), Vec::Unit(10, 9)) == doctest::Approx(-5.0));
        CHECK(sectional_curvature(q.shape_ops, Vec::Unit(10, 0), Vec::Unit(10, 9)) == doctest::Approx(-2.0));
    }
}
