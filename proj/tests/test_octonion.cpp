#include "fkm/octonion.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace fkm;

namespace {

// Hamilton product written out term by term.
std::array<double, 4> hamilton(const std::array<double, 4>& p, const std::array<double, 4>& q) {
    return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
            p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
            p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

std::array<double, 4> qconj(const std::array<double, 4>& p) { return {p[0], -p[1], -p[2], -p[3]}; }

std::array<double, 4> qsub(const std::array<double, 4>& a, const std::array<double, 4>& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

std::array<double, 4> qadd(const std::array<double, 4>& a, const std::array<double, 4>& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

// (a,b)(c,d) = (ac - d*b, da + bc*) on raw arrays.
std::array<double, 8> doubling(const std::array<double, 8>& x, const std::array<double, 8>& y) {
    const std::array<double, 4> a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
    const std::array<double, 4> c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
    const auto first = qsub(hamilton(a, c), hamilton(qconj(d), b));
    const auto second = qadd(hamilton(d, a), hamilton(b, qconj(c)));
    return {first[0], first[1], first[2], first[3], second[0], second[1], second[2], second[3]};
}

Octonion random_octonion(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    Octonion o;
    for (double& c : o.c) c = n(rng);
    return o;
}

double dist(const Octonion& a, const Octonion& b) {
    double s = 0;
    for (int i = 0; i < 8; ++i) s += (a.c[i] - b.c[i]) * (a.c[i] - b.c[i]);
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("quaternion product matches the Hamilton table") {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> n;
    for (int t = 0; t < 50; ++t) {
        Quaternion p, q;
        for (double& c : p.c) c = n(rng);
        for (double& c : q.c) c = n(rng);
        const auto expected = hamilton(p.c, q.c);
        const Quaternion got = p * q;
        for (int i = 0; i < 4; ++i) CHECK(got.c[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    }
    CHECK(Quaternion::unit(1) * Quaternion::unit(2) == Quaternion::unit(3));
}

TEST_CASE("octonion product matches an independent doubling") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; ++t) {
        const Octonion x = random_octonion(rng), y = random_octonion(rng);
        const auto expected = doubling(x.c, y.c);
        const Octonion got = x * y;
        for (int i = 0; i < 8; ++i) CHECK(got.c[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    }
}

TEST_CASE("octonion units") {
    for (int i = 1; i < 8; ++i) {
        const Octonion e = Octonion::unit(i);
        Octonion minus_one;
        minus_one.c[0] = -1;
        CHECK(e * e == minus_one);
        for (int j = 1; j < 8; ++j) {
            if (i == j) continue;
            const Octonion a = e * Octonion::unit(j);
            const Octonion b = Octonion::unit(j) * e;
            CHECK(dist(a, -1.0 * b) == 0.0);
        }
    }
    // not associative
    const Octonion lhs = (Octonion::unit(1) * Octonion::unit(2)) * Octonion::unit(4);
    const Octonion rhs = Octonion::unit(1) * (Octonion::unit(2) * Octonion::unit(4));
    CHECK(dist(lhs, rhs) > 1.0);
}

TEST_CASE("composition algebra identities") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        const Octonion x = random_octonion(rng), y = random_octonion(rng), z = random_octonion(rng);
        CHECK((x * y).norm() == doctest::Approx(x.norm() * y.norm()).epsilon(1e-12));
        CHECK(dist(x * (x * y), (x * x) * y) < 1e-10);
        CHECK(dist((y * x) * x, y * (x * x)) < 1e-10);
        CHECK(dist((x * y).conj(), y.conj() * x.conj()) < 1e-10);
        // Moufang: z(x(zy)) = ((zx)z)y
        CHECK(dist(z * (x * (z * y)), ((z * x) * z) * y) < 1e-9);
    }
}

TEST_CASE("multiplication matrices") {
    std::mt19937_64 rng(4);
    const Octonion z = random_octonion(rng);
    for (int i = 0; i < 8; ++i) {
        const IntMat L = octonion_left_matrix(i);
        const IntMat R = octonion_right_matrix(i);
        CHECK(L.cwiseAbs().maxCoeff() == 1);
        CHECK((L.transpose() * L).isIdentity());
        CHECK((to_real(L) * to_vec(z) - to_vec(Octonion::unit(i) * z)).norm() < 1e-12);
        CHECK((to_real(R) * to_vec(z) - to_vec(z * Octonion::unit(i))).norm() < 1e-12);
        if (i > 0) CHECK(IntMat(L + L.transpose()).isZero());
    }
    for (int i = 0; i < 4; ++i) {
        const IntMat Q = quaternion_left_matrix(i);
        Vec v(4);
        v << 0.3, -1.2, 0.5, 2.0;
        std::array<double, 4> unit{};
        unit[i] = 1;
        const auto expected = hamilton(unit, {v(0), v(1), v(2), v(3)});
        const Vec got = to_real(Q) * v;
        for (int j = 0; j < 4; ++j) CHECK(got(j) == doctest::Approx(expected[j]));
    }
}
