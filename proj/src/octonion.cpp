#include "fkm/octonion.hpp"

#include "fkm/errors.hpp"

#include <cmath>
#include <string>

namespace fkm {

Quaternion Quaternion::unit(int index) {
    if (index < 0 || index > 3) throw Error(ErrorKind::InvalidArgument, "quaternion unit index " + std::to_string(index));
    Quaternion q;
    q.c[static_cast<std::size_t>(index)] = 1.0;
    return q;
}

double Quaternion::norm() const { return std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]); }

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]}};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]}};
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    const auto& p = a.c;
    const auto& q = b.c;
    return {{p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
             p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
             p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
             p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]}};
}

Octonion Octonion::unit(int index) {
    if (index < 0 || index > 7) throw Error(ErrorKind::InvalidArgument, "octonion unit index " + std::to_string(index));
    Octonion o;
    o.c[static_cast<std::size_t>(index)] = 1.0;
    return o;
}

Octonion Octonion::from_pair(const Quaternion& a, const Quaternion& b) {
    Octonion o;
    for (std::size_t i = 0; i < 4; ++i) {
        o.c[i] = a.c[i];
        o.c[i + 4] = b.c[i];
    }
    return o;
}

Octonion Octonion::conj() const { return from_pair(first().conj(), Quaternion{} - second()); }

double Octonion::norm() const {
    double s = 0.0;
    for (double v : c) s += v * v;
    return std::sqrt(s);
}

Octonion operator+(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

Octonion operator*(double s, const Octonion& a) {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = s * a.c[i];
    return r;
}

Octonion octonion_multiply(const Octonion& x, const Octonion& y) {
    const Quaternion a = x.first(), b = x.second();
    const Quaternion c = y.first(), d = y.second();
    return Octonion::from_pair(a * c - d.conj() * b, d * a + b * c.conj());
}

namespace {

template <typename Apply>
IntMat matrix_of(int dim, Apply&& apply) {
    IntMat m(dim, dim);
    for (int col = 0; col < dim; ++col) {
        const Vec image = apply(col);
        for (int row = 0; row < dim; ++row) m(row, col) = static_cast<std::int64_t>(std::lround(image(row)));
    }
    return m;
}

}  // namespace

IntMat octonion_left_matrix(int index) {
    const Octonion e = Octonion::unit(index);
    return matrix_of(8, [&](int col) { return to_vec(e * Octonion::unit(col)); });
}

IntMat octonion_right_matrix(int index) {
    const Octonion e = Octonion::unit(index);
    return matrix_of(8, [&](int col) { return to_vec(Octonion::unit(col) * e); });
}

IntMat quaternion_left_matrix(int index) {
    const Quaternion q = Quaternion::unit(index);
    return matrix_of(4, [&](int col) {
        const Quaternion r = q * Quaternion::unit(col);
        return Vec(Eigen::Vector4d(r.c[0], r.c[1], r.c[2], r.c[3]));
    });
}

Vec to_vec(const Octonion& o) {
    Vec v(8);
    for (int i = 0; i < 8; ++i) v(i) = o.c[static_cast<std::size_t>(i)];
    return v;
}

Octonion to_octonion(const Vec& v) {
    if (v.size() != 8) throw Error(ErrorKind::DimensionMismatch, "octonion needs 8 coefficients");
    Octonion o;
    for (int i = 0; i < 8; ++i) o.c[static_cast<std::size_t>(i)] = v(i);
    return o;
}

}  // namespace fkm
