#pragma once

#include "linalg.hpp"

#include <array>

namespace fkm {

/// Real quaternion a + b i + c j + d k with i j = k.
struct Quaternion {
    std::array<double, 4> c{};

    static Quaternion unit(int index);

    Quaternion conj() const { return {{c[0], -c[1], -c[2], -c[3]}}; }
    double norm() const;

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
    friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// Octonion over the basis {1, e1, ..., e7}, stored as the quaternion pair
/// (a, b) with 1=(1,0), e1=(i,0), e2=(j,0), e3=(k,0), e4=(0,1), e5=(0,i),
/// e6=(0,j), e7=(0,k).
struct Octonion {
    std::array<double, 8> c{};

    static Octonion unit(int index);
    static Octonion from_pair(const Quaternion& a, const Quaternion& b);

    Quaternion first() const { return {{c[0], c[1], c[2], c[3]}}; }
    Quaternion second() const { return {{c[4], c[5], c[6], c[7]}}; }

    Octonion conj() const;
    double norm() const;

    friend Octonion operator+(const Octonion& a, const Octonion& b);
    friend Octonion operator-(const Octonion& a, const Octonion& b);
    friend Octonion operator*(double s, const Octonion& a);
    friend bool operator==(const Octonion&, const Octonion&) = default;
};

/// Cayley-Dickson product (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
Octonion octonion_multiply(const Octonion& x, const Octonion& y);

inline Octonion operator*(const Octonion& x, const Octonion& y) { return octonion_multiply(x, y); }

/// Matrix of z -> e_index * z on R^8 (index 0..7); entries are exactly 0 or +-1.
IntMat octonion_left_matrix(int index);

/// Matrix of z -> z * e_index on R^8.
IntMat octonion_right_matrix(int index);

/// Matrix of z -> q_index * z on R^4 for the quaternion units 1, i, j, k.
IntMat quaternion_left_matrix(int index);

Vec to_vec(const Octonion& o);
Octonion to_octonion(const Vec& v);

}  // namespace fkm
