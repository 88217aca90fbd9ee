#include "fkm/homogeneous.hpp"

#include "fkm/errors.hpp"

#include <cmath>

namespace fkm {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kSqrt2 = std::sqrt(2.0);

struct CaseName {
    ModelCase c;
    const char* name;
};

constexpr CaseName kNames[] = {
    {ModelCase::G6M1Plus, "g6m1-plus"},     {ModelCase::G6M1Minus, "g6m1-minus"},
    {ModelCase::G6M2Plus, "g6m2-plus"},     {ModelCase::G6M2Minus, "g6m2-minus"},
    {ModelCase::G4_22_Plus, "g4-22-plus"},  {ModelCase::G4_45_Plus, "g4-45-plus"},
    {ModelCase::G4_45_Minus, "g4-45-minus"},
};

Mat sym(int n, std::initializer_list<std::tuple<int, int, double>> entries) {
    // 1-based (row, col); mirrored.
    Mat a = Mat::Zero(n, n);
    for (const auto& [i, j, v] : entries) {
        a(i - 1, j - 1) = v;
        a(j - 1, i - 1) = v;
    }
    return a;
}

// 5x5 pattern of 2x2 blocks; `blocks` lists (block row, block col, 2x2 matrix), 1-based.
Mat blocks10(std::initializer_list<std::tuple<int, int, Eigen::Matrix2d>> blocks) {
    Mat a = Mat::Zero(10, 10);
    for (const auto& [i, j, b] : blocks) a.block(2 * (i - 1), 2 * (j - 1), 2, 2) = b;
    return a;
}

Mat g6_a0(int block) {
    const double d[5] = {kSqrt3, 1.0 / kSqrt3, 0.0, -1.0 / kSqrt3, -kSqrt3};
    Mat a = Mat::Zero(5 * block, 5 * block);
    for (int i = 0; i < 5; ++i)
        for (int r = 0; r < block; ++r) a(block * i + r, block * i + r) = d[i];
    return a;
}

Monomial mono(double c, std::initializer_list<int> vars) { return Monomial{c, std::vector<int>(vars)}; }

}  // namespace

const char* to_string(ModelCase c) {
    for (const auto& n : kNames)
        if (n.c == c) return n.name;
    return "unknown";
}

ModelCase model_case_from_string(const std::string& s) {
    for (const auto& n : kNames)
        if (s == n.name) return n.c;
    throw Error(ErrorKind::InvalidArgument, "unknown model case '" + s + "'");
}

std::vector<ModelCase> all_model_cases() {
    std::vector<ModelCase> out;
    for (const auto& n : kNames) out.push_back(n.c);
    return out;
}

Mat polarize(const Polynomial& form, int dim) {
    Mat a = Mat::Zero(dim, dim);
    for (const Monomial& t : form) {
        if (t.vars.size() != 2) throw Error(ErrorKind::InvalidArgument, "polarize expects a quadratic form");
        const int i = t.vars[0];
        const int j = t.vars[1];
        if (i < 0 || j < 0 || i >= dim || j >= dim) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
        if (i == j) {
            a(i, i) += t.coeff;
        } else {
            a(i, j) += 0.5 * t.coeff;
            a(j, i) += 0.5 * t.coeff;
        }
    }
    return a;
}

double evaluate(const Polynomial& form, const Vec& X) {
    double s = 0.0;
    for (const Monomial& t : form) {
        double v = t.coeff;
        for (int i : t.vars) v *= X(i);
        s += v;
    }
    return s;
}

HomogeneousFocalModel load_model(ModelCase c) {
    HomogeneousFocalModel m;
    m.id = c;
    m.family.kind = FamilyKind::Homogeneous;
    switch (c) {
    case ModelCase::G6M1Plus:
    case ModelCase::G6M1Minus: {
        m.family.g = 6;
        m.family.m1 = m.family.m2 = 1;
        m.side = c == ModelCase::G6M1Plus ? FocalSide::Plus : FocalSide::Minus;
        m.dim = 5;
        for (int i = 1; i <= 5; ++i) m.coordinates.push_back("e" + std::to_string(i));
        m.shape_ops.push_back(g6_a0(1));
        if (c == ModelCase::G6M1Plus)
            m.shape_ops.push_back(sym(5, {{1, 5, kSqrt3}, {2, 4, -1.0 / kSqrt3}}));
        else
            m.shape_ops.push_back(sym(5, {{1, 2, -1.0}, {2, 4, 2.0 / kSqrt3}, {4, 5, -1.0}}));
        break;
    }
    case ModelCase::G6M2Plus:
    case ModelCase::G6M2Minus: {
        m.family.g = 6;
        m.family.m1 = m.family.m2 = 2;
        m.side = c == ModelCase::G6M2Plus ? FocalSide::Plus : FocalSide::Minus;
        m.dim = 10;
        for (int i = 1; i <= 10; ++i) m.coordinates.push_back("e" + std::to_string(i));
        const Eigen::Matrix2d I = Eigen::Matrix2d::Identity();
        Eigen::Matrix2d J;
        J << 0.0, -1.0, 1.0, 0.0;
        const double r = 1.0 / kSqrt3;
        m.shape_ops.push_back(g6_a0(2));
        if (c == ModelCase::G6M2Plus) {
            m.shape_ops.push_back(blocks10({{1, 5, kSqrt3 * J}, {2, 4, r * J}, {4, 2, -r * J}, {5, 1, -kSqrt3 * J}}));
            m.shape_ops.push_back(blocks10({{1, 5, kSqrt3 * I}, {2, 4, r * I}, {4, 2, r * I}, {5, 1, kSqrt3 * I}}));
        } else {
            const double t = 2.0 / kSqrt3;
            m.shape_ops.push_back(
                blocks10({{1, 2, -I}, {2, 1, -I}, {2, 4, t * I}, {4, 2, t * I}, {4, 5, -I}, {5, 4, -I}}));
            m.shape_ops.push_back(
                blocks10({{1, 2, J}, {2, 1, -J}, {2, 4, -t * J}, {4, 2, t * J}, {4, 5, J}, {5, 4, -J}}));
        }
        break;
    }
    case ModelCase::G4_22_Plus: {
        m.family.g = 4;
        m.family.m1 = m.family.m2 = 2;
        m.side = FocalSide::Plus;
        m.dim = 6;
        m.coordinates = {"x1", "x2", "y1", "y2", "z1", "z2"};
        enum { x1, x2, y1, y2 };
        m.forms = {
            {mono(1, {x1, x1}), mono(1, {x2, x2}), mono(-1, {y1, y1}), mono(-1, {y2, y2})},
            {mono(2, {x1, y1}), mono(2, {x2, y2})},
            {mono(2, {x2, y1}), mono(-2, {x1, y2})},
        };
        break;
    }
    case ModelCase::G4_45_Plus: {
        m.family.g = 4;
        m.family.m1 = 4;
        m.family.m2 = 5;
        m.side = FocalSide::Plus;
        m.dim = 14;
        m.coordinates = {"x1", "x2", "x3", "x4", "x5", "y1", "y2", "y3", "y4", "y5", "z1", "z2", "z3", "z4"};
        auto x = [](int i) { return i - 1; };
        auto y = [](int i) { return 4 + i; };
        auto z = [](int i) { return 9 + i; };
        auto tail = [&](Polynomial p, int zi) {
            p.push_back(mono(kSqrt2, {x(5), z(zi)}));
            p.push_back(mono(kSqrt2, {y(5), z(zi)}));
            return p;
        };
        Polynomial s0;
        for (int i = 1; i <= 5; ++i) {
            s0.push_back(mono(1, {x(i), x(i)}));
            s0.push_back(mono(-1, {y(i), y(i)}));
        }
        Polynomial s1;
        for (int i = 1; i <= 4; ++i) s1.push_back(mono(2, {x(i), y(i)}));
        m.forms = {
            s0,
            tail(s1, 1),
            tail({mono(2, {x(2), y(1)}), mono(-2, {x(1), y(2)}), mono(2, {x(3), y(4)}), mono(-2, {x(4), y(3)})}, 2),
            tail({mono(2, {x(3), y(1)}), mono(-2, {x(1), y(3)}), mono(2, {x(4), y(2)}), mono(-2, {x(2), y(4)})}, 3),
            tail({mono(2, {x(2), y(3)}), mono(-2, {x(3), y(2)}), mono(2, {x(4), y(1)}), mono(-2, {x(1), y(4)})}, 4),
        };
        break;
    }
    case ModelCase::G4_45_Minus: {
        m.family.g = 4;
        m.family.m1 = 4;
        m.family.m2 = 5;
        m.side = FocalSide::Minus;
        m.dim = 13;
        m.coordinates = {"y12", "x13", "y13", "x14", "y14", "x15", "y15", "x23", "y23", "x24", "y24", "x25", "y25"};
        enum { y12, x13, y13, x14, y14, x15, y15, x23, y23, x24, y24, x25, y25 };
        // Stored as printed, including the -2 x14 x23 term of s3.
        m.forms = {
            {mono(-2, {x14, x23}), mono(2, {x13, x24}), mono(2, {y14, y23}), mono(-2, {y13, y24})},
            {mono(-2, {x15, x23}), mono(2, {x13, x25}), mono(2, {y15, y23}), mono(-2, {y13, y25})},
            {mono(-2, {x15, x24}), mono(2, {x14, x25}), mono(2, {y15, y24}), mono(-2, {y14, y25})},
            {mono(-2, {x14, x23}), mono(2, {x13, y24}), mono(-2, {y14, x23}), mono(2, {y13, x24})},
            {mono(-2, {x15, y23}), mono(2, {x13, y25}), mono(-2, {y15, x23}), mono(2, {y13, x25})},
            {mono(-2, {x15, y24}), mono(2, {x14, y25}), mono(-2, {y15, x24}), mono(2, {y14, x25})},
        };
        break;
    }
    }
    for (const Polynomial& p : m.forms) m.shape_ops.push_back(polarize(p, m.dim));
    return m;
}

ModelWitnessData model_witness_data(ModelCase c) {
    ModelWitnessData w;
    const HomogeneousFocalModel m = load_model(c);
    w.X = Vec::Zero(m.dim);
    w.Y = Vec::Zero(m.dim);
    const double h = 1.0 / kSqrt2;
    switch (c) {
    case ModelCase::G6M1Plus:
    case ModelCase::G6M1Minus:
    case ModelCase::G6M2Plus:
    case ModelCase::G6M2Minus:
        w.X(0) = 1.0;
        w.Y(m.dim - 1) = 1.0;
        w.expected = (c == ModelCase::G6M1Plus || c == ModelCase::G6M2Plus) ? -5.0 : -2.0;
        break;
    case ModelCase::G4_22_Plus:
        w.X(2) = w.X(3) = h;
        w.Y(0) = w.Y(1) = h;
        w.expected = -1.0;
        break;
    case ModelCase::G4_45_Plus:
        w.X(0) = 1.0;
        w.Y(5) = 1.0;
        w.expected = -1.0;
        break;
    case ModelCase::G4_45_Minus: {
        const double t = 1.0 / kSqrt3;
        w.X(3) = w.X(7) = h;           // x14, x23
        w.Y(1) = w.Y(9) = w.Y(10) = t; // x13, x24, y24
        w.expected = -1.0 / 3.0;
        w.comparison = Comparison::AtMost;
        break;
    }
    }
    return w;
}

CurvatureCertificate model_witness(ModelCase c) {
    const HomogeneousFocalModel m = load_model(c);
    const ModelWitnessData w = model_witness_data(c);
    return certify_pair(std::string("model ") + to_string(c), m.shape_ops, w.X, w.Y, w.expected, w.comparison, 1e-9);
}

}  // namespace fkm
