#include "fkm/clifford.hpp"

#include "fkm/errors.hpp"
#include "fkm/octonion.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace fkm {

int delta_of_m(int m) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "delta(m) needs m >= 1, got " + std::to_string(m));
    static constexpr int base[8] = {1, 2, 4, 4, 8, 8, 8, 8};
    int factor = 1;
    while (m > 8) {
        m -= 8;
        factor *= 16;
    }
    return factor * base[m - 1];
}

const char* to_string(SystemVariant v) {
    switch (v) {
    case SystemVariant::Standard: return "standard";
    case SystemVariant::RightMultiplication: return "right-multiplication";
    case SystemVariant::Octonion87Definite: return "octonion-87-definite";
    case SystemVariant::Octonion96: return "octonion-96";
    case SystemVariant::Derived: return "derived";
    }
    return "unknown";
}

namespace {

IntMat kron(const IntMat& a, const IntMat& b) {
    IntMat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

IntMat block_diag(const std::vector<IntMat>& blocks) {
    Eigen::Index n = 0;
    for (const auto& b : blocks) n += b.rows();
    IntMat r = IntMat::Zero(n, n);
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
        r.block(at, at, b.rows(), b.cols()) = b;
        at += b.rows();
    }
    return r;
}

IntMat identity(Eigen::Index n) { return IntMat::Identity(n, n); }

// P_0, P_1, P_{1+a} in block form over R^l + R^l.
std::vector<IntMat> block_form(const std::vector<IntMat>& E, int l) {
    std::vector<IntMat> P;
    const IntMat I = identity(l);
    const IntMat Z = IntMat::Zero(l, l);
    IntMat p0(2 * l, 2 * l), p1(2 * l, 2 * l);
    p0 << I, Z, Z, -I;
    p1 << Z, I, I, Z;
    P.push_back(p0);
    P.push_back(p1);
    for (const IntMat& e : E) {
        IntMat p(2 * l, 2 * l);
        p << Z, e, -e, Z;
        P.push_back(p);
    }
    return P;
}

IntMat product(const std::vector<IntMat>& P) {
    IntMat r = identity(P.front().rows());
    for (const auto& p : P) r = r * p;
    return r;
}

IntMat multiplication_matrix(bool right, int index, bool octonion) {
    if (octonion) return right ? octonion_right_matrix(index) : octonion_left_matrix(index);
    if (!right) return quaternion_left_matrix(index);
    // z -> z q for the quaternion unit q
    IntMat m(4, 4);
    for (int col = 0; col < 4; ++col) {
        const Quaternion r = Quaternion::unit(col) * Quaternion::unit(index);
        for (int row = 0; row < 4; ++row) m(row, col) = static_cast<std::int64_t>(std::lround(r.c[static_cast<std::size_t>(row)]));
    }
    return m;
}

std::vector<IntMat> base_generators(int m, bool right) {
    std::vector<IntMat> E;
    if (m == 1) return E;
    if (m == 2) {
        IntMat j(2, 2);
        j << 0, -1, 1, 0;
        E.push_back(j);
        return E;
    }
    if (m <= 4) {
        for (int a = 1; a < m; ++a) E.push_back(multiplication_matrix(right, a, false));
        return E;
    }
    if (m <= 8) {
        for (int a = 1; a < m; ++a) E.push_back(multiplication_matrix(right, a, true));
        return E;
    }
    if (m == 9) {
        // E_a (u1, u2) = (e_a u1, -e_a u2), E_8 (u1, u2) = (u2, -u1)
        const IntMat Z = IntMat::Zero(8, 8);
        for (int a = 1; a <= 7; ++a) {
            const IntMat L = multiplication_matrix(right, a, true);
            E.push_back(block_diag({L, IntMat(-L)}));
        }
        IntMat j(16, 16);
        j << Z, identity(8), -identity(8), Z;
        E.push_back(j);
        return E;
    }
    // Bott periodicity: tensor the m-8 generators with the m = 9 set.
    const std::vector<IntMat> G = base_generators(9, right);
    const std::vector<IntMat> F = base_generators(m - 8, right);
    IntMat omega = identity(16);
    for (const auto& g : G) omega = omega * g;
    const Eigen::Index inner = delta_of_m(m - 8);
    for (const auto& g : G) E.push_back(kron(g, identity(inner)));
    for (const auto& f : F) E.push_back(kron(omega, f));
    return E;
}

}  // namespace

SkewGeneratorSet irreducible_skew_generators(int m, SystemVariant recipe) {
    const int d = delta_of_m(m);
    SkewGeneratorSet set{m, d, base_generators(m, recipe == SystemVariant::RightMultiplication)};
    if (m % 4 == 0) {
        const std::int64_t tr = product(block_form(set.E, d)).trace();
        if (tr < 0) set.E.back() = -set.E.back();
    }
    return set;
}

std::vector<int> signs_for_q(int k, int q) {
    if (k < 1 || q > k || q < -k || (k - q) % 2 != 0)
        throw Error(ErrorKind::InvalidArgument, "no sign pattern with k=" + std::to_string(k) + " and q=" + std::to_string(q));
    const int plus = (k + q) / 2;
    std::vector<int> s(static_cast<std::size_t>(k), -1);
    for (int i = 0; i < plus; ++i) s[static_cast<std::size_t>(i)] = 1;
    return s;
}

CliffordSystem build_system(int m, int k, const std::vector<int>& signs, SystemVariant variant) {
    if (m < 1 || k < 1) throw Error(ErrorKind::InvalidArgument, "m and k must be positive");
    if (static_cast<int>(signs.size()) != k) throw Error(ErrorKind::InvalidArgument, "sign pattern length must equal k");
    for (int s : signs)
        if (s != 1 && s != -1) throw Error(ErrorKind::InvalidArgument, "signs must be +1 or -1");
    const int l = k * delta_of_m(m);
    if (l - m - 1 < 1)
        throw Error(ErrorKind::InvalidFamily, "m2 = l - m - 1 = " + std::to_string(l - m - 1) + " for (m, k) = (" +
                                                  std::to_string(m) + ", " + std::to_string(k) + ")");
    bool constant = true;
    for (int s : signs) constant = constant && s == signs.front();
    if (!constant && m % 4 != 0) throw Error(ErrorKind::InvalidVariant, "mixed orientations need m = 0 (mod 4)");

    switch (variant) {
    case SystemVariant::Octonion87Definite:
        if (m != 8 || k != 2 || !constant)
            throw Error(ErrorKind::InvalidVariant, "octonion (8,7) definite recipe needs m = 8, k = 2, equal signs");
        break;
    case SystemVariant::Octonion96:
        if (m != 9 || k != 1) throw Error(ErrorKind::InvalidVariant, "octonion (9,6) recipe needs m = 9, k = 1");
        break;
    case SystemVariant::Derived:
        throw Error(ErrorKind::InvalidVariant, "derived systems come from drop_generator");
    default: break;
    }

    // The two octonion recipes coincide with the standard left-multiplication layout.
    const SkewGeneratorSet base = irreducible_skew_generators(m, variant);
    SkewGeneratorSet skew{m, l, {}};
    for (const IntMat& e : base.E) {
        std::vector<IntMat> blocks;
        for (int s : signs) blocks.push_back(s * e);
        skew.E.push_back(block_diag(blocks));
    }

    CliffordSystem sys;
    sys.m = m;
    sys.k = k;
    sys.l = l;
    sys.signs = signs;
    sys.P = block_form(skew.E, l);
    sys.skew = std::move(skew);
    sys.variant = variant;
    sys.q = trace_invariant(sys);
    int expected = 0;
    if (m % 4 == 0)
        for (int s : signs) expected += s;
    if (sys.q != expected) throw Error(ErrorKind::InternalInconsistency, "trace invariant disagrees with sign pattern");
    return sys;
}

std::vector<Mat> CliffordSystem::real() const {
    std::vector<Mat> out;
    out.reserve(P.size());
    for (const auto& p : P) out.push_back(to_real(p));
    return out;
}

std::string CliffordSystem::label() const {
    std::ostringstream s;
    s << "(" << m1() << "," << m2() << ")";
    if (m % 4 == 0) s << (definite() ? " definite" : " indefinite") << " q=" << q;
    s << " [m=" << m << " k=" << k << " l=" << l << " " << to_string(variant) << "]";
    return s.str();
}

RelationReport verify_clifford_relations(const CliffordSystem& sys) {
    RelationReport report;
    const Eigen::Index n = sys.dim();
    const IntMat two_id = 2 * identity(n);
    std::int64_t worst = 0;
    for (std::size_t a = 0; a < sys.P.size(); ++a) {
        if (sys.P[a] != sys.P[a].transpose()) {
            report.symmetric = false;
            if (!report.violated) report.violated = {static_cast<int>(a), static_cast<int>(a)};
        }
        for (std::size_t b = a; b < sys.P.size(); ++b) {
            IntMat r = sys.P[a] * sys.P[b] + sys.P[b] * sys.P[a];
            if (a == b) r -= two_id;
            const std::int64_t dev = r.cwiseAbs().maxCoeff();
            if (dev > worst) {
                worst = dev;
                report.violated = {static_cast<int>(a), static_cast<int>(b)};
            }
        }
    }
    report.max_deviation = static_cast<double>(worst);
    report.pass = worst == 0 && report.symmetric;
    if (report.pass) report.violated.reset();
    return report;
}

RelationReport verify_clifford_relations(const std::vector<Mat>& P, double tol) {
    RelationReport report;
    if (P.empty()) return report;
    const Eigen::Index n = P.front().rows();
    double worst = 0.0;
    for (std::size_t a = 0; a < P.size(); ++a) {
        if (P[a].rows() != n || P[a].cols() != n) throw Error(ErrorKind::DimensionMismatch, "generators differ in size");
        const double asym = (P[a] - P[a].transpose()).cwiseAbs().maxCoeff();
        if (asym > tol) report.symmetric = false;
        for (std::size_t b = a; b < P.size(); ++b) {
            Mat r = P[a] * P[b] + P[b] * P[a];
            if (a == b) r -= 2.0 * Mat::Identity(n, n);
            const double dev = std::max(r.cwiseAbs().maxCoeff(), a == b ? asym : 0.0);
            if (dev > worst) {
                worst = dev;
                report.violated = {static_cast<int>(a), static_cast<int>(b)};
            }
        }
    }
    report.max_deviation = worst;
    report.pass = worst <= tol && report.symmetric;
    if (report.pass) report.violated.reset();
    return report;
}

IntMat generator_product(const CliffordSystem& sys) { return product(sys.P); }

int trace_invariant(const CliffordSystem& sys) {
    const std::int64_t tr = generator_product(sys).trace();
    const std::int64_t denom = 2 * static_cast<std::int64_t>(delta_of_m(sys.m));
    if (tr % denom != 0)
        throw Error(ErrorKind::InternalInconsistency,
                    "trace " + std::to_string(tr) + " is not a multiple of 2 delta(m) = " + std::to_string(denom));
    return static_cast<int>(tr / denom);
}

CliffordSystem drop_generator(const CliffordSystem& sys, int index) {
    if (index < 0 || index > sys.m)
        throw Error(ErrorKind::InvalidArgument, "generator index " + std::to_string(index) + " out of range");
    const int m = sys.m - 1;
    if (m < 1) throw Error(ErrorKind::InvalidFamily, "cannot drop the only remaining generator pair");
    if (sys.l - m - 1 < 1) throw Error(ErrorKind::InvalidFamily, "dropping leaves m2 < 1");
    const int d = delta_of_m(m);
    if (sys.l % d != 0) throw Error(ErrorKind::InternalInconsistency, "l is not a multiple of delta(m - 1)");

    CliffordSystem out;
    out.m = m;
    out.l = sys.l;
    out.k = sys.l / d;
    out.variant = SystemVariant::Derived;
    for (int a = 0; a <= sys.m; ++a)
        if (a != index) out.P.push_back(sys.P[static_cast<std::size_t>(a)]);
    out.q = trace_invariant(out);
    return out;
}

void write_system(std::ostream& out, const CliffordSystem& sys) {
    out << sys.m << ' ' << sys.l << ' ' << sys.k << ' ' << sys.q << '\n';
    for (const IntMat& p : sys.P) {
        for (Eigen::Index i = 0; i < p.rows(); ++i) {
            for (Eigen::Index j = 0; j < p.cols(); ++j) out << (j ? " " : "") << p(i, j);
            out << '\n';
        }
    }
}

CliffordSystem read_system(std::istream& in) {
    CliffordSystem sys;
    if (!(in >> sys.m >> sys.l >> sys.k >> sys.q)) throw Error(ErrorKind::Io, "missing header line 'm l k q'");
    if (sys.m < 1 || sys.l < 1) throw Error(ErrorKind::Io, "invalid header values");
    const int n = 2 * sys.l;
    for (int a = 0; a <= sys.m; ++a) {
        IntMat p(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!(in >> p(i, j))) throw Error(ErrorKind::Io, "truncated matrix block " + std::to_string(a));
        sys.P.push_back(std::move(p));
    }
    sys.variant = SystemVariant::Derived;
    if (!verify_clifford_relations(sys).pass) throw Error(ErrorKind::Io, "matrices do not form a symmetric Clifford system");
    if (trace_invariant(sys) != sys.q) throw Error(ErrorKind::Io, "header q disagrees with the trace invariant");
    return sys;
}

}  // namespace fkm
