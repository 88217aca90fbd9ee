#include "fkm/focal.hpp"

#include "fkm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fkm {

namespace {

constexpr double kMembershipTol = 1e-9;

Vec moments(const std::vector<Mat>& P, const Vec& x) {
    Vec c(static_cast<Eigen::Index>(P.size()));
    for (std::size_t a = 0; a < P.size(); ++a) c(static_cast<Eigen::Index>(a)) = x.dot(P[a] * x);
    return c;
}

Mat combine(const std::vector<Mat>& P, const Vec& c) {
    Mat q = Mat::Zero(P.front().rows(), P.front().cols());
    for (std::size_t a = 0; a < P.size(); ++a) q += c(static_cast<Eigen::Index>(a)) * P[a];
    return q;
}

std::vector<Vec> columns(const Mat& m) {
    std::vector<Vec> out;
    out.reserve(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.emplace_back(m.col(j));
    return out;
}

// Orthonormal basis of the +1 eigenspace of a symmetric involution.
std::vector<Vec> plus_eigenspace(const Mat& involution) {
    const Eigen::Index n = involution.rows();
    const Mat proj = 0.5 * (Mat::Identity(n, n) + involution);
    std::vector<Vec> basis;
    extend_orthonormal(basis, columns(proj));
    return basis;
}

Vec constraints(const std::vector<Mat>& P, const Vec& y) {
    Vec g(static_cast<Eigen::Index>(P.size()) + 1);
    g.head(static_cast<Eigen::Index>(P.size())) = moments(P, y);
    g(static_cast<Eigen::Index>(P.size())) = 0.5 * (y.squaredNorm() - 1.0);
    return g;
}

}  // namespace

Vec FocalFrame::coefficients(const Vec& v) const {
    Vec c(tangent_dim());
    for (int i = 0; i < tangent_dim(); ++i) c(i) = tangent[static_cast<std::size_t>(i)].dot(v);
    return c;
}

Vec FocalFrame::ambient(const Vec& coeffs) const {
    Vec v = Vec::Zero(x.size());
    for (int i = 0; i < tangent_dim(); ++i) v += coeffs(i) * tangent[static_cast<std::size_t>(i)];
    return v;
}

double FocalFrame::tangency_residual(const Vec& v) const { return (v - ambient(coefficients(v))).norm(); }

double FocalFrame::gram_deviation() const {
    std::vector<Vec> all{x};
    all.insert(all.end(), tangent.begin(), tangent.end());
    all.insert(all.end(), normal.begin(), normal.end());
    return fkm::gram_deviation(all);
}

std::vector<EigenCluster> expected_focal_spectrum(FocalSide side, int m1, int m2) {
    const int outer = side == FocalSide::Plus ? m2 : m1;
    const int middle = side == FocalSide::Plus ? m1 : m2;
    return {{-1.0, outer}, {0.0, middle}, {1.0, outer}};
}

bool spectrum_matches(const Mat& a, const std::vector<EigenCluster>& expected, double tol) {
    const auto got = cluster_eigenvalues(symmetric_eigenvalues(a));
    if (got.size() != expected.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (got[i].multiplicity != expected[i].multiplicity || std::abs(got[i].value - expected[i].value) > tol)
            return false;
    return true;
}

double plus_residual(const std::vector<Mat>& P, const Vec& x) {
    return std::max(moments(P, x).cwiseAbs().maxCoeff(), std::abs(x.norm() - 1.0));
}

double minus_residual(const std::vector<Mat>& P, const Vec& x) {
    return std::max(std::abs(moments(P, x).norm() - 1.0), std::abs(x.norm() - 1.0));
}

std::optional<Vec> project_to_plus(const std::vector<Mat>& P, const Vec& start, int max_iterations, double tol) {
    const Eigen::Index rows = static_cast<Eigen::Index>(P.size()) + 1;
    Vec y = start;
    Vec g = constraints(P, y);
    for (int it = 0; it < max_iterations; ++it) {
        if (g.cwiseAbs().maxCoeff() <= tol) return y;
        Mat J(rows, y.size());
        for (std::size_t a = 0; a < P.size(); ++a) J.row(static_cast<Eigen::Index>(a)) = 2.0 * (P[a] * y).transpose();
        J.row(rows - 1) = y.transpose();
        const Mat JJt = J * J.transpose();
        Eigen::LDLT<Mat> ldlt(JJt);
        if (ldlt.info() != Eigen::Success) return std::nullopt;
        const Vec step = -J.transpose() * ldlt.solve(g);
        const double merit = g.norm();
        double t = 1.0;
        bool accepted = false;
        while (t >= 1.0 / 1024.0) {
            const Vec trial = y + t * step;
            const Vec gt = constraints(P, trial);
            if (gt.norm() < merit) {
                y = trial;
                g = gt;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) return g.cwiseAbs().maxCoeff() <= tol ? std::optional<Vec>(y) : std::nullopt;
    }
    if (g.cwiseAbs().maxCoeff() <= tol) return y;
    return std::nullopt;
}

Vec retract_to_minus(const std::vector<Mat>& P, const Vec& y) {
    Vec c = moments(P, y);
    const double cn = c.norm();
    if (cn <= 0.0) throw Error(ErrorKind::InvalidArgument, "retraction onto M- undefined where all moments vanish");
    c /= cn;
    const Vec z = y + combine(P, c) * y;
    return z.normalized();
}

Vec sample_focal_point(const CliffordSystem& sys, FocalSide side, std::uint64_t seed) {
    const std::vector<Mat> P = sys.real();
    const int n = sys.dim();
    if (side == FocalSide::Plus) {
        for (int attempt = 0; attempt < 10; ++attempt) {
            std::mt19937_64 rng(derive_seed(seed, "focal-plus", static_cast<std::uint64_t>(attempt)));
            const auto y = project_to_plus(P, random_unit_vector(n, rng));
            if (y && plus_residual(P, *y) <= 1e-10) return *y;
        }
        throw Error(ErrorKind::SamplingFailure, "Newton projection onto M+ failed after 10 attempts");
    }
    std::mt19937_64 rng(derive_seed(seed, "focal-minus", 0));
    for (int attempt = 0; attempt < 10; ++attempt) {
        const Vec c = random_unit_vector(sys.m + 1, rng);
        const Mat Q = combine(P, c);
        const Vec v = random_unit_vector(n, rng);
        const Vec z = v + Q * v;
        if (z.norm() > 1e-3) return z.normalized();
    }
    throw Error(ErrorKind::SamplingFailure, "could not draw a +1 eigenvector for M-");
}

FocalFrame frame_at(const CliffordSystem& sys, FocalSide side, const Vec& x) {
    if (x.size() != sys.dim()) throw Error(ErrorKind::DimensionMismatch, "point dimension differs from 2l");
    const std::vector<Mat> P = sys.real();
    const int n = sys.dim();
    const int m = sys.m;
    FocalFrame f;
    f.side = side;
    f.x = x;

    if (side == FocalSide::Plus) {
        const double r = plus_residual(P, x);
        if (r > kMembershipTol) throw Error(ErrorKind::MembershipFailure, "point is not on M+ (residual " + std::to_string(r) + ")");
        for (const Mat& p : P) f.normal.push_back(p * x);
        std::vector<Vec> span{x};
        span.insert(span.end(), f.normal.begin(), f.normal.end());
        f.tangent = orthonormal_complement(span, n);
        if (f.tangent_dim() != 2 * sys.l - m - 2)
            throw Error(ErrorKind::InternalInconsistency, "unexpected M+ tangent dimension");
        const Mat T = f.tangent_matrix();
        for (const Mat& p : P) f.shape_ops.push_back(-(T.transpose() * p * T));
        return f;
    }

    Vec c = moments(P, x);
    const double cn = c.norm();
    if (std::abs(x.norm() - 1.0) > kMembershipTol || std::abs(cn - 1.0) > 1e-8)
        throw Error(ErrorKind::MembershipFailure, "point is not on M- (|c| = " + std::to_string(cn) + ")");
    c /= cn;
    f.Q.push_back(combine(P, c));
    for (const Vec& d : orthonormal_complement(std::vector<Vec>{c}, m + 1)) f.Q.push_back(combine(P, d));

    std::vector<Vec> qx;
    for (int i = 1; i <= m; ++i) qx.push_back(f.Q[static_cast<std::size_t>(i)] * x);
    const Mat I = Mat::Identity(n, n);

    // Normal space: (-1)-eigenspace of Q_0 orthogonal to Q_i x.
    std::vector<Vec> minus_space = qx;
    extend_orthonormal(minus_space, columns(0.5 * (I - f.Q.front())), 1e-8, sys.l);
    f.normal.assign(minus_space.begin() + m, minus_space.end());

    // Tangent space: span{Q_i x} plus the (+1)-eigenspace of Q_0 orthogonal to x.
    std::vector<Vec> plus_space{x};
    extend_orthonormal(plus_space, columns(0.5 * (I + f.Q.front())), 1e-8, sys.l);
    f.tangent = qx;
    f.tangent.insert(f.tangent.end(), plus_space.begin() + 1, plus_space.end());
    if (static_cast<int>(f.normal.size()) != sys.l - m || f.tangent_dim() != sys.l + m - 1)
        throw Error(ErrorKind::InternalInconsistency, "unexpected M- frame dimensions");

    // A_eta X = sum_i <X, Q_i x> Q_i eta + <X, Q_i eta> Q_i x, in tangent coordinates.
    const Mat T = f.tangent_matrix();
    const Mat U = stack_columns(qx);
    const Mat TU = T.transpose() * U;
    for (const Vec& eta : f.normal) {
        Mat W(n, m);
        for (int i = 1; i <= m; ++i) W.col(i - 1) = f.Q[static_cast<std::size_t>(i)] * eta;
        const Mat TW = T.transpose() * W;
        f.shape_ops.push_back(TU * TW.transpose() + TW * TU.transpose());
    }
    return f;
}

double second_fundamental_form_defect(const CliffordSystem& sys, const FocalFrame& frame, double h, int max_pairs) {
    const std::vector<Mat> P = sys.real();
    auto retract = [&](const Vec& y) -> Vec {
        if (frame.side == FocalSide::Minus) return retract_to_minus(P, y);
        const auto z = project_to_plus(P, y, 100, 1e-15);
        if (!z) throw Error(ErrorKind::SamplingFailure, "projection onto M+ failed in the curvature check");
        return *z;
    };
    const int d = frame.tangent_dim();
    double worst = 0.0;
    int pairs = 0;
    for (int i = 0; i < d && pairs < max_pairs; ++i) {
        for (int j = i; j < d && pairs < max_pairs; j += std::max(1, d / 3)) {
            Vec coeff = Vec::Zero(d);
            coeff(i) += 1.0;
            if (j != i) coeff(j) += 1.0;
            coeff.normalize();
            const Vec t = frame.ambient(coeff);
            const Vec accel = (retract(frame.x + h * t) - 2.0 * frame.x + retract(frame.x - h * t)) / (h * h);
            for (std::size_t b = 0; b < frame.normal.size(); ++b) {
                const double geometric = accel.dot(frame.normal[b]);
                const double algebraic = coeff.dot(frame.shape_ops[b] * coeff);
                worst = std::max(worst, std::abs(geometric - algebraic));
            }
            ++pairs;
        }
    }
    return worst;
}

double ambient_plus_curvature(const std::vector<Mat>& P, const Vec& X, const Vec& Y) {
    double K = 1.0;
    for (const Mat& p : P) {
        const Vec px = p * X;
        K += X.dot(px) * Y.dot(p * Y) - std::pow(Y.dot(px), 2);
    }
    return K;
}

CurvatureCertificate frame_witness(std::string source, const FocalFrame& frame, const Vec& X, const Vec& Y,
                                   double expected, Comparison comparison, double tol) {
    CurvatureCertificate c =
        certify_pair(std::move(source), frame.shape_ops, frame.coefficients(X), frame.coefficients(Y), expected,
                     comparison, tol);
    if (frame.tangency_residual(X) > 1e-9 || frame.tangency_residual(Y) > 1e-9) c.status = CertificateStatus::Failed;
    return c;
}

CurvatureCertificate orthogonal_slot_witness(const CliffordSystem& sys, std::uint64_t seed) {
    if (sys.l <= 2 * sys.m) throw Error(ErrorKind::NotApplicable, "needs l > 2m, got l = " + std::to_string(sys.l));
    if (!sys.skew) throw Error(ErrorKind::NotApplicable, "needs a system in (u, v) block form");
    const int l = sys.l;
    const Vec z = sample_focal_point(sys, FocalSide::Plus, seed);
    const Vec z1 = z.head(l);
    const Vec z2 = z.tail(l);
    std::vector<Vec> avoid{z1, z2};
    for (const IntMat& e : sys.skew->E) {
        const Mat E = to_real(e);
        avoid.push_back(E * z1);
        avoid.push_back(E * z2);
    }
    std::vector<Vec> basis;
    extend_orthonormal(basis, avoid);
    const std::vector<Vec> free = orthonormal_complement(basis, l);
    if (free.empty()) throw Error(ErrorKind::InternalInconsistency, "no vector orthogonal to the E_a z_i");
    Vec X = Vec::Zero(2 * l);
    Vec Y = Vec::Zero(2 * l);
    X.head(l) = free.front();
    Y.tail(l) = free.front();
    return frame_witness("orthogonal-slot " + sys.label(), frame_at(sys, FocalSide::Plus, z), X, Y, -1.0, Comparison::Equal,
                         1e-9);
}

const char* to_string(RegistryCase c) {
    switch (c) {
    case RegistryCase::Indefinite43: return "indefinite-4-3";
    case RegistryCase::Indefinite43FromPair52: return "indefinite-4-3-from-5-2";
    case RegistryCase::Pair52: return "5-2";
    case RegistryCase::Definite87: return "definite-8-7";
    case RegistryCase::Pair96: return "9-6";
    case RegistryCase::Indefinite87: return "indefinite-8-7";
    }
    return "unknown";
}

std::vector<RegistryCase> all_registry_cases() {
    return {RegistryCase::Indefinite43, RegistryCase::Indefinite43FromPair52, RegistryCase::Pair52,
            RegistryCase::Definite87,   RegistryCase::Pair96,                 RegistryCase::Indefinite87};
}

namespace {

Vec apply(const std::vector<Mat>& P, std::initializer_list<int> indices, const Vec& x) {
    Vec v = x;
    std::vector<int> order(indices);
    for (auto it = order.rbegin(); it != order.rend(); ++it) v = P[static_cast<std::size_t>(*it)] * v;
    return v;
}

Mat product_of(const std::vector<Mat>& P, std::initializer_list<int> indices) {
    Mat r = Mat::Identity(P.front().rows(), P.front().cols());
    for (int i : indices) r = r * P[static_cast<std::size_t>(i)];
    return r;
}

// Unit vector in span(basis) that is an eigenvector of the restriction of `op` with eigenvalue `target`.
Vec restricted_eigenvector(const std::vector<Vec>& basis, const Mat& op, double target) {
    const Mat B = stack_columns(basis);
    Eigen::SelfAdjointEigenSolver<Mat> es(B.transpose() * op * B);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (std::abs(es.eigenvalues()(i) - target) < 1e-8) return (B * es.eigenvectors().col(i)).normalized();
    throw Error(ErrorKind::InternalInconsistency, "restricted operator lacks the requested eigenvalue");
}

Vec octonion_slots(int l, std::initializer_list<std::pair<int, double>> entries) {
    Vec v = Vec::Zero(2 * l);
    for (const auto& [index, value] : entries) v(index) = value;
    return v;
}

// Common eigenvector of P0P1P2P3 (+1) and P0P1P4P5 (+1) for the (5,2) system.
Vec pair52_point(const std::vector<Mat>& P) {
    return restricted_eigenvector(plus_eigenspace(product_of(P, {0, 1, 4, 5})), product_of(P, {0, 1, 2, 3}), 1.0);
}

}  // namespace

WitnessData registry_witness_data(RegistryCase c, SystemVariant recipe) {
    const bool explicit_coordinates =
        c == RegistryCase::Definite87 || c == RegistryCase::Pair96 || c == RegistryCase::Indefinite87;
    if (explicit_coordinates && recipe != SystemVariant::Standard)
        throw Error(ErrorKind::InvalidVariant, "octonion witnesses are written for the standard recipe");
    if (recipe == SystemVariant::Derived || recipe == SystemVariant::Octonion87Definite ||
        recipe == SystemVariant::Octonion96)
        throw Error(ErrorKind::InvalidVariant, "registry recipe must be standard or right-multiplication");

    WitnessData w;
    w.label = to_string(c);
    const double s2 = std::sqrt(2.0);
    switch (c) {
    case RegistryCase::Indefinite43: {
        w.sys = build_system(4, 2, {1, -1}, recipe);
        const auto P = w.sys.real();
        const std::vector<Vec> E = plus_eigenspace(product_of(P, {0, 1, 2, 3}));
        const Vec a = restricted_eigenvector(E, P[4], 1.0);
        const Vec b = restricted_eigenvector(E, P[4], -1.0);
        w.x = (a + b) / s2;
        w.X = (apply(P, {0, 1, 4}, w.x) + apply(P, {1, 4}, w.x)) / s2;
        w.Y = (apply(P, {0, 2, 4}, w.x) - apply(P, {2, 4}, w.x)) / s2;
        break;
    }
    case RegistryCase::Pair52: {
        w.sys = build_system(5, 1, {1}, recipe);
        const auto P = w.sys.real();
        w.x = pair52_point(P);
        w.X = (apply(P, {0, 2, 4}, w.x) - apply(P, {2, 4}, w.x)) / s2;
        w.Y = (apply(P, {0, 2, 5}, w.x) + apply(P, {2, 5}, w.x)) / s2;
        break;
    }
    case RegistryCase::Indefinite43FromPair52: {
        const CliffordSystem big = build_system(5, 1, {1}, recipe);
        w.x = pair52_point(big.real());
        w.sys = drop_generator(big, 5);
        const auto Q = w.sys.real();
        w.X = (apply(Q, {0, 1, 4}, w.x) + apply(Q, {1, 4}, w.x)) / s2;
        w.Y = (apply(Q, {0, 2, 4}, w.x) - apply(Q, {2, 4}, w.x)) / s2;
        break;
    }
    case RegistryCase::Definite87: {
        // R^32 = O^4 with slots u1 = 0..7, u2 = 8..15, v1 = 16..23, v2 = 24..31.
        w.sys = build_system(8, 2, {1, 1}, SystemVariant::Octonion87Definite);
        w.x = octonion_slots(16, {{0, 1.0 / s2}, {24, 1.0 / s2}});
        w.X = octonion_slots(16, {{2, 0.5}, {8 + 3, 0.5}, {16 + 3, 0.5}, {24 + 2, -0.5}});
        w.Y = octonion_slots(16, {{7, -0.5}, {8 + 6, 0.5}, {16 + 6, 0.5}, {24 + 7, 0.5}});
        break;
    }
    case RegistryCase::Pair96:
    case RegistryCase::Indefinite87: {
        const CliffordSystem full = build_system(9, 1, {1}, SystemVariant::Octonion96);
        w.sys = c == RegistryCase::Pair96 ? full : drop_generator(full, 1);
        w.x = octonion_slots(16, {{0, 1.0 / s2}, {24 + 1, 1.0 / s2}});
        w.X = octonion_slots(16, {{2, 1.0}});
        w.Y = octonion_slots(16, {{24 + 2, 1.0}});
        break;
    }
    }
    return w;
}

CurvatureCertificate registry_witness(RegistryCase c, SystemVariant recipe) {
    const WitnessData w = registry_witness_data(c, recipe);
    return frame_witness(std::string("registry ") + w.label, frame_at(w.sys, FocalSide::Plus, w.x), w.X, w.Y,
                         w.expected, Comparison::Equal, 1e-9);
}

CurvatureCertificate minus_witness_at(const FocalFrame& frame, const std::string& source) {
    if (frame.side != FocalSide::Minus) throw Error(ErrorKind::NotApplicable, "M- witness needs an M- frame");
    const int m = static_cast<int>(frame.Q.size()) - 1;
    if (m < 2) throw Error(ErrorKind::NotApplicable, "M- witness needs m >= 2");
    const double s2 = std::sqrt(2.0);
    CurvatureCertificate best;
    best.K = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            if (i == j) continue;
            const Mat& Qi = frame.Q[static_cast<std::size_t>(i)];
            const Mat& Qj = frame.Q[static_cast<std::size_t>(j)];
            for (const Vec& eta : frame.normal) {
                const Vec X = (Qi * frame.x + Qi * eta) / s2;
                const Vec Y = (Qj * frame.x - Qj * eta) / s2;
                CurvatureCertificate c = frame_witness(source, frame, X, Y, -1e-6, Comparison::AtMost, 0.0);
                if (c.K < best.K) best = std::move(c);
            }
            if (best.K <= -1e-6) return best;
        }
    }
    return best;
}

CurvatureCertificate minus_witness(const CliffordSystem& sys, std::uint64_t seed) {
    const Vec x = sample_focal_point(sys, FocalSide::Minus, seed);
    return minus_witness_at(frame_at(sys, FocalSide::Minus, x), "minus " + sys.label());
}

}  // namespace fkm
