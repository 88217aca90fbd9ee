#include "fkm/curvature.hpp"

#include "fkm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fkm {

const char* to_string(CertificateKind kind) {
    switch (kind) {
    case CertificateKind::Witness: return "witness";
    case CertificateKind::ScanMin: return "scan-min";
    case CertificateKind::Spectrum: return "spectrum";
    }
    return "unknown";
}

const char* to_string(CertificateStatus status) {
    return status == CertificateStatus::Verified ? "verified" : "failed";
}

const char* to_string(Comparison c) {
    switch (c) {
    case Comparison::Equal: return "equal";
    case Comparison::AtMost: return "at-most";
    case Comparison::AtLeast: return "at-least";
    }
    return "unknown";
}

const char* to_string(CurvatureSign sign) {
    switch (sign) {
    case CurvatureSign::NonNegative: return "non-negative";
    case CurvatureSign::NegativeSomewhere: return "negative-somewhere";
    case CurvatureSign::Positive: return "positive";
    }
    return "unknown";
}

namespace {

void check_ops(const std::vector<Mat>& ops, Eigen::Index n) {
    for (const Mat& a : ops)
        if (a.rows() != n || a.cols() != n)
            throw Error(ErrorKind::DimensionMismatch, "shape operator size differs from the tangent dimension");
}

// Stacked shape operators: rows [a*n, (a+1)*n) hold A_a.
struct Stack {
    Mat S;
    int ops = 0;
    int n = 0;

    Stack(const std::vector<Mat>& A, int dim) : ops(static_cast<int>(A.size())), n(dim) {
        S.resize(static_cast<Eigen::Index>(ops) * n, n);
        for (int a = 0; a < ops; ++a) S.middleRows(static_cast<Eigen::Index>(a) * n, n) = A[static_cast<std::size_t>(a)];
    }
};

struct PairEval {
    double K = 1.0;
    Vec gX;
    Vec gY;
};

// K for an orthonormal pair with its Euclidean gradient.
PairEval evaluate_pair(const Stack& st, const Vec& X, const Vec& Y, bool with_gradient) {
    PairEval e;
    if (st.ops == 0) {
        if (with_gradient) {
            e.gX = Vec::Zero(st.n);
            e.gY = Vec::Zero(st.n);
        }
        return e;
    }
    const Vec AX = st.S * X;
    const Vec AY = st.S * Y;
    if (with_gradient) {
        e.gX = Vec::Zero(st.n);
        e.gY = Vec::Zero(st.n);
    }
    for (int a = 0; a < st.ops; ++a) {
        const auto ax = AX.segment(static_cast<Eigen::Index>(a) * st.n, st.n);
        const auto ay = AY.segment(static_cast<Eigen::Index>(a) * st.n, st.n);
        const double xx = X.dot(ax);
        const double yy = Y.dot(ay);
        const double xy = Y.dot(ax);
        e.K += xx * yy - xy * xy;
        if (with_gradient) {
            e.gX += 2.0 * yy * ax - 2.0 * xy * ay;
            e.gY += 2.0 * xx * ay - 2.0 * xy * ax;
        }
    }
    return e;
}

// Gram-Schmidt on two columns; false when degenerate.
bool orthonormal_pair(Vec& X, Vec& Y) {
    const double nx = X.norm();
    if (nx <= 0.0) return false;
    X /= nx;
    Y -= X.dot(Y) * X;
    Y -= X.dot(Y) * X;
    const double ny = Y.norm();
    if (ny <= 1e-14) return false;
    Y /= ny;
    return true;
}

struct LocalResult {
    Vec X;
    Vec Y;
    double K = 0.0;
};

LocalResult descend(const Stack& st, Vec X, Vec Y, const ScanOptions& opt) {
    PairEval cur = evaluate_pair(st, X, Y, true);
    double step = 0.1;
    for (int it = 0; it < opt.max_iterations; ++it) {
        // Riemannian gradient on the Stiefel manifold: G - V sym(V^T G).
        const double sxx = X.dot(cur.gX);
        const double syy = Y.dot(cur.gY);
        const double sxy = 0.5 * (X.dot(cur.gY) + Y.dot(cur.gX));
        const Vec px = cur.gX - X * sxx - Y * sxy;
        const Vec py = cur.gY - X * sxy - Y * syy;
        const double gnorm = std::sqrt(px.squaredNorm() + py.squaredNorm());
        if (gnorm < 1e-13) break;
        bool improved = false;
        while (step > 1e-16) {
            Vec nx = X - step * px;
            Vec ny = Y - step * py;
            if (!orthonormal_pair(nx, ny)) {
                step *= 0.5;
                continue;
            }
            PairEval next = evaluate_pair(st, nx, ny, true);
            if (next.K < cur.K) {
                const double gain = cur.K - next.K;
                X = std::move(nx);
                Y = std::move(ny);
                cur = std::move(next);
                step *= 2.0;
                improved = true;
                if (gain <= opt.tol) return {X, Y, cur.K};
                break;
            }
            step *= 0.5;
        }
        if (!improved) break;
    }
    return {X, Y, cur.K};
}

}  // namespace

double sectional_curvature(const std::vector<Mat>& shape_ops, const Vec& X, const Vec& Y) {
    if (X.size() != Y.size()) throw Error(ErrorKind::DimensionMismatch, "X and Y differ in dimension");
    check_ops(shape_ops, X.size());
    const double xx = X.squaredNorm();
    const double yy = Y.squaredNorm();
    const double xy = X.dot(Y);
    if (xx <= 0.0 || yy <= 0.0 || (xx * yy - xy * xy) / (xx * yy) <= 1e-12)
        throw Error(ErrorKind::DegeneratePair, "X and Y are linearly dependent");
    Vec e1 = X;
    Vec e2 = Y;
    orthonormal_pair(e1, e2);
    double K = 1.0;
    for (const Mat& a : shape_ops) {
        const Vec ae1 = a * e1;
        K += e1.dot(ae1) * e2.dot(a * e2) - std::pow(e2.dot(ae1), 2);
    }
    return K;
}

bool compare(double value, double expected, Comparison comparison, double tol) {
    switch (comparison) {
    case Comparison::Equal: return std::abs(value - expected) <= tol;
    case Comparison::AtMost: return value <= expected + tol;
    case Comparison::AtLeast: return value >= expected - tol;
    }
    return false;
}

CurvatureCertificate certify_pair(std::string source, const std::vector<Mat>& shape_ops, const Vec& X, const Vec& Y,
                                  double expected, Comparison comparison, double tol) {
    CurvatureCertificate c;
    c.source = std::move(source);
    c.kind = CertificateKind::Witness;
    c.X = X;
    c.Y = Y;
    c.expected = expected;
    c.comparison = comparison;
    c.tolerance = tol;
    c.K = sectional_curvature(shape_ops, X, Y);
    const bool orthonormal = std::abs(X.norm() - 1.0) <= 1e-10 && std::abs(Y.norm() - 1.0) <= 1e-10 &&
                             std::abs(X.dot(Y)) <= 1e-10;
    c.status = orthonormal && compare(c.K, expected, comparison, tol) ? CertificateStatus::Verified
                                                                        : CertificateStatus::Failed;
    return c;
}

RicciForm ricci_form(const std::vector<Mat>& shape_ops, int n) {
    check_ops(shape_ops, n);
    RicciForm r;
    r.form = (n - 1) * Mat::Identity(n, n);
    double h2 = 0.0;
    for (const Mat& a : shape_ops) {
        const double t = a.trace();
        h2 += t * t;
        r.form += t * a - a * a;
    }
    r.form = 0.5 * (r.form + r.form.transpose());
    r.spectrum = symmetric_eigenvalues(r.form);
    r.mean_curvature = std::sqrt(h2);
    return r;
}

double scalar_curvature(const std::vector<Mat>& shape_ops, int n) {
    check_ops(shape_ops, n);
    double s = static_cast<double>(n) * (n - 1);
    for (const Mat& a : shape_ops) s += a.trace() * a.trace() - a.squaredNorm();
    return s;
}

Vec ricci_from_sectional(const std::vector<Mat>& shape_ops, int n) {
    Vec out = Vec::Zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) out(i) += sectional_curvature(shape_ops, Vec::Unit(n, i), Vec::Unit(n, j));
    return out;
}

CurvatureCertificate descend_from(std::string source, const std::vector<Mat>& shape_ops, const Vec& X, const Vec& Y,
                                  const ScanOptions& options) {
    const int n = static_cast<int>(X.size());
    check_ops(shape_ops, n);
    Vec x0 = X;
    Vec y0 = Y;
    if (!orthonormal_pair(x0, y0)) throw Error(ErrorKind::DegeneratePair, "starting pair is degenerate");
    const Stack st(shape_ops, n);
    const LocalResult r = descend(st, x0, y0, options);
    CurvatureCertificate c;
    c.source = std::move(source);
    c.kind = CertificateKind::ScanMin;
    c.X = r.X;
    c.Y = r.Y;
    c.K = r.K;
    c.expected = r.K;
    c.comparison = Comparison::AtMost;
    c.tolerance = options.tol;
    c.status = CertificateStatus::Verified;
    c.restarts = 1;
    c.best_restart = 0;
    return c;
}

CurvatureCertificate min_sectional_scan(std::string source, const std::vector<Mat>& shape_ops,
                                        const ScanOptions& options) {
    if (options.restarts < 1) throw Error(ErrorKind::InvalidArgument, "restarts must be at least 1");
    if (shape_ops.empty()) throw Error(ErrorKind::InvalidArgument, "scan needs the tangent dimension from a shape operator");
    const int n = static_cast<int>(shape_ops.front().rows());
    if (n < 2) throw Error(ErrorKind::NotApplicable, "tangent dimension below 2 has no 2-planes");
    check_ops(shape_ops, n);
    const Stack st(shape_ops, n);

    CurvatureCertificate best;
    best.source = source;
    best.kind = CertificateKind::ScanMin;
    best.K = std::numeric_limits<double>::infinity();
    best.comparison = Comparison::AtMost;
    best.tolerance = options.tol;
    best.restarts = options.restarts;
    for (int r = 0; r < options.restarts; ++r) {
        std::mt19937_64 rng(derive_seed(options.seed, "scan:" + source, static_cast<std::uint64_t>(r)));
        Vec X = gaussian_vector(n, rng);
        Vec Y = gaussian_vector(n, rng);
        if (!orthonormal_pair(X, Y)) continue;
        const LocalResult res = descend(st, X, Y, options);
        // Strict improvement keeps the earliest restart on ties.
        if (res.K < best.K) {
            best.K = res.K;
            best.X = res.X;
            best.Y = res.Y;
            best.best_restart = r;
        }
    }
    best.expected = best.K;
    best.status = best.best_restart >= 0 ? CertificateStatus::Verified : CertificateStatus::Failed;
    return best;
}

CurvatureSign expected_focal_sign(const FamilyDescriptor& f, FocalSide side) {
    if (f.g == 3) return CurvatureSign::Positive;
    if (f.g == 6) return CurvatureSign::NegativeSomewhere;
    if (f.g != 4) throw Error(ErrorKind::NotApplicable, "focal sign verdicts cover g = 3, 4, 6");
    if (f.kind == FamilyKind::Homogeneous) {
        if (f.m1 == 2 && f.m2 == 2 && side == FocalSide::Minus) return CurvatureSign::NonNegative;
        return CurvatureSign::NegativeSomewhere;
    }
    if (side == FocalSide::Minus) return f.m1 == 1 ? CurvatureSign::NonNegative : CurvatureSign::NegativeSomewhere;
    if (f.m2 == 1 && (f.m1 == 2 || f.m1 == 6)) return CurvatureSign::NonNegative;
    if (f.m1 == 4 && f.m2 == 3 && f.definiteness == Definiteness::Definite) return CurvatureSign::NonNegative;
    return CurvatureSign::NegativeSomewhere;
}

SignVerdict sign_verdict(const FamilyDescriptor& family, FocalSide side,
                         const std::vector<CurvatureCertificate>& evidence) {
    SignVerdict v;
    v.family = family;
    v.side = side;
    v.expected = expected_focal_sign(family, side);
    v.observed_min = std::numeric_limits<double>::infinity();
    for (const auto& c : evidence)
        if (c.kind != CertificateKind::Spectrum) v.observed_min = std::min(v.observed_min, c.K);
    if (evidence.empty()) {
        v.consistent = false;
        v.note = "no evidence supplied";
        return v;
    }
    switch (v.expected) {
    case CurvatureSign::NonNegative:
        v.consistent = v.observed_min >= -1e-8;
        v.note = v.consistent ? "consistent with K >= 0 (numerical evidence, not a proof)"
                              : "negative plane found where K >= 0 is expected";
        break;
    case CurvatureSign::Positive:
        v.consistent = v.observed_min > 0.0;
        v.note = v.consistent ? "consistent with K > 0" : "non-positive plane found where K > 0 is expected";
        break;
    case CurvatureSign::NegativeSomewhere:
        v.consistent = v.observed_min <= -1e-6;
        v.note = v.consistent ? "negative plane exhibited" : "no negative plane found";
        break;
    }
    return v;
}

}  // namespace fkm
