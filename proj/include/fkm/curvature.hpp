#pragma once

#include "family.hpp"
#include "linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fkm {

enum class CertificateKind { Witness, ScanMin, Spectrum };
enum class CertificateStatus { Verified, Failed };
enum class Comparison { Equal, AtMost, AtLeast };

const char* to_string(CertificateKind kind);
const char* to_string(CertificateStatus status);
const char* to_string(Comparison c);

/// A sectional-curvature witness, a scan minimum or a Ricci spectrum.
/// X and Y are coefficient vectors in the tangent basis of the source frame or model.
struct CurvatureCertificate {
    std::string source;
    CertificateKind kind = CertificateKind::Witness;
    Vec X;
    Vec Y;
    double K = 0.0;
    double expected = 0.0;
    Comparison comparison = Comparison::Equal;
    double tolerance = 0.0;
    CertificateStatus status = CertificateStatus::Failed;
    std::vector<double> spectrum;
    int restarts = 0;
    int best_restart = -1;

    bool verified() const { return status == CertificateStatus::Verified; }
};

/// Gauss equation in the unit sphere:
/// K = 1 + sum <A X, X><A Y, Y> - sum <A X, Y>^2 after orthonormalizing (X, Y).
double sectional_curvature(const std::vector<Mat>& shape_ops, const Vec& X, const Vec& Y);

/// Evaluates K on (X, Y) and compares it with `expected`.
CurvatureCertificate certify_pair(std::string source, const std::vector<Mat>& shape_ops, const Vec& X, const Vec& Y,
                                  double expected, Comparison comparison, double tol);

/// Whether `value` satisfies `comparison` against `expected` within `tol`.
bool compare(double value, double expected, Comparison comparison, double tol);

struct RicciForm {
    Mat form;                    // Ric(X) = X^T form X
    Vec spectrum;                // ascending
    double mean_curvature = 0.0; // |sum_a tr(A_a) xi_a|
};

/// Ric = (n - 1) I + sum tr(A) A - sum A^2.
RicciForm ricci_form(const std::vector<Mat>& shape_ops, int n);

/// n (n - 1) + sum tr(A)^2 - sum |A|_F^2.
double scalar_curvature(const std::vector<Mat>& shape_ops, int n);

/// sum_j K(e_i, e_j) over the coordinate basis, for each i.
Vec ricci_from_sectional(const std::vector<Mat>& shape_ops, int n);

struct ScanOptions {
    int restarts = 200;
    std::uint64_t seed = 0;
    double tol = 1e-12;         // stop once a step improves K by at most tol
    int max_iterations = 2000;  // per restart
};

/// Multi-start projected-gradient minimization of K over orthonormal pairs.
/// Returns the best pair found; the value is an upper bound for the true minimum.
CurvatureCertificate min_sectional_scan(std::string source, const std::vector<Mat>& shape_ops,
                                        const ScanOptions& options = {});

/// Local descent from a given starting pair, used to refine witnesses.
CurvatureCertificate descend_from(std::string source, const std::vector<Mat>& shape_ops, const Vec& X, const Vec& Y,
                                  const ScanOptions& options = {});

enum class CurvatureSign { NonNegative, NegativeSomewhere, Positive };

const char* to_string(CurvatureSign sign);

/// Expected sign of the sectional curvature of a focal submanifold.
CurvatureSign expected_focal_sign(const FamilyDescriptor& family, FocalSide side);

struct SignVerdict {
    FamilyDescriptor family;
    FocalSide side = FocalSide::Plus;
    CurvatureSign expected = CurvatureSign::NegativeSomewhere;
    double observed_min = 0.0;
    bool consistent = false;
    std::string note;
};

/// Compares evidence (witnesses and scan minima) with the expected sign.
/// A mismatch points at a bug in the pipeline.
SignVerdict sign_verdict(const FamilyDescriptor& family, FocalSide side,
                         const std::vector<CurvatureCertificate>& evidence);

}  // namespace fkm
