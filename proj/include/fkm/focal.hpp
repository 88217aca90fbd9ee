#pragma once

#include "clifford.hpp"
#include "curvature.hpp"
#include "family.hpp"
#include "linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fkm {

/// A point of a focal submanifold with orthonormal tangent and normal bases
/// (both orthogonal to x) and one shape operator per normal, in tangent coordinates.
struct FocalFrame {
    FocalSide side = FocalSide::Plus;
    Vec x;
    std::vector<Vec> tangent;
    std::vector<Vec> normal;
    std::vector<Mat> shape_ops;
    std::vector<Mat> Q;  // M-: Q_0 (with Q_0 x = x) followed by Q_1..Q_m

    int tangent_dim() const { return static_cast<int>(tangent.size()); }
    Mat tangent_matrix() const { return stack_columns(tangent); }
    /// Tangent coordinates of an ambient vector.
    Vec coefficients(const Vec& v) const;
    Vec ambient(const Vec& coeffs) const;
    /// | v - proj_T v |
    double tangency_residual(const Vec& v) const;
    /// Max deviation of the Gram matrix of {x, tangent, normal} from the identity.
    double gram_deviation() const;
};

/// Expected shape-operator spectrum {-1, 0, 1}: multiplicities (m2, m1, m2) on M+ and (m1, m2, m1) on M-.
std::vector<EigenCluster> expected_focal_spectrum(FocalSide side, int m1, int m2);

/// Clusters the eigenvalues of `a` (gap 1e-6) and compares with `expected` to `tol`.
bool spectrum_matches(const Mat& a, const std::vector<EigenCluster>& expected, double tol = 1e-8);

/// max(| <P_a x, x> |, | |x| - 1 |)
double plus_residual(const std::vector<Mat>& P, const Vec& x);
/// max(| |<P x, x>| - 1 |, | |x| - 1 |) with <P x, x> the vector of moments.
double minus_residual(const std::vector<Mat>& P, const Vec& x);

/// Damped Newton projection onto M+ (minimum-norm steps); empty on failure.
std::optional<Vec> project_to_plus(const std::vector<Mat>& P, const Vec& start, int max_iterations = 100,
                                   double tol = 1e-13);

/// Retraction onto M-: y -> normalize((I + Q(y)) y) with Q(y) built from the normalized moments of y.
Vec retract_to_minus(const std::vector<Mat>& P, const Vec& y);

Vec sample_focal_point(const CliffordSystem& sys, FocalSide side, std::uint64_t seed);

FocalFrame frame_at(const CliffordSystem& sys, FocalSide side, const Vec& x);

/// Max over tangent basis vectors t_i, t_j and normals of | <gamma''(0), xi> - <A_xi t, t> | with
/// gamma(s) = retraction(x + s t) and t = (t_i + t_j) / sqrt(2); central differences with step h.
double second_fundamental_form_defect(const CliffordSystem& sys, const FocalFrame& frame, double h = 1e-3,
                                      int max_pairs = 12);

/// K for ambient tangent vectors X, Y at a point of M+: 1 + sum <P X,X><P Y,Y> - <P X,Y>^2.
double ambient_plus_curvature(const std::vector<Mat>& P, const Vec& X, const Vec& Y);

/// Certificate for an ambient pair at a frame; fails if X or Y is not tangent.
CurvatureCertificate frame_witness(std::string source, const FocalFrame& frame, const Vec& X, const Vec& Y,
                                   double expected, Comparison comparison, double tol);

/// X = (c, 0), Y = (0, c) with c orthogonal to z1, z2, E_a z1, E_a z2 at an M+ point z = (z1, z2).
CurvatureCertificate orthogonal_slot_witness(const CliffordSystem& sys, std::uint64_t seed = 0);

enum class RegistryCase {
    Indefinite43,           // m = 4, k = 2, opposite orientations
    Indefinite43FromPair52, // (5,2) system with P_5 removed
    Pair52,
    Definite87,
    Pair96,
    Indefinite87,           // (9,6) system with P_1 removed
};

const char* to_string(RegistryCase c);
std::vector<RegistryCase> all_registry_cases();

struct WitnessData {
    std::string label;
    CliffordSystem sys;
    Vec x;
    Vec X;
    Vec Y;
    double expected = -1.0;
};

WitnessData registry_witness_data(RegistryCase c, SystemVariant recipe = SystemVariant::Standard);
CurvatureCertificate registry_witness(RegistryCase c, SystemVariant recipe = SystemVariant::Standard);

/// M- witness for m >= 2: X = (Q_i x + Q_i eta) / sqrt 2, Y = (Q_j x - Q_j eta) / sqrt 2, with the most
/// negative value over the normals eta (i = 1, j = 2). Certified as K <= -1e-6.
CurvatureCertificate minus_witness(const CliffordSystem& sys, std::uint64_t seed = 0);
/// Same construction at a given frame.
CurvatureCertificate minus_witness_at(const FocalFrame& frame, const std::string& source);

}  // namespace fkm
