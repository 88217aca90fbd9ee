#pragma once

#include "curvature.hpp"

#include <optional>
#include <vector>

namespace fkm {

/// Isoparametric hypersurface with g distinct principal curvatures at angle theta in (0, pi/g).
struct HypersurfaceState {
    int g = 4;
    int m1 = 1;
    int m2 = 1;
    double theta = 0.0;

    int dimension() const;
};

/// Throws invalid-argument for g outside {1,2,3,4,6}, inadmissible multiplicities or theta outside (0, pi/g).
void validate(const HypersurfaceState& s);

struct PrincipalCurvature {
    double value = 0.0;
    int multiplicity = 0;
};

/// lambda_i = cot(theta + (i - 1) pi / g) with multiplicities m1, m2, m1, ...
std::vector<PrincipalCurvature> principal_curvatures(const HypersurfaceState& s);

/// sum m_i lambda_i
double mean_curvature(const HypersurfaceState& s);

/// g = 4 closed form m1 (l^2 - 1) / l - 4 m2 l / (l^2 - 1) with l = cot theta.
double mean_curvature_g4(int m1, int m2, double lambda1);

/// Theta where the hypersurface is minimal.
double minimal_theta(int g, int m1, int m2);

struct RicciExtremes {
    std::vector<double> principal;  // Ric(e_i) = n - 1 + lambda_i H - lambda_i^2
    double min = 0.0;
    double max = 0.0;
    bool negative = false;          // min < 0
};

RicciExtremes hypersurface_ricci_extremes(const HypersurfaceState& s);

/// Ric(X) for a unit vector given by its squared coefficients along the principal directions.
double hypersurface_ricci(const HypersurfaceState& s, const std::vector<double>& squared_coeffs);

enum class RicciClaim { NotNonNegative, PositiveNearMinimal, NotNonNegativeNearMinimal, None };

const char* to_string(RicciClaim c);

/// What is known about the sign of the hypersurface Ricci curvature for (g, m1, m2).
RicciClaim ricci_claim(int g, int m1, int m2);

/// K(e_1, e_g) = 1 + lambda_1 lambda_g; negative for g >= 3.
CurvatureCertificate hypersurface_negative_plane(const HypersurfaceState& s);

}  // namespace fkm
