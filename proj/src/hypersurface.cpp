#include "fkm/hypersurface.hpp"

#include "fkm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fkm {

namespace {

double cot(double t) { return std::cos(t) / std::sin(t); }

}  // namespace

int HypersurfaceState::dimension() const {
    if (g == 1) return m1;
    return (g / 2) * (m1 + m2) + (g % 2) * m1;
}

void validate(const HypersurfaceState& s) {
    const int g = s.g;
    if (g != 1 && g != 2 && g != 3 && g != 4 && g != 6)
        throw Error(ErrorKind::InvalidArgument, "g must be 1, 2, 3, 4 or 6");
    if (s.m1 < 1 || (g > 1 && s.m2 < 1)) throw Error(ErrorKind::InvalidArgument, "multiplicities must be positive");
    if (g == 3 && (s.m1 != s.m2 || (s.m1 != 1 && s.m1 != 2 && s.m1 != 4 && s.m1 != 8)))
        throw Error(ErrorKind::InvalidArgument, "g = 3 needs m1 = m2 in {1, 2, 4, 8}");
    if (g == 6 && (s.m1 != s.m2 || (s.m1 != 1 && s.m1 != 2)))
        throw Error(ErrorKind::InvalidArgument, "g = 6 needs m1 = m2 in {1, 2}");
    if (!(s.theta > 0.0 && s.theta < std::numbers::pi / g))
        throw Error(ErrorKind::InvalidArgument, "theta must lie in (0, pi/g)");
}

std::vector<PrincipalCurvature> principal_curvatures(const HypersurfaceState& s) {
    validate(s);
    std::vector<PrincipalCurvature> out;
    for (int i = 0; i < s.g; ++i)
        out.push_back({cot(s.theta + i * std::numbers::pi / s.g), i % 2 == 0 ? s.m1 : s.m2});
    return out;
}

double mean_curvature(const HypersurfaceState& s) {
    double h = 0.0;
    for (const auto& p : principal_curvatures(s)) h += p.multiplicity * p.value;
    return h;
}

double mean_curvature_g4(int m1, int m2, double l) {
    return m1 * (l * l - 1.0) / l - 4.0 * m2 * l / (l * l - 1.0);
}

double minimal_theta(int g, int m1, int m2) {
    switch (g) {
    case 1: return std::numbers::pi / 2.0;
    case 2: return std::atan(std::sqrt(static_cast<double>(m1) / m2));
    case 3: return std::numbers::pi / 6.0;
    case 4: {
        const double r = static_cast<double>(m2) / m1;
        return std::atan(1.0 / (std::sqrt(r) + std::sqrt(r + 1.0)));
    }
    case 6: return std::numbers::pi / 12.0;
    default: throw Error(ErrorKind::InvalidArgument, "g must be 1, 2, 3, 4 or 6");
    }
}

RicciExtremes hypersurface_ricci_extremes(const HypersurfaceState& s) {
    const auto pcs = principal_curvatures(s);
    const double H = mean_curvature(s);
    const int n = s.dimension();
    RicciExtremes r;
    for (const auto& p : pcs) r.principal.push_back(n - 1 + p.value * H - p.value * p.value);
    // Ric(X) is affine in the squared coefficients, so extremes sit at principal directions.
    r.min = *std::min_element(r.principal.begin(), r.principal.end());
    r.max = *std::max_element(r.principal.begin(), r.principal.end());
    r.negative = r.min < 0.0;
    return r;
}

double hypersurface_ricci(const HypersurfaceState& s, const std::vector<double>& squared_coeffs) {
    const RicciExtremes r = hypersurface_ricci_extremes(s);
    if (squared_coeffs.size() != r.principal.size())
        throw Error(ErrorKind::DimensionMismatch, "need one squared coefficient per principal curvature");
    double v = 0.0;
    for (std::size_t i = 0; i < r.principal.size(); ++i) v += squared_coeffs[i] * r.principal[i];
    return v;
}

const char* to_string(RicciClaim c) {
    switch (c) {
    case RicciClaim::NotNonNegative: return "not-non-negative";
    case RicciClaim::PositiveNearMinimal: return "positive-near-minimal";
    case RicciClaim::NotNonNegativeNearMinimal: return "not-non-negative-near-minimal";
    case RicciClaim::None: return "none";
    }
    return "unknown";
}

RicciClaim ricci_claim(int g, int m1, int m2) {
    switch (g) {
    case 3: return m1 == 1 ? RicciClaim::NotNonNegative : RicciClaim::PositiveNearMinimal;
    case 4: return (m1 == 1 || m2 == 1) ? RicciClaim::NotNonNegative : RicciClaim::PositiveNearMinimal;
    case 6: return m1 == 1 ? RicciClaim::NotNonNegative : RicciClaim::NotNonNegativeNearMinimal;
    default: return RicciClaim::None;
    }
}

CurvatureCertificate hypersurface_negative_plane(const HypersurfaceState& s) {
    if (s.g < 3) throw Error(ErrorKind::NotApplicable, "the (e1, e_g) plane is negative only for g >= 3");
    const auto pcs = principal_curvatures(s);
    CurvatureCertificate c;
    c.source = "hypersurface g=" + std::to_string(s.g) + " (" + std::to_string(s.m1) + "," + std::to_string(s.m2) +
               ") theta=" + std::to_string(s.theta);
    c.kind = CertificateKind::Witness;
    // Coordinates in the principal frame: e_1 and e_g.
    c.X = Vec::Unit(s.g, 0);
    c.Y = Vec::Unit(s.g, s.g - 1);
    c.K = 1.0 + pcs.front().value * pcs.back().value;
    c.expected = 0.0;
    c.comparison = Comparison::AtMost;
    c.tolerance = 0.0;
    c.status = c.K < 0.0 ? CertificateStatus::Verified : CertificateStatus::Failed;
    return c;
}

}  // namespace fkm
