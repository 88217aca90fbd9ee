#include "fkm/runner.hpp"

#include "fkm/clifford.hpp"
#include "fkm/curvature.hpp"
#include "fkm/errors.hpp"
#include "fkm/fkm_field.hpp"
#include "fkm/focal.hpp"
#include "fkm/homogeneous.hpp"
#include "fkm/hypersurface.hpp"
#include "fkm/linalg.hpp"
#include "fkm/topology.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>

namespace fkm {

namespace {

using nlohmann::json;

std::string fmt(double v) { return format_double(v); }

std::string family_key(int m, int k, int q) {
    return "m=" + std::to_string(m) + " k=" + std::to_string(k) + " q=" + std::to_string(q);
}

std::string family_key(const CliffordSystem& sys) { return family_key(sys.m, sys.k, sys.q); }

int default_negative_restarts(int restarts) { return std::min(restarts, 10); }

bool usage_error(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidFamily:
    case ErrorKind::InvalidVariant:
    case ErrorKind::NotApplicable:
    case ErrorKind::DimensionMismatch: return true;
    default: return false;
    }
}

void add_certificate(Report& r, const CurvatureCertificate& c, const std::string& name) {
    r.certificates.push_back(to_row(c));
    std::string expected = std::string(to_string(c.comparison)) + " " + fmt(c.expected);
    r.add(name, expected, fmt(c.K), c.verified());
}

// ---------------------------------------------------------------- construct

void construct_checks(Report& r, const CliffordSystem& sys) {
    const std::string key = family_key(sys);
    const RelationReport rel = verify_clifford_relations(sys);
    r.add("relations " + key, "exact", rel.pass ? "exact" : "violated", rel.pass);
    r.add("trace invariant " + key, std::to_string(sys.q), std::to_string(trace_invariant(sys)),
          trace_invariant(sys) == sys.q);
    r.add("delta " + key, std::to_string(delta_of_m(sys.m)), std::to_string(sys.l / sys.k),
          sys.l == sys.k * delta_of_m(sys.m));
    r.add("multiplicities " + key, "m2 >= 1", "(" + std::to_string(sys.m1()) + "," + std::to_string(sys.m2()) + ")",
          sys.m2() >= 1);
    // A symmetric involution has eigenvalues +-1; equal multiplicities iff it is trace-free.
    long worst = 0;
    for (const IntMat& p : sys.P) worst = std::max(worst, std::labs(static_cast<long>(p.trace())));
    r.add("involution spectra " + key, "+1 x l, -1 x l", "max |trace| " + std::to_string(worst), worst == 0);
    if (sys.m % 4 == 0) {
        const IntMat prod = generator_product(sys);
        const bool plus = prod == IntMat::Identity(sys.dim(), sys.dim());
        const bool minus = prod == IntMat(-IntMat::Identity(sys.dim(), sys.dim()));
        r.add("product of generators " + key, sys.definite() ? "+-Id" : "not +-Id",
              plus || minus ? "+-Id" : "not +-Id", (plus || minus) == sys.definite());
    }
}

// ------------------------------------------------------------------ verify

void verify_checks(Report& r, const CliffordSystem& sys, int samples, std::uint64_t seed, double tol) {
    const std::string key = family_key(sys);
    const FkmField field(sys);
    const auto cm = verify_cartan_munzner(field, samples, derive_seed(seed, "cm:" + key, 0), tol);
    r.add("gradient identity " + key, "<= " + fmt(tol), fmt(cm.gradient_residual), cm.gradient_residual <= tol);
    r.add("laplacian identity " + key, "<= " + fmt(tol), fmt(cm.laplacian_residual), cm.laplacian_residual <= tol);
    const auto sg = spherical_gradient_check(field, samples, derive_seed(seed, "sphere:" + key, 0), tol);
    r.add("spherical gradient identity " + key, "<= " + fmt(tol), fmt(sg.residual), sg.pass);
}

// ------------------------------------------------------------------ sample

void sample_checks(Report& r, const CliffordSystem& sys, int samples, std::uint64_t seed, int sff_points) {
    const std::string key = family_key(sys);
    for (FocalSide side : {FocalSide::Plus, FocalSide::Minus}) {
        const std::string tag = std::string(to_string(side)) + " " + key;
        const int expected_dim = side == FocalSide::Plus ? 2 * sys.l - sys.m - 2 : sys.l + sys.m - 1;
        const auto spectrum = expected_focal_spectrum(side, sys.m1(), sys.m2());
        double gram = 0.0;
        double residual = 0.0;
        double trace = 0.0;
        double sff = 0.0;
        double smin = std::numeric_limits<double>::infinity();
        double smax = -smin;
        int spectra_ok = 0;
        int operators = 0;
        bool dims_ok = true;
        for (int i = 0; i < samples; ++i) {
            const Vec x = sample_focal_point(sys, side, derive_seed(seed, "sample:" + tag, i));
            const FocalFrame f = frame_at(sys, side, x);
            gram = std::max(gram, f.gram_deviation());
            residual = std::max(residual, side == FocalSide::Plus ? plus_residual(sys.real(), x)
                                                                  : minus_residual(sys.real(), x));
            dims_ok = dims_ok && f.tangent_dim() == expected_dim;
            for (const Mat& a : f.shape_ops) {
                trace = std::max(trace, std::abs(a.trace()));
                spectra_ok += spectrum_matches(a, spectrum) ? 1 : 0;
                ++operators;
            }
            const double s = scalar_curvature(f.shape_ops, f.tangent_dim());
            smin = std::min(smin, s);
            smax = std::max(smax, s);
            if (i < sff_points) sff = std::max(sff, second_fundamental_form_defect(sys, f));
        }
        r.add("frame orthonormality " + tag, "<= 1e-10", fmt(gram), gram <= 1e-10);
        r.add("membership " + tag, "<= 1e-9", fmt(residual), residual <= 1e-9);
        r.add("tangent dimension " + tag, std::to_string(expected_dim), dims_ok ? std::to_string(expected_dim) : "mismatch",
              dims_ok);
        r.add("shape operators trace-free " + tag, "<= 1e-9", fmt(trace), trace <= 1e-9);
        r.add("shape operator spectra " + tag, std::to_string(operators), std::to_string(spectra_ok),
              spectra_ok == operators);
        r.add("scalar curvature constant " + tag, "spread <= 1e-6", fmt(smax - smin), smax - smin <= 1e-6);
        if (sff_points > 0) r.add("second fundamental form " + tag, "<= 1e-5", fmt(sff), sff <= 1e-5);
    }
}

// -------------------------------------------------------------- hypersurface

void hypersurface_checks(Report& r, int g, int m1, int m2, std::optional<double> theta, std::uint64_t seed) {
    const std::string key = "hypersurface g=" + std::to_string(g) + " (" + std::to_string(m1) + "," +
                            std::to_string(m2) + ")";
    const double t0 = minimal_theta(g, m1, m2);
    const HypersurfaceState s0{g, m1, m2, t0};
    const double h0 = mean_curvature(s0);
    r.add("minimal theta " + key, "|H| <= 1e-10", fmt(h0), std::abs(h0) <= 1e-10);

    const RicciClaim claim = ricci_claim(g, m1, m2);
    const RicciExtremes e0 = hypersurface_ricci_extremes(s0);
    switch (claim) {
    case RicciClaim::NotNonNegative:
    case RicciClaim::NotNonNegativeNearMinimal:
        r.add("min Ricci at minimal theta " + key, "< 0", fmt(e0.min), e0.min < 0.0);
        break;
    case RicciClaim::PositiveNearMinimal:
        r.add("min Ricci at minimal theta " + key, "> 0", fmt(e0.min), e0.min > 0.0);
        break;
    case RicciClaim::None: break;
    }
    if (g == 6 && m1 == 2) {
        const double exact = 11.0 - (2.0 + std::sqrt(3.0)) * (2.0 + std::sqrt(3.0));
        r.add("min Ricci closed form " + key, fmt(exact), fmt(e0.min), std::abs(e0.min - exact) <= 1e-10);
    }

    constexpr int grid = 50;
    std::mt19937_64 rng(derive_seed(seed, key, 0));
    int sign_ok = 0;
    int plane_ok = 0;
    double reduction = 0.0;
    double closed_form = 0.0;
    for (int j = 1; j <= grid; ++j) {
        const double t = std::numbers::pi / g * j / (grid + 1);
        const HypersurfaceState s{g, m1, m2, t};
        const RicciExtremes e = hypersurface_ricci_extremes(s);
        if (claim == RicciClaim::NotNonNegative) sign_ok += e.min < 0.0 ? 1 : 0;
        if (g >= 3) plane_ok += hypersurface_negative_plane(s).verified() ? 1 : 0;
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<double> w(g);
            double total = 0.0;
            for (double& c : w) total += (c = std::abs(gaussian_vector(1, rng)(0)));
            for (double& c : w) c /= total;
            reduction = std::max(reduction, e.min - hypersurface_ricci(s, w));
        }
        if (g == 4) {
            const double lam = principal_curvatures(s).front().value;
            const double h = mean_curvature(s);
            closed_form = std::max(closed_form, std::abs(mean_curvature_g4(m1, m2, lam) - h) / std::max(1.0, std::abs(h)));
        }
    }
    if (claim == RicciClaim::NotNonNegative)
        r.add("min Ricci negative on theta grid " + key, std::to_string(grid), std::to_string(sign_ok), sign_ok == grid);
    if (g >= 3)
        r.add("negative (e1,e_g) plane on theta grid " + key, std::to_string(grid), std::to_string(plane_ok),
              plane_ok == grid);
    r.add("min Ricci attained on principal directions " + key, "<= 1e-10", fmt(std::max(reduction, 0.0)),
          reduction <= 1e-10);
    if (g == 4) r.add("mean curvature closed form " + key, "<= 1e-12 relative", fmt(closed_form), closed_form <= 1e-12);

    if (theta) {
        const HypersurfaceState s{g, m1, m2, *theta};
        validate(s);
        const RicciExtremes e = hypersurface_ricci_extremes(s);
        json observed = {{"H", mean_curvature(s)}, {"min_ricci", e.min}, {"max_ricci", e.max}};
        r.add("state at theta=" + fmt(*theta) + " " + key, "evaluated", observed.dump(), Status::Pass);
        if (g >= 3) add_certificate(r, hypersurface_negative_plane(s), "negative plane at theta " + key);
    }
}

// ---------------------------------------------------------------- curvature

std::optional<RegistryCase> registry_case_for(const CliffordSystem& sys) {
    if (sys.m == 4 && sys.k == 2 && sys.q == 0) return RegistryCase::Indefinite43;
    if (sys.m == 5 && sys.k == 1) return RegistryCase::Pair52;
    if (sys.m == 8 && sys.k == 2 && sys.q == 2) return RegistryCase::Definite87;
    if (sys.m == 8 && sys.k == 2 && sys.q == 0) return RegistryCase::Indefinite87;
    if (sys.m == 9 && sys.k == 1) return RegistryCase::Pair96;
    return std::nullopt;
}

void verdict_check(Report& r, const FamilyDescriptor& family, FocalSide side,
                   const std::vector<CurvatureCertificate>& evidence, const std::string& tag) {
    const SignVerdict v = sign_verdict(family, side, evidence);
    r.add("curvature sign " + tag, to_string(v.expected), fmt(v.observed_min), v.consistent);
}

void ricci_checks(Report& r, const std::vector<Mat>& ops, int n, const std::string& tag) {
    const RicciForm ric = ricci_form(ops, n);
    const double scal = scalar_curvature(ops, n);
    r.add("mean curvature vanishes " + tag, "<= 1e-9", fmt(ric.mean_curvature), ric.mean_curvature <= 1e-9);
    r.add("scalar curvature is Ricci trace " + tag, fmt(scal), fmt(ric.form.trace()),
          std::abs(scal - ric.form.trace()) <= 1e-8);
    const Vec diag = ricci_from_sectional(ops, n);
    const double dev = (diag - ric.form.diagonal()).cwiseAbs().maxCoeff();
    r.add("Ricci from sectional curvatures " + tag, "<= 1e-8", fmt(dev), dev <= 1e-8);
    CurvatureCertificate spec;
    spec.source = tag;
    spec.kind = CertificateKind::Spectrum;
    spec.spectrum.assign(ric.spectrum.data(), ric.spectrum.data() + ric.spectrum.size());
    spec.K = ric.spectrum(0);
    spec.status = CertificateStatus::Verified;
    r.certificates.push_back(to_row(spec));
}

void focal_curvature_checks(Report& r, const CliffordSystem& sys, FocalSide side, int restarts, std::uint64_t seed) {
    const std::string tag = std::string(to_string(side)) + " " + family_key(sys);
    const FamilyDescriptor family = ot_fkm_family(sys.m, sys.k, sys.q);
    const Vec x = sample_focal_point(sys, side, derive_seed(seed, "curvature:" + tag, 0));
    const FocalFrame f = frame_at(sys, side, x);
    std::vector<CurvatureCertificate> evidence;

    ScanOptions opts;
    opts.restarts = restarts;
    opts.seed = derive_seed(seed, "scan:" + tag, 0);
    const CurvatureCertificate scan = min_sectional_scan("scan " + tag, f.shape_ops, opts);
    r.certificates.push_back(to_row(scan));
    r.add("scan minimum " + tag, "recorded", fmt(scan.K), Status::Pass);
    evidence.push_back(scan);

    if (side == FocalSide::Plus && sys.l > 2 * sys.m && sys.skew) {
        const auto c = orthogonal_slot_witness(sys, derive_seed(seed, "orthogonal-slot:" + tag, 0));
        add_certificate(r, c, "orthogonal-slot witness " + tag);
        evidence.push_back(c);
    }
    if (side == FocalSide::Plus) {
        if (const auto rc = registry_case_for(sys)) {
            const auto c = registry_witness(*rc);
            add_certificate(r, c, std::string("registry witness ") + to_string(*rc));
            evidence.push_back(c);
        }
    }
    if (side == FocalSide::Minus && sys.m >= 2) {
        const auto c = minus_witness_at(f, "minus witness " + tag);
        add_certificate(r, c, "minus witness " + tag);
        evidence.push_back(c);
    }
    ricci_checks(r, f.shape_ops, f.tangent_dim(), tag);
    verdict_check(r, family, side, evidence, tag);
}

const std::vector<double>& printed_ricci_spectrum(ModelCase c) {
    static const std::vector<double> g6m1p{-2, -2, 10.0 / 3, 10.0 / 3, 4};
    static const std::vector<double> g6m1m{-2.0 / 3, -2.0 / 3, 2, 2, 4};
    static const std::vector<double> g6m2p{0, 0, 0, 0, 8, 8, 8, 8, 9, 9};
    static const std::vector<double> g6m2m{4, 4, 4, 4, 4, 4, 4, 4, 9, 9};
    static const std::vector<double> none;
    switch (c) {
    case ModelCase::G6M1Plus: return g6m1p;
    case ModelCase::G6M1Minus: return g6m1m;
    case ModelCase::G6M2Plus: return g6m2p;
    case ModelCase::G6M2Minus: return g6m2m;
    default: return none;
    }
}

void model_checks(Report& r, ModelCase c, int restarts, std::uint64_t seed) {
    const HomogeneousFocalModel model = load_model(c);
    const std::string tag = std::string("model ") + to_string(c);
    std::vector<CurvatureCertificate> evidence;
    const auto w = model_witness(c);
    add_certificate(r, w, "witness " + tag);
    evidence.push_back(w);

    ScanOptions opts;
    opts.restarts = restarts;
    opts.seed = derive_seed(seed, "scan:" + tag, 0);
    const auto scan = min_sectional_scan("scan " + tag, model.shape_ops, opts);
    r.certificates.push_back(to_row(scan));
    r.add("scan minimum " + tag, "recorded", fmt(scan.K), Status::Pass);
    evidence.push_back(scan);

    ricci_checks(r, model.shape_ops, model.dim, tag);
    const auto& printed = printed_ricci_spectrum(c);
    if (!printed.empty()) {
        const Vec spec = ricci_form(model.shape_ops, model.dim).spectrum;
        double dev = spec.size() == static_cast<Eigen::Index>(printed.size()) ? 0.0 : 1.0;
        for (Eigen::Index i = 0; dev < 1.0 && i < spec.size(); ++i) dev = std::max(dev, std::abs(spec(i) - printed[i]));
        json expected = printed;
        json observed = std::vector<double>(spec.data(), spec.data() + spec.size());
        r.add("Ricci spectrum " + tag, expected.dump(), observed.dump(), dev <= 1e-10);
    }
    verdict_check(r, model.family, model.side, evidence, tag);
}

void curvature_command(Report& r, const RunConfig& cfg) {
    if (cfg.case_id) {
        const std::string& id = *cfg.case_id;
        bool matched = false;
        for (ModelCase c : all_model_cases()) {
            if (id == to_string(c)) {
                model_checks(r, c, cfg.restarts, cfg.seed);
                matched = true;
            }
        }
        for (HomogeneousCase h : all_homogeneous_cases()) {
            if (id != to_string(h)) continue;
            const TopologyFacts facts = homogeneous_facts(h);
            hypersurface_checks(r, facts.family.g, facts.family.m1, facts.family.m2, cfg.theta, cfg.seed);
            const std::string prefix = h == HomogeneousCase::G6M1   ? "g6m1-"
                                       : h == HomogeneousCase::G6M2 ? "g6m2-"
                                       : h == HomogeneousCase::G4_22 ? "g4-22-"
                                       : h == HomogeneousCase::G4_45 ? "g4-45-"
                                                                     : "";
            if (!prefix.empty())
                for (ModelCase c : all_model_cases())
                    if (std::string(to_string(c)).rfind(prefix, 0) == 0) model_checks(r, c, cfg.restarts, cfg.seed);
            matched = true;
        }
        if (!matched) throw Error(ErrorKind::InvalidArgument, "unknown case '" + id + "'");
        return;
    }
    if (!cfg.m || !cfg.k) throw Error(ErrorKind::InvalidArgument, "curvature needs --m and --k, or --case");
    const CliffordSystem sys = build_family(*cfg.m, *cfg.k, cfg.q);
    for (FocalSide side : {FocalSide::Plus, FocalSide::Minus}) focal_curvature_checks(r, sys, side, cfg.restarts, cfg.seed);
    hypersurface_checks(r, 4, sys.m1(), sys.m2(), cfg.theta, cfg.seed);
}

// ----------------------------------------------------------------- classify

void classify_ot_fkm(Report& r, int m, int k, std::optional<int> q) {
    const CliffordSystem sys = build_family(m, k, q);
    const std::optional<int> query = m % 4 == 0 ? std::optional<int>(trace_invariant(sys)) : std::nullopt;
    const TopologyFacts facts = classify_family(m, k, query);
    const std::string key = family_key(sys);
    r.add("trace invariant round trip " + key, std::to_string(sys.q), std::to_string(trace_invariant(sys)),
          trace_invariant(sys) == sys.q);
    const FamilyDescriptor expected = ot_fkm_family(m, k, sys.q);
    r.add("family descriptor " + key, expected.label(), facts.family.label(), facts.family == expected);
    auto rows = to_rows(facts.family.label(), facts);
    r.facts.insert(r.facts.end(), rows.begin(), rows.end());
}

void classify_command(Report& r, const RunConfig& cfg) {
    if (cfg.case_id) {
        const HomogeneousCase h = homogeneous_case_from_string(*cfg.case_id);
        const TopologyFacts facts = homogeneous_facts(h);
        auto rows = to_rows(to_string(h), facts);
        r.facts.insert(r.facts.end(), rows.begin(), rows.end());
        r.add(std::string("facts ") + to_string(h), "recorded", std::to_string(rows.size()) + " rows", Status::Pass);
        return;
    }
    if (!cfg.m || !cfg.k) throw Error(ErrorKind::InvalidArgument, "classify needs --m and --k, or --case");
    classify_ot_fkm(r, *cfg.m, *cfg.k, cfg.q);
}

// ------------------------------------------------------------------ witness

void witness_command(Report& r, const RunConfig& cfg) {
    if (!cfg.case_id) throw Error(ErrorKind::InvalidArgument, "witness needs --case");
    const std::string& id = *cfg.case_id;
    for (ModelCase c : all_model_cases())
        if (id == to_string(c)) return add_certificate(r, model_witness(c), std::string("model ") + id);
    for (RegistryCase c : all_registry_cases())
        if (id == to_string(c)) return add_certificate(r, registry_witness(c), std::string("registry ") + id);
    if (id == "orthogonal-slot" || id == "minus") {
        if (!cfg.m || !cfg.k) throw Error(ErrorKind::InvalidArgument, "witness --case " + id + " needs --m and --k");
        const CliffordSystem sys = build_family(*cfg.m, *cfg.k, cfg.q);
        if (id == "orthogonal-slot") {
            if (sys.l <= 2 * sys.m) throw Error(ErrorKind::NotApplicable, "needs l > 2m");
            return add_certificate(r, orthogonal_slot_witness(sys, derive_seed(cfg.seed, "witness", 0)),
                                   "orthogonal-slot witness " + family_key(sys));
        }
        if (sys.m < 2) throw Error(ErrorKind::NotApplicable, "the M- witness needs m >= 2");
        return add_certificate(r, minus_witness(sys, derive_seed(cfg.seed, "witness", 0)),
                               "minus witness " + family_key(sys));
    }
    throw Error(ErrorKind::InvalidArgument, "unknown witness case '" + id + "'");
}

// ------------------------------------------------------------------- report

void bernoulli_checks(Report& r) {
    const std::vector<std::pair<int, int>> known{{4, 24}, {8, 240}, {12, 504}, {16, 480}};
    for (auto [m, d] : known) {
        const BigInt got = j_denominator(m);
        r.add("j denominator m=" + std::to_string(m), std::to_string(d), got.str(), got == d);
    }
}

void scan_target_checks(Report& r, const ScanTarget& t, int restarts, std::uint64_t seed, bool expect_nonnegative) {
    const ScanInput in = scan_input(t, seed);
    ScanOptions opts;
    opts.restarts = restarts;
    opts.seed = derive_seed(seed, "scan:" + t.label(), 0);
    const auto scan = min_sectional_scan("scan " + t.label(), in.shape_ops, opts);
    r.certificates.push_back(to_row(scan));
    if (expect_nonnegative)
        r.add("non-negative scan " + t.label(), ">= -1e-8", fmt(scan.K), scan.K >= -1e-8);
    else
        r.add("negative scan " + t.label(), "<= -0.3", fmt(scan.K), scan.K <= -0.3);
    verdict_check(r, in.family, in.side, {scan}, t.label());
}

void report_command(Report& r, const RunConfig& cfg) {
    const int sample_points = std::min(cfg.samples, 10);
    for (const FamilyParams& f : constructible_families(9, 4)) {
        const CliffordSystem sys = build_family(f.m, f.k, f.q);
        construct_checks(r, sys);
        verify_checks(r, sys, cfg.samples, cfg.seed, cfg.tol);
        if (sys.l <= 16) sample_checks(r, sys, sample_points, cfg.seed, 1);
        classify_ot_fkm(r, f.m, f.k, f.q);
    }
    for (RegistryCase c : all_registry_cases())
        add_certificate(r, registry_witness(c), std::string("registry witness ") + to_string(c));
    for (const FamilyParams& f : constructible_families(9, 4)) {
        const CliffordSystem sys = build_family(f.m, f.k, f.q);
        if (sys.l > 2 * sys.m && sys.l <= 32)
            add_certificate(r, orthogonal_slot_witness(sys, derive_seed(cfg.seed, "orthogonal-slot", 0)),
                            "orthogonal-slot witness " + family_key(sys));
        if (sys.m >= 2 && sys.l <= 32)
            add_certificate(r, minus_witness(sys, derive_seed(cfg.seed, "minus", 0)), "minus witness " + family_key(sys));
    }
    for (ModelCase c : all_model_cases()) model_checks(r, c, cfg.restarts, cfg.seed);
    for (const ScanTarget& t : nonnegative_targets()) scan_target_checks(r, t, cfg.restarts, cfg.seed, true);
    for (const ScanTarget& t : negative_targets())
        scan_target_checks(r, t, default_negative_restarts(cfg.restarts), cfg.seed, false);

    for (int m : {1, 2, 4, 8}) hypersurface_checks(r, 3, m, m, std::nullopt, cfg.seed);
    for (int m : {1, 2}) hypersurface_checks(r, 6, m, m, std::nullopt, cfg.seed);
    hypersurface_checks(r, 4, 2, 2, std::nullopt, cfg.seed);
    hypersurface_checks(r, 4, 4, 5, std::nullopt, cfg.seed);
    for (const FamilyParams& f : constructible_families(9, 4)) {
        if (f.m % 4 == 0 && f.q != f.k) continue;
        const int m2 = f.k * delta_of_m(f.m) - f.m - 1;
        hypersurface_checks(r, 4, f.m, m2, std::nullopt, cfg.seed);
    }
    bernoulli_checks(r);
    for (HomogeneousCase h : all_homogeneous_cases()) {
        auto rows = to_rows(to_string(h), homogeneous_facts(h));
        r.facts.insert(r.facts.end(), rows.begin(), rows.end());
    }
}

void validate_config(const RunConfig& cfg) {
    if (cfg.restarts < 1) throw Error(ErrorKind::InvalidArgument, "--restarts must be >= 1");
    if (cfg.samples < 1) throw Error(ErrorKind::InvalidArgument, "--samples must be >= 1");
    if (!(cfg.tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "--tol must be positive");
}

}  // namespace

// ------------------------------------------------------------------- public

std::vector<FamilyParams> constructible_families(int max_m, int max_k) {
    std::vector<FamilyParams> out;
    for (int m = 1; m <= max_m; ++m) {
        for (int k = 1; k <= max_k; ++k) {
            if (k * delta_of_m(m) - m - 1 < 1) continue;
            if (m % 4 != 0) {
                out.push_back({m, k, 0});
                continue;
            }
            for (int q = k; q >= 0; q -= 2) out.push_back({m, k, q});
        }
    }
    return out;
}

CliffordSystem build_family(int m, int k, std::optional<int> q) {
    if (m < 1) throw Error(ErrorKind::InvalidFamily, "m must be >= 1");
    if (k < 1) throw Error(ErrorKind::InvalidFamily, "k must be >= 1");
    int qq = 0;
    if (m % 4 == 0) {
        qq = q.value_or(k);
        if (std::abs(qq) > k || (k - qq) % 2 != 0)
            throw Error(ErrorKind::InvalidVariant, "q must satisfy |q| <= k and q = k (mod 2), got q = " +
                                                       std::to_string(qq) + ", k = " + std::to_string(k));
    } else if (q && *q != 0) {
        throw Error(ErrorKind::InvalidVariant, "q is 0 unless m = 0 (mod 4)");
    }
    return build_system(m, k, m % 4 == 0 ? signs_for_q(k, qq) : std::vector<int>(k, 1));
}

std::string ScanTarget::label() const {
    std::string s = to_string(side);
    if (family) s += " " + family_key(family->m, family->k, family->q);
    if (model) s = "model " + *model;
    return s;
}

std::vector<ScanTarget> nonnegative_targets() {
    return {
        {FamilyParams{2, 2, 0}, std::nullopt, FocalSide::Plus},
        {FamilyParams{1, 4, 0}, std::nullopt, FocalSide::Minus},
        {FamilyParams{1, 8, 0}, std::nullopt, FocalSide::Minus},
        {FamilyParams{4, 2, 2}, std::nullopt, FocalSide::Plus},
        {FamilyParams{6, 1, 0}, std::nullopt, FocalSide::Plus},
    };
}

std::vector<ScanTarget> negative_targets() {
    std::vector<ScanTarget> out;
    for (const FamilyParams& f : constructible_families(9, 4)) {
        const FamilyDescriptor d = ot_fkm_family(f.m, f.k, f.q);
        for (FocalSide side : {FocalSide::Plus, FocalSide::Minus})
            if (expected_focal_sign(d, side) == CurvatureSign::NegativeSomewhere) out.push_back({f, std::nullopt, side});
    }
    for (ModelCase c : all_model_cases()) {
        const HomogeneousFocalModel m = load_model(c);
        if (expected_focal_sign(m.family, m.side) == CurvatureSign::NegativeSomewhere)
            out.push_back({std::nullopt, std::string(to_string(c)), m.side});
    }
    return out;
}

ScanInput scan_input(const ScanTarget& t, std::uint64_t seed) {
    ScanInput in;
    in.side = t.side;
    if (t.model) {
        const HomogeneousFocalModel m = load_model(model_case_from_string(*t.model));
        in.family = m.family;
        in.side = m.side;
        in.shape_ops = m.shape_ops;
        in.dim = m.dim;
        return in;
    }
    if (!t.family) throw Error(ErrorKind::InvalidArgument, "scan target without a family");
    const CliffordSystem sys = build_family(t.family->m, t.family->k, t.family->q);
    const Vec x = sample_focal_point(sys, t.side, derive_seed(seed, "target:" + t.label(), 0));
    const FocalFrame f = frame_at(sys, t.side, x);
    in.family = ot_fkm_family(sys.m, sys.k, sys.q);
    in.shape_ops = f.shape_ops;
    in.dim = f.tangent_dim();
    return in;
}

json config_to_json(const RunConfig& c) {
    json j;
    j["command"] = c.command;
    j["m"] = c.m ? json(*c.m) : json(nullptr);
    j["k"] = c.k ? json(*c.k) : json(nullptr);
    j["q"] = c.q ? json(*c.q) : json(nullptr);
    j["case"] = c.case_id ? json(*c.case_id) : json(nullptr);
    j["theta"] = c.theta ? json(*c.theta) : json(nullptr);
    j["seed"] = c.seed;
    j["restarts"] = c.restarts;
    j["samples"] = c.samples;
    j["tol"] = c.tol;
    j["format"] = c.format == Format::Json ? "json" : c.format == Format::Csv ? "csv" : "text";
    return j;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char* env_value) {
    if (flag) return *flag;
    if (env_value == nullptr || *env_value == '\0') return 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env_value, &end, 10);
    if (end == nullptr || *end != '\0') throw Error(ErrorKind::InvalidArgument, "FKM_SEED is not an integer");
    return static_cast<std::uint64_t>(v);
}

RunResult run(const RunConfig& cfg) {
    RunResult res;
    Report& r = res.report;
    r.config = config_to_json(cfg);
    const auto start = std::chrono::steady_clock::now();
    try {
        validate_config(cfg);
        if (cfg.command == "construct") {
            if (!cfg.m || !cfg.k) throw Error(ErrorKind::InvalidArgument, "construct needs --m and --k");
            construct_checks(r, build_family(*cfg.m, *cfg.k, cfg.q));
        } else if (cfg.command == "verify") {
            if (!cfg.m || !cfg.k) throw Error(ErrorKind::InvalidArgument, "verify needs --m and --k");
            verify_checks(r, build_family(*cfg.m, *cfg.k, cfg.q), cfg.samples, cfg.seed, cfg.tol);
        } else if (cfg.command == "sample") {
            if (!cfg.m || !cfg.k) throw Error(ErrorKind::InvalidArgument, "sample needs --m and --k");
            sample_checks(r, build_family(*cfg.m, *cfg.k, cfg.q), cfg.samples, cfg.seed, std::min(cfg.samples, 3));
        } else if (cfg.command == "curvature") {
            curvature_command(r, cfg);
        } else if (cfg.command == "classify") {
            classify_command(r, cfg);
        } else if (cfg.command == "witness") {
            witness_command(r, cfg);
        } else if (cfg.command == "report") {
            report_command(r, cfg);
        } else {
            throw Error(ErrorKind::InvalidArgument, "unknown command '" + cfg.command + "'");
        }
        res.exit_code = r.overall() == Status::Fail ? 1 : 0;
    } catch (const Error& e) {
        res.error = e.what();
        if (usage_error(e.kind())) {
            res.exit_code = 2;
        } else {
            r.add("run", "completes", res.error, Status::Fail);
            res.exit_code = 1;
        }
    } catch (const std::exception& e) {
        res.error = e.what();
        r.add("run", "completes", res.error, Status::Fail);
        res.exit_code = 1;
    }
    r.wall_clock_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace fkm
