#include "fkm/topology.hpp"

#include "fkm/clifford.hpp"
#include "fkm/errors.hpp"

#include <map>
#include <mutex>

namespace fkm {

namespace {

BigInt binomial(int n, int k) {
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace

ExactRational modern_bernoulli(int n) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "Bernoulli index must be non-negative");
    static std::mutex mu;
    static std::vector<ExactRational> cache{ExactRational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        const int N = static_cast<int>(cache.size());
        ExactRational s = 0;
        for (int i = 0; i < N; ++i) s += ExactRational(binomial(N + 1, i)) * cache[static_cast<std::size_t>(i)];
        cache.push_back(-s / (N + 1));
    }
    return cache[static_cast<std::size_t>(n)];
}

ExactRational bernoulli_number(int j) {
    if (j < 1) throw Error(ErrorKind::InvalidArgument, "Bernoulli index j must be at least 1");
    return abs(modern_bernoulli(2 * j));
}

BigInt j_denominator(int m) {
    if (m < 4 || m % 4 != 0) throw Error(ErrorKind::InvalidArgument, "j_denominator needs m = 0 (mod 4), m >= 4");
    const ExactRational r = bernoulli_number(m / 4) / m;
    return boost::multiprecision::denominator(r);
}

const char* to_string(TriState t) {
    switch (t) {
    case TriState::Yes: return "yes";
    case TriState::No: return "no";
    case TriState::Unknown: return "unknown";
    }
    return "unknown";
}

TriState from_bool(bool b) { return b ? TriState::Yes : TriState::No; }

std::string Category::str() const {
    if (!lo || !hi) return "unknown";
    if (*lo == *hi) return std::to_string(*lo);
    return "[" + std::to_string(*lo) + "," + std::to_string(*hi) + "]";
}

std::string TopologyFacts::provenance_of(const std::string& key) const {
    for (const Fact& f : provenance)
        if (f.key == key) return f.provenance;
    return {};
}

bool eta_trivial_list(int m1, int m2, Definiteness d) {
    struct Pair {
        int a, b;
    };
    static constexpr Pair list[] = {{1, 2}, {2, 1}, {1, 6}, {6, 1}, {2, 5}, {5, 2}, {3, 4}};
    for (const auto& p : list)
        if (p.a == m1 && p.b == m2) return true;
    return m1 == 4 && m2 == 3 && d == Definiteness::Indefinite;
}

CanonicalFamily normalize_congruence(int m1, int m2, Definiteness d) {
    CanonicalFamily c{m1, m2, d, false};
    auto swap_to = [&](int a, int b) {
        c = {a, b, Definiteness::NotApplicable, true};
    };
    if (m1 == 2 && m2 == 1) swap_to(1, 2);
    else if (m1 == 6 && m2 == 1) swap_to(1, 6);
    else if (m1 == 5 && m2 == 2) swap_to(2, 5);
    else if (m1 == 4 && m2 == 3 && d == Definiteness::Indefinite) swap_to(3, 4);
    return c;
}

TopologyFacts classify_family(int m, int k, std::optional<int> q) {
    if (m < 1 || k < 1) throw Error(ErrorKind::InvalidArgument, "m and k must be positive");
    const int l = k * delta_of_m(m);
    if (l - m - 1 < 1) throw Error(ErrorKind::InvalidFamily, "m2 = l - m - 1 must be positive");
    if (m % 4 == 0) {
        if (!q) throw Error(ErrorKind::InvalidArgument, "q is required when m = 0 (mod 4)");
        if (*q > k || *q < -k || (k - *q) % 2 != 0)
            throw Error(ErrorKind::InvalidArgument, "q must satisfy |q| <= k and q = k (mod 2)");
    } else if (q && *q != 0) {
        throw Error(ErrorKind::InvalidArgument, "q is only meaningful when m = 0 (mod 4)");
    }

    TopologyFacts t;
    t.family = ot_fkm_family(m, k, q.value_or(0));
    t.m = m;
    t.k = k;
    if (m % 4 == 0) t.q = q;
    const int m1 = t.family.m1;
    const int m2 = t.family.m2;
    const Definiteness d = t.family.definiteness;
    auto note = [&t](std::string key, std::string value, std::string why) {
        t.provenance.push_back({std::move(key), std::move(value), std::move(why)});
    };

    // xi over S^m and M- = S(xi).
    const int r8 = m % 8;
    if (r8 == 3 || r8 == 5 || r8 == 6 || r8 == 7) {
        t.xi_trivial = TriState::Yes;
        t.m_minus_product = {TriState::Yes, TriState::Yes, TriState::Yes};
        note("xi_trivial", "yes", "xi trivial for m = 3, 5, 6, 7 (mod 8)");
        note("m_minus_product", "yes", "M- diffeomorphic to S^m x S^{l-1} for m = 3, 5, 6, 7 (mod 8)");
    } else if (r8 == 1 || r8 == 2) {
        const TriState even = from_bool(k % 2 == 0);
        t.xi_trivial = even;
        t.m_minus_product = {even, even, even};
        note("xi_trivial", to_string(even), "xi trivial iff k even for m = 1, 2 (mod 8)");
        note("m_minus_product", to_string(even), "M- product type iff k even for m = 1, 2 (mod 8)");
    } else {
        const int qq = *q;
        const BigInt dm = j_denominator(m);
        const bool homotopy = BigInt(qq) % dm == 0;
        t.xi_trivial = from_bool(qq == 0);
        t.m_minus_product = {from_bool(homotopy), from_bool(qq == 0), from_bool(qq == 0)};
        note("xi_trivial", to_string(t.xi_trivial), "xi trivial iff q = 0 for m = 0 (mod 4)");
        note("m_minus_product", "homotopy " + std::string(to_string(t.m_minus_product.homotopy)),
             "M- homotopy product iff q = 0 mod d_m (d_m = " + dm.str() + "); homeo/diffeo iff q = 0");
    }

    // eta over S^{l-1} and M+ = S(eta); M = M+ x S^m.
    const TriState eta = from_bool(eta_trivial_list(m1, m2, d));
    t.eta_trivial = eta;
    t.m_plus_product = {eta, eta, eta};
    t.hypersurface_product = {eta, eta, eta};
    t.normal_bundle_m_minus_trivial = eta;
    const std::string eta_list = "eta trivial iff (m1,m2) in {(1,2),(2,1),(1,6),(6,1),(2,5),(5,2),(3,4),(4,3) indefinite}";
    note("eta_trivial", to_string(eta), eta_list);
    note("m_plus_product", to_string(eta), "M+ product type iff eta trivial");
    note("hypersurface_product", to_string(eta), "M = M+ x S^m is a product of spheres iff eta trivial");
    note("normal_bundle_m_minus_trivial", to_string(eta), "normal bundle of M- trivial on the same list as eta");

    t.m_minus_parallelizable = t.xi_trivial;
    t.m_plus_parallelizable = TriState::Yes;
    t.hypersurface_parallelizable = TriState::Yes;
    note("m_minus_parallelizable", to_string(t.xi_trivial), "M- parallelizable iff s-parallelizable iff xi trivial");
    note("m_plus_parallelizable", "yes", "M+ always parallelizable");
    note("hypersurface_parallelizable", "yes", "M always parallelizable");

    // LS category.
    t.cat_m_minus = Category::exact(2);
    note("cat_m_minus", "2", "cat(M-) = 2");
    const bool open = (m1 == 8 && m2 == 7) || (m1 == 9 && m2 == 6);
    if (open) {
        t.cat_m_plus = Category::unknown();
        t.cat_hypersurface = Category::unknown();
        note("cat_m_plus", "unknown", "cat(M+): open problem for (8,7) and (9,6)");
        note("cat_hypersurface", "unknown", "cat(M): excluded case (8,7) or (9,6)");
    } else if (m1 == 1 && m2 == 1) {
        t.cat_m_plus = Category::exact(3);
        t.cat_hypersurface = Category::exact(4);
        note("cat_m_plus", "3", "cat(M+): (1,1) exception, M+ = SO(3)");
        note("cat_hypersurface", "4", "cat(M): (1,1) exception");
    } else if (m1 == 4 && m2 == 3 && d == Definiteness::Definite) {
        t.cat_m_plus = Category::exact(3);
        t.cat_hypersurface = Category::exact(4);
        note("cat_m_plus", "3", "cat(M+): definite (4,3) exception, M+ = Sp(2)");
        note("cat_hypersurface", "4", "cat(M): definite (4,3) exception");
    } else {
        t.cat_m_plus = Category::exact(2);
        t.cat_hypersurface = Category::exact(3);
        note("cat_m_plus", "2", "cat(M+) = 2 outside the listed exceptions");
        note("cat_hypersurface", "3", "cat(M) = 3 outside the listed exceptions");
    }
    return t;
}

namespace {

struct HomogeneousName {
    HomogeneousCase c;
    const char* name;
};

constexpr HomogeneousName kHomogeneousNames[] = {
    {HomogeneousCase::G3M1, "g3m1"}, {HomogeneousCase::G3M2, "g3m2"}, {HomogeneousCase::G3M4, "g3m4"},
    {HomogeneousCase::G3M8, "g3m8"}, {HomogeneousCase::G6M1, "g6m1"}, {HomogeneousCase::G6M2, "g6m2"},
    {HomogeneousCase::G4_22, "g4_22"}, {HomogeneousCase::G4_45, "g4_45"},
};

}  // namespace

const char* to_string(HomogeneousCase c) {
    for (const auto& n : kHomogeneousNames)
        if (n.c == c) return n.name;
    return "unknown";
}

HomogeneousCase homogeneous_case_from_string(const std::string& s) {
    for (const auto& n : kHomogeneousNames)
        if (s == n.name) return n.c;
    throw Error(ErrorKind::InvalidArgument, "unknown homogeneous case '" + s + "'");
}

std::vector<HomogeneousCase> all_homogeneous_cases() {
    std::vector<HomogeneousCase> out;
    for (const auto& n : kHomogeneousNames) out.push_back(n.c);
    return out;
}

TopologyFacts homogeneous_facts(HomogeneousCase c) {
    TopologyFacts t;
    t.family.kind = FamilyKind::Homogeneous;
    auto note = [&t](std::string key, std::string value, std::string why) {
        t.provenance.push_back({std::move(key), std::move(value), std::move(why)});
    };
    switch (c) {
    case HomogeneousCase::G3M1:
    case HomogeneousCase::G3M2:
    case HomogeneousCase::G3M4:
    case HomogeneousCase::G3M8: {
        static const std::map<HomogeneousCase, std::pair<int, std::string>> info = {
            {HomogeneousCase::G3M1, {1, "SO(3)/(Z2+Z2)"}},
            {HomogeneousCase::G3M2, {2, "SU(3)/T^2"}},
            {HomogeneousCase::G3M4, {4, "Sp(3)/Sp(1)^3"}},
            {HomogeneousCase::G3M8, {8, "F4/Spin(8)"}},
        };
        const auto& [mm, space] = info.at(c);
        t.family.g = 3;
        t.family.m1 = t.family.m2 = mm;
        t.cat_hypersurface = Category::exact(3);
        t.cat_m_plus = Category::exact(2);
        t.cat_m_minus = Category::exact(2);
        note("cat_hypersurface", "3", "cat(M) = cat(" + space + ") = 3");
        note("cat_m_plus", "2", "focal submanifolds are projective planes, cat(FP^2) = 2");
        note("cat_m_minus", "2", "focal submanifolds are projective planes, cat(FP^2) = 2");
        break;
    }
    case HomogeneousCase::G6M1:
    case HomogeneousCase::G6M2: {
        const bool one = c == HomogeneousCase::G6M1;
        t.family.g = 6;
        t.family.m1 = t.family.m2 = one ? 1 : 2;
        t.cat_hypersurface = Category::exact(one ? 4 : 6);
        t.cat_m_plus = Category::exact(one ? 3 : 5);
        t.cat_m_minus = Category::exact(one ? 3 : 5);
        const std::string tag = one ? "g = 6, m = 1" : "g = 6, m = 2";
        note("cat_hypersurface", t.cat_hypersurface.str(), "cat(M) for " + tag);
        note("cat_m_plus", t.cat_m_plus.str(), "cat(M+-) for " + tag);
        note("cat_m_minus", t.cat_m_minus.str(), "cat(M+-) for " + tag);
        break;
    }
    case HomogeneousCase::G4_22: {
        t.family.g = 4;
        t.family.m1 = t.family.m2 = 2;
        t.cat_m_plus = Category::exact(3);
        t.cat_m_minus = Category::exact(3);
        t.normal_bundle_m_minus_trivial = TriState::No;
        note("cat_m_plus", "3", "M+ = CP^3 is simply connected Kaehler, cat = complex dimension 3");
        note("cat_m_minus", "3", "cat of the oriented Grassmannian G2(R^5) is 3");
        note("normal_bundle_m_minus_trivial", "no", "normal bundles of M+- not stably trivial (not s-parallelizable)");
        note("m_plus_sphere_bundle", "S^2-bundle over S^4", "M+ = CP^3 is the twistor bundle over S^4");
        note("m_minus_sphere_bundle", "no", "M- is not an S^p-bundle over S^q");
        note("m_plus_cohomology_like_S2xS4", "no", "H*(M+) differs from H*(S^2 x S^4)");
        note("m_minus_cohomology_like_S2xS4", "no", "H*(M-) differs from H*(S^2 x S^4)");
        note("m_plus_s_parallelizable", "no", "M+ = CP^3 is not s-parallelizable");
        note("m_minus_s_parallelizable", "no", "M- = G2(R^5) is not s-parallelizable");
        note("m_plus_normal_bundle_stably_trivial", "no", "normal bundle of M+ not stably trivial");
        break;
    }
    case HomogeneousCase::G4_45: {
        t.family.g = 4;
        t.family.m1 = 4;
        t.family.m2 = 5;
        t.cat_m_plus = Category::exact(2);
        t.cat_m_minus = Category::interval(2, 3);
        t.normal_bundle_m_minus_trivial = TriState::No;
        note("cat_m_plus", "2", "M+ is an S^5-bundle over S^9, hence cat(M+) = 2");
        note("cat_m_minus", "[2,3]", "2 <= cat(M-) <= 3");
        note("normal_bundle_m_minus_trivial", "no", "normal bundle of M- not stably trivial");
        note("m_plus_sphere_bundle", "S^5-bundle over S^9 only", "M+ is an S^q-bundle over S^p iff (p,q) = (9,5)");
        note("m_minus_sphere_bundle", "no", "M- is not an S^q-bundle over S^p");
        note("m_plus_normal_bundle_trivial", "no", "normal bundle of M+ in S^19 is not trivial");
        note("m_minus_normal_bundle_stably_trivial", "no", "normal bundle of M- in S^19 is not stably trivial");
        break;
    }
    }
    return t;
}

}  // namespace fkm
