#pragma once

#include "family.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fkm {

using BigInt = boost::multiprecision::cpp_int;
/// Reduced fraction with positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

/// Classical convention: B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ..., i.e. |B_{2j}| in the modern numbering.
ExactRational bernoulli_number(int j);

/// Modern signed Bernoulli number B_n (B_1 = -1/2) from sum_{i<=n} C(n+1, i) B_i = 0.
ExactRational modern_bernoulli(int n);

/// Denominator of B_{m/4} / m for m = 0 (mod 4), m >= 4.
BigInt j_denominator(int m);

enum class TriState { Yes, No, Unknown };

const char* to_string(TriState t);
TriState from_bool(bool b);

struct ProductType {
    TriState homotopy = TriState::Unknown;
    TriState homeo = TriState::Unknown;
    TriState diffeo = TriState::Unknown;
    bool operator==(const ProductType&) const = default;
};

/// LS category: exact value, closed interval, or unknown.
struct Category {
    std::optional<int> lo;
    std::optional<int> hi;

    static Category exact(int v) { return {v, v}; }
    static Category interval(int a, int b) { return {a, b}; }
    static Category unknown() { return {}; }
    bool known() const { return lo && hi && *lo == *hi; }
    std::string str() const;
    bool operator==(const Category&) const = default;
};

struct Fact {
    std::string key;
    std::string value;
    std::string provenance;
    bool operator==(const Fact&) const = default;
};

struct TopologyFacts {
    FamilyDescriptor family;
    std::optional<int> m;
    std::optional<int> k;
    std::optional<int> q;
    TriState xi_trivial = TriState::Unknown;
    TriState eta_trivial = TriState::Unknown;
    ProductType m_minus_product;
    ProductType m_plus_product;
    ProductType hypersurface_product;
    TriState m_minus_parallelizable = TriState::Unknown;
    TriState m_plus_parallelizable = TriState::Unknown;
    TriState hypersurface_parallelizable = TriState::Unknown;
    TriState normal_bundle_m_minus_trivial = TriState::Unknown;
    Category cat_m_plus;
    Category cat_m_minus;
    Category cat_hypersurface;
    std::vector<Fact> provenance;  // one entry per filled field, plus case-specific facts

    std::string provenance_of(const std::string& key) const;
    bool operator==(const TopologyFacts&) const = default;
};

/// Decision procedure for an OT-FKM family. `q` is required exactly when m = 0 (mod 4).
TopologyFacts classify_family(int m, int k, std::optional<int> q);

enum class HomogeneousCase { G3M1, G3M2, G3M4, G3M8, G6M1, G6M2, G4_22, G4_45 };

const char* to_string(HomogeneousCase c);
HomogeneousCase homogeneous_case_from_string(const std::string& s);
std::vector<HomogeneousCase> all_homogeneous_cases();

TopologyFacts homogeneous_facts(HomogeneousCase c);

struct CanonicalFamily {
    int m1 = 0;
    int m2 = 0;
    Definiteness definiteness = Definiteness::NotApplicable;
    bool swapped = false;  // focal submanifolds exchange roles
    bool operator==(const CanonicalFamily&) const = default;
};

/// (2,1) -> (1,2), (6,1) -> (1,6), (5,2) -> (2,5), indefinite (4,3) -> (3,4); identity otherwise.
CanonicalFamily normalize_congruence(int m1, int m2, Definiteness d);

/// Whether the bundle eta over S^{l-1} is trivial for OT-FKM multiplicities.
bool eta_trivial_list(int m1, int m2, Definiteness d);

}  // namespace fkm
