#pragma once

#include "linalg.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fkm {

/// Dimension of the irreducible module of the Clifford algebra C_{m-1}:
/// 1, 2, 4, 4, 8, 8, 8, 8 for m = 1..8 and delta(m + 8) = 16 delta(m).
int delta_of_m(int m);

enum class SystemVariant {
    Standard,            // quaternion/octonion left multiplications, Bott periodicity above m = 9
    RightMultiplication, // same layout with right multiplications (a congruent recipe)
    Octonion87Definite,  // E_a u = (e_a u1, e_a u2) on O^2, m = 8, k = 2
    Octonion96,          // E_a u = (e_a u1, -e_a u2), E_8 = J, m = 9, k = 1
    Derived,             // obtained by dropping a generator
};

const char* to_string(SystemVariant v);

/// Skew-symmetric orthogonal E_1..E_{m-1} on R^l with E_a E_b + E_b E_a = -2 delta_ab Id.
struct SkewGeneratorSet {
    int m = 0;
    int l = 0;
    std::vector<IntMat> E;
};

/// Irreducible generator set on R^{delta(m)}. For m = 0 (mod 4) the orientation
/// is fixed so that a single summand contributes +2 delta(m) to the trace invariant.
SkewGeneratorSet irreducible_skew_generators(int m, SystemVariant recipe = SystemVariant::Standard);

/// Symmetric Clifford system P_0..P_m on R^{2l}, stored with exact integer entries.
struct CliffordSystem {
    int m = 0;
    int k = 0;
    int l = 0;
    int q = 0;
    std::vector<int> signs;                 // per-summand orientation; empty for derived systems
    std::vector<IntMat> P;                  // m + 1 matrices of size 2l
    std::optional<SkewGeneratorSet> skew;   // present when P is in the (u, v) block form
    SystemVariant variant = SystemVariant::Standard;

    int dim() const { return 2 * l; }
    int m1() const { return m; }
    int m2() const { return l - m - 1; }
    bool definite() const { return m % 4 == 0 && (q == k || q == -k); }
    std::vector<Mat> real() const;
    std::string label() const;
};

/// Builds P_0(u,v)=(u,-v), P_1(u,v)=(v,u), P_{1+a}(u,v)=(E_a v,-E_a u) from k
/// irreducible summands, summand j carrying orientation signs[j].
CliffordSystem build_system(int m, int k, const std::vector<int>& signs,
                            SystemVariant variant = SystemVariant::Standard);

/// Sign pattern with (k + q) / 2 positive summands followed by negative ones.
std::vector<int> signs_for_q(int k, int q);

struct RelationReport {
    bool pass = false;
    double max_deviation = 0.0;
    std::optional<std::pair<int, int>> violated;  // (alpha, beta) of the worst pair
    bool symmetric = true;
};

/// Exact integer check of symmetry and P_a P_b + P_b P_a = 2 delta_ab Id.
RelationReport verify_clifford_relations(const CliffordSystem& sys);

/// Floating-point variant for arbitrary real matrices.
RelationReport verify_clifford_relations(const std::vector<Mat>& P, double tol = 1e-12);

/// q with 2 q delta(m) = trace(P_0 P_1 ... P_m).
int trace_invariant(const CliffordSystem& sys);

/// Product P_0 P_1 ... P_m (exact).
IntMat generator_product(const CliffordSystem& sys);

/// Removes P_index and recomputes q.
CliffordSystem drop_generator(const CliffordSystem& sys, int index);

/// Plain-text dump: header "m l k q", then m+1 blocks of 2l rows of 2l integers.
void write_system(std::ostream& out, const CliffordSystem& sys);
CliffordSystem read_system(std::istream& in);

}  // namespace fkm
