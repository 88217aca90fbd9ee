#pragma once

#include "clifford.hpp"
#include "family.hpp"
#include "report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fkm {

struct RunConfig {
    std::string command;
    std::optional<int> m;
    std::optional<int> k;
    std::optional<int> q;
    std::optional<std::string> case_id;
    std::optional<double> theta;
    std::uint64_t seed = 0;
    int restarts = 200;
    int samples = 100;
    double tol = 1e-8;
    std::string out;
    Format format = Format::Json;
};

nlohmann::json config_to_json(const RunConfig& c);

/// The --seed flag wins; otherwise FKM_SEED (if set and parseable); otherwise 0.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char* env_value);

struct FamilyParams {
    int m = 1;
    int k = 1;
    int q = 0;
    bool operator==(const FamilyParams&) const = default;
};

/// Every (m, k, q) with m <= max_m, k <= max_k and m2 >= 1. For m = 0 (mod 4) one entry per
/// q in {k, k - 2, ..., k mod 2}; q = 0 otherwise.
std::vector<FamilyParams> constructible_families(int max_m, int max_k);

/// Validates (m, k, q) and builds the system. q defaults to k when m = 0 (mod 4) and must be 0 otherwise.
CliffordSystem build_family(int m, int k, std::optional<int> q);

/// A focal submanifold whose curvature sign is tested by scanning.
struct ScanTarget {
    std::optional<FamilyParams> family;  // OT-FKM
    std::optional<std::string> model;  // homogeneous model case id
    FocalSide side = FocalSide::Plus;
    std::string label() const;
};

/// Focal submanifolds expected to be non-negatively curved: (2,1) M+, (1,2) M-, (1,6) M-, definite (4,3) M+, (6,1) M+.
std::vector<ScanTarget> nonnegative_targets();
/// Every OT-FKM focal submanifold with m <= 9, k <= 4 expected to have negative curvature somewhere,
/// plus the negatively curved homogeneous models.
std::vector<ScanTarget> negative_targets();

/// Shape operators at a seeded point (OT-FKM) or of the model, and the family descriptor.
struct ScanInput {
    FamilyDescriptor family;
    FocalSide side = FocalSide::Plus;
    std::vector<Mat> shape_ops;
    int dim = 0;
};
ScanInput scan_input(const ScanTarget& t, std::uint64_t seed);

struct RunResult {
    Report report;
    int exit_code = 0;  // 0 all pass, 1 any failure, 2 usage error
    std::string error;
};

RunResult run(const RunConfig& config);

}  // namespace fkm
