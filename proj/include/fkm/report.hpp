#pragma once

#include "curvature.hpp"
#include "topology.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace fkm {

inline constexpr const char* kReportSchema = "fkm-report/1";
inline constexpr const char* kVersion = "1.0.0";

enum class Status { Pass, Fail, Unknown, NotApplicable };

const char* to_string(Status s);
Status status_from_string(const std::string& s);

struct CheckRow {
    std::string name;
    std::string expected;
    std::string observed;
    Status status = Status::Unknown;
    bool operator==(const CheckRow&) const = default;
};

struct CertificateRow {
    std::string source;
    std::string kind;
    double K = 0.0;
    double expected = 0.0;
    std::string comparison;
    double tolerance = 0.0;
    std::string status;
    std::vector<double> X;
    std::vector<double> Y;
    std::vector<double> spectrum;
    int restarts = 0;
    int best_restart = -1;
    bool operator==(const CertificateRow&) const = default;
};

CertificateRow to_row(const CurvatureCertificate& c);

struct FactRow {
    std::string subject;
    std::string key;
    std::string value;
    std::string provenance;
    bool operator==(const FactRow&) const = default;
};

/// Flattens the tri-state fields and provenance notes of a fact table.
std::vector<FactRow> to_rows(const std::string& subject, const TopologyFacts& facts);

struct Report {
    std::string schema = kReportSchema;
    std::string version = kVersion;
    nlohmann::json config = nlohmann::json::object();
    std::vector<CheckRow> checks;
    std::vector<CertificateRow> certificates;
    std::vector<FactRow> facts;
    double wall_clock_ms = 0.0;

    /// Fail if any check failed, otherwise pass.
    Status overall() const;
    void add(std::string name, std::string expected, std::string observed, Status status);
    void add(std::string name, std::string expected, std::string observed, bool pass);
    bool operator==(const Report&) const = default;
};

enum class Format { Json, Csv, Text };

Format format_from_string(const std::string& s);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

std::string emit(const Report& r, Format f);
/// Writes to `path`; throws io on failure.
void emit_to_file(const Report& r, Format f, const std::string& path);

/// Shortest round-trip decimal for a double.
std::string format_double(double v);

}  // namespace fkm
