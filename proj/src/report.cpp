#include "fkm/report.hpp"

#include "fkm/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace fkm {

using nlohmann::json;

const char* to_string(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Unknown: return "unknown";
    case Status::NotApplicable: return "not-applicable";
    }
    return "unknown";
}

Status status_from_string(const std::string& s) {
    if (s == "pass") return Status::Pass;
    if (s == "fail") return Status::Fail;
    if (s == "unknown") return Status::Unknown;
    if (s == "not-applicable") return Status::NotApplicable;
    throw Error(ErrorKind::InvalidArgument, "unknown status '" + s + "'");
}

Format format_from_string(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw Error(ErrorKind::InvalidArgument, "format must be json, csv or text");
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

// JSON has no infinities; those travel as strings.
json num(double v) {
    if (std::isfinite(v)) return v;
    return format_double(v);
}

double num_from(const json& j) {
    if (j.is_number()) return j.get<double>();
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    return std::numeric_limits<double>::quiet_NaN();
}

json nums(const std::vector<double>& v) {
    json a = json::array();
    for (double d : v) a.push_back(num(d));
    return a;
}

std::vector<double> nums_from(const json& j) {
    std::vector<double> v;
    for (const auto& e : j) v.push_back(num_from(e));
    return v;
}

std::vector<double> to_std(const Vec& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

CertificateRow to_row(const CurvatureCertificate& c) {
    CertificateRow r;
    r.source = c.source;
    r.kind = to_string(c.kind);
    r.K = c.K;
    r.expected = c.expected;
    r.comparison = to_string(c.comparison);
    r.tolerance = c.tolerance;
    r.status = to_string(c.status);
    r.X = to_std(c.X);
    r.Y = to_std(c.Y);
    r.spectrum = c.spectrum;
    r.restarts = c.restarts;
    r.best_restart = c.best_restart;
    return r;
}

std::vector<FactRow> to_rows(const std::string& subject, const TopologyFacts& t) {
    std::vector<FactRow> rows;
    auto add = [&](const std::string& key, const std::string& value) {
        rows.push_back({subject, key, value, t.provenance_of(key)});
    };
    add("family", t.family.label());
    if (t.q) add("q", std::to_string(*t.q));
    add("xi_trivial", to_string(t.xi_trivial));
    add("eta_trivial", to_string(t.eta_trivial));
    auto product = [&](const std::string& key, const ProductType& p) {
        add(key + ".homotopy", to_string(p.homotopy));
        add(key + ".homeo", to_string(p.homeo));
        add(key + ".diffeo", to_string(p.diffeo));
    };
    product("m_minus_product", t.m_minus_product);
    product("m_plus_product", t.m_plus_product);
    product("hypersurface_product", t.hypersurface_product);
    add("m_minus_parallelizable", to_string(t.m_minus_parallelizable));
    add("m_plus_parallelizable", to_string(t.m_plus_parallelizable));
    add("hypersurface_parallelizable", to_string(t.hypersurface_parallelizable));
    add("normal_bundle_m_minus_trivial", to_string(t.normal_bundle_m_minus_trivial));
    add("cat_m_plus", t.cat_m_plus.str());
    add("cat_m_minus", t.cat_m_minus.str());
    add("cat_hypersurface", t.cat_hypersurface.str());
    for (const Fact& f : t.provenance) {
        bool seen = false;
        for (const auto& r : rows) seen = seen || r.key == f.key;
        if (!seen) rows.push_back({subject, f.key, f.value, f.provenance});
    }
    // Product rows carry the provenance of their parent key.
    for (auto& r : rows) {
        const auto dot = r.key.find('.');
        if (r.provenance.empty() && dot != std::string::npos) r.provenance = t.provenance_of(r.key.substr(0, dot));
    }
    return rows;
}

Status Report::overall() const {
    for (const auto& c : checks)
        if (c.status == Status::Fail) return Status::Fail;
    return Status::Pass;
}

void Report::add(std::string name, std::string expected, std::string observed, Status status) {
    checks.push_back({std::move(name), std::move(expected), std::move(observed), status});
}

void Report::add(std::string name, std::string expected, std::string observed, bool pass) {
    add(std::move(name), std::move(expected), std::move(observed), pass ? Status::Pass : Status::Fail);
}

json to_json(const Report& r) {
    json j;
    j["schema"] = r.schema;
    j["version"] = r.version;
    j["config"] = r.config;
    j["overall"] = to_string(r.overall());
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"expected", c.expected}, {"observed", c.observed},
                          {"status", to_string(c.status)}});
    j["checks"] = checks;
    json certs = json::array();
    for (const auto& c : r.certificates)
        certs.push_back({{"source", c.source},
                         {"kind", c.kind},
                         {"K", num(c.K)},
                         {"expected", num(c.expected)},
                         {"comparison", c.comparison},
                         {"tolerance", num(c.tolerance)},
                         {"status", c.status},
                         {"X", nums(c.X)},
                         {"Y", nums(c.Y)},
                         {"spectrum", nums(c.spectrum)},
                         {"restarts", c.restarts},
                         {"best_restart", c.best_restart}});
    j["certificates"] = certs;
    json facts = json::array();
    for (const auto& f : r.facts)
        facts.push_back({{"subject", f.subject}, {"key", f.key}, {"value", f.value}, {"provenance", f.provenance}});
    j["facts"] = facts;
    j["wall_clock_ms"] = num(r.wall_clock_ms);
    return j;
}

Report report_from_json(const json& j) {
    Report r;
    try {
        r.schema = j.at("schema").get<std::string>();
        r.version = j.at("version").get<std::string>();
        r.config = j.at("config");
        for (const auto& c : j.at("checks"))
            r.checks.push_back({c.at("name").get<std::string>(), c.at("expected").get<std::string>(),
                                c.at("observed").get<std::string>(),
                                status_from_string(c.at("status").get<std::string>())});
        for (const auto& c : j.at("certificates")) {
            CertificateRow row;
            row.source = c.at("source").get<std::string>();
            row.kind = c.at("kind").get<std::string>();
            row.K = num_from(c.at("K"));
            row.expected = num_from(c.at("expected"));
            row.comparison = c.at("comparison").get<std::string>();
            row.tolerance = num_from(c.at("tolerance"));
            row.status = c.at("status").get<std::string>();
            row.X = nums_from(c.at("X"));
            row.Y = nums_from(c.at("Y"));
            row.spectrum = nums_from(c.at("spectrum"));
            row.restarts = c.at("restarts").get<int>();
            row.best_restart = c.at("best_restart").get<int>();
            r.certificates.push_back(std::move(row));
        }
        for (const auto& f : j.at("facts"))
            r.facts.push_back({f.at("subject").get<std::string>(), f.at("key").get<std::string>(),
                               f.at("value").get<std::string>(), f.at("provenance").get<std::string>()});
        r.wall_clock_ms = num_from(j.at("wall_clock_ms"));
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Io, std::string("malformed report: ") + e.what());
    }
    if (r.schema != kReportSchema) throw Error(ErrorKind::Io, "unsupported report schema '" + r.schema + "'");
    return r;
}

std::string emit(const Report& r, Format f) {
    std::ostringstream out;
    switch (f) {
    case Format::Json: out << to_json(r).dump(2) << '\n'; break;
    case Format::Csv:
        out << "name,expected,observed,status\n";
        for (const auto& c : r.checks)
            out << csv_field(c.name) << ',' << csv_field(c.expected) << ',' << csv_field(c.observed) << ','
                << to_string(c.status) << '\n';
        break;
    case Format::Text: {
        out << "fkm " << r.version << "  command: " << r.config.value("command", std::string("?")) << '\n';
        for (const auto& c : r.checks)
            out << '[' << to_string(c.status) << "] " << c.name << ": observed " << c.observed << ", expected "
                << c.expected << '\n';
        if (!r.facts.empty()) out << "facts:\n";
        for (const auto& fr : r.facts) {
            out << "  " << fr.subject << ' ' << fr.key << " = " << fr.value;
            if (!fr.provenance.empty()) out << "  (" << fr.provenance << ')';
            out << '\n';
        }
        out << "overall: " << to_string(r.overall()) << "  (" << r.checks.size() << " checks, "
            << format_double(r.wall_clock_ms) << " ms)\n";
        break;
    }
    }
    return out.str();
}

void emit_to_file(const Report& r, Format f, const std::string& path) {
    std::ofstream file(path);
    if (!file) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
    file << emit(r, f);
    if (!file) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

}  // namespace fkm
