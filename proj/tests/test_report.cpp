#include "fkm/errors.hpp"
#include "fkm/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

using namespace fkm;

namespace {

Report sample_report() {
    Report r;
    r.config = {{"command", "witness"}, {"seed", 3}};
    r.add("first", "equal -5", "-5", true);
    r.add("second, with comma", "<= 1e-8", "2e-13", Status::Pass);
    CurvatureCertificate c;
    c.source = "model g6m1-plus";
    c.X = Vec::Unit(5, 0);
    c.Y = Vec::Unit(5, 4);
    c.K = -5.0;
    c.expected = -5.0;
    c.tolerance = 1e-9;
    c.status = CertificateStatus::Verified;
    c.spectrum = {-std::numeric_limits<double>::infinity(), 1.0};
    r.certificates.push_back(to_row(c));
    r.facts.push_back({"g=4 (4,3)", "cat_m_plus", "3", "definite exception"});
    r.wall_clock_ms = 1.5;
    return r;
}

}  // namespace

TEST_CASE("overall status") {
    Report r;
    CHECK(r.overall() == Status::Pass);
    r.add("a", "x", "x", Status::Unknown);
    r.add("b", "x", "x", Status::NotApplicable);
    CHECK(r.overall() == Status::Pass);
    r.add("c", "x", "y", false);
    CHECK(r.overall() == Status::Fail);
}

TEST_CASE("status and format names") {
    for (Status s : {Status::Pass, Status::Fail, Status::Unknown, Status::NotApplicable})
        CHECK(status_from_string(to_string(s)) == s);
    CHECK(format_from_string("json") == Format::Json);
    CHECK(format_from_string("csv") == Format::Csv);
    CHECK(format_from_string("text") == Format::Text);
    CHECK_THROWS_AS(format_from_string("xml"), Error);
}

TEST_CASE("JSON round trip") {
    const Report r = sample_report();
    const nlohmann::json j = to_json(r);
    CHECK(j.at("schema") == kReportSchema);
    CHECK(j.at("overall") == "pass");
    CHECK(j.at("certificates")[0].at("spectrum")[0] == "-inf");
    const Report back = report_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back == r);
    CHECK(emit(back, Format::Json) == emit(r, Format::Json));
    try {
        report_from_json(nlohmann::json::parse(R"({"schema": "fkm-report/1"})"));
        FAIL("expected io");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Io);
    }
}

TEST_CASE("CSV and text") {
    const Report r = sample_report();
    std::istringstream csv(emit(r, Format::Csv));
    std::string line;
    std::getline(csv, line);
    CHECK(line == "name,expected,observed,status");
    std::getline(csv, line);
    CHECK(line == "first,equal -5,-5,pass");
    std::getline(csv, line);
    CHECK(line == "\"second, with comma\",<= 1e-8,2e-13,pass");
    const std::string text = emit(r, Format::Text);
    CHECK(text.find("[pass] first") != std::string::npos);
    CHECK(text.find("overall: pass") != std::string::npos);
}

TEST_CASE("shortest decimal output") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-5.0) == "-5");
    CHECK(format_double(1e-8) == "1e-08");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    const double v = 0.1 + 0.2;
    CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("writing to a file") {
    const std::string path = "test_report_output.json";
    emit_to_file(sample_report(), Format::Json, path);
    std::ifstream in(path);
    const Report back = report_from_json(nlohmann::json::parse(in));
    CHECK(back == sample_report());
    std::remove(path.c_str());
    CHECK_THROWS_AS(emit_to_file(sample_report(), Format::Json, "/nonexistent-dir/x.json"), Error);
}
