#include "fkm/errors.hpp"
#include "fkm/report.hpp"
#include "fkm/runner.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"OT-FKM isoparametric families: construction, curvature and topology checks"};
    fkm::RunConfig cfg;
    std::optional<std::uint64_t> seed;
    std::string format = "json";

    app.add_option("command", cfg.command, "construct | verify | sample | curvature | classify | witness | report")
        ->required()
        ->check(CLI::IsMember({"construct", "verify", "sample", "curvature", "classify", "witness", "report"}));
    app.add_option("--m", cfg.m, "number of symmetric generators minus one");
    app.add_option("--k", cfg.k, "number of irreducible summands");
    app.add_option("--q", cfg.q, "trace invariant (m = 0 mod 4)");
    app.add_option("--case", cfg.case_id, "model, registry, homogeneous or witness case id");
    app.add_option("--theta", cfg.theta, "hypersurface parameter in (0, pi/g)");
    app.add_option("--samples", cfg.samples, "sample points")->capture_default_str();
    app.add_option("--restarts", cfg.restarts, "scan restarts")->capture_default_str();
    app.add_option("--seed", seed, "64-bit seed (overrides FKM_SEED)");
    app.add_option("--tol", cfg.tol, "tolerance for identity checks")->capture_default_str();
    app.add_option("--format", format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.seed = fkm::resolve_seed(seed, std::getenv("FKM_SEED"));
        cfg.format = fkm::format_from_string(format);
    } catch (const fkm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    const fkm::RunResult res = fkm::run(cfg);
    if (!res.error.empty()) std::cerr << "error: " << res.error << '\n';
    if (res.exit_code == 2) return 2;
    try {
        if (cfg.out.empty())
            std::cout << fkm::emit(res.report, cfg.format);
        else
            fkm::emit_to_file(res.report, cfg.format, cfg.out);
    } catch (const fkm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return res.exit_code;
}
