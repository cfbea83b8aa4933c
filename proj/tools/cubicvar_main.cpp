// cubicvar: exact point-count variance verification for one-parameter cubic families.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cubicvar/harness.hpp"
#include "cubicvar/stats.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int exit_code_for(const cubicvar::Error& e) {
    return e.kind() == cubicvar::ErrorKind::IoError ? kExitIo : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace cubicvar;

    CLI::App app{"Exact variance checks for point counts of cubic families over F_p"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "sweep primes and parameters, brute force vs closed form");
    std::uint64_t p_min = 5, p_max = 61, seed = 1;
    std::string families = "C,B,A,D,T", grid = "full", format = "csv", out_path;
    unsigned threads = 0;
    bool timing = false;
    verify->add_option("--pmin", p_min, "smallest prime")->capture_default_str();
    verify->add_option("--pmax", p_max, "largest prime")->capture_default_str();
    verify->add_option("--families", families, "comma-separated tags from C,B,A,D,T")->capture_default_str();
    verify->add_option("--grid", grid, "full | sample:COUNT")->capture_default_str();
    verify->add_option("--seed", seed, "seed for sampled grids")->capture_default_str();
    verify->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    verify->add_option("--out", out_path, "report path")->required();
    verify->add_option("--threads", threads, "worker threads (0 = auto)")->capture_default_str();
    verify->add_flag("--timing", timing, "record per-row elapsed_ns (breaks byte-identical reports)");

    auto* eval = app.add_subcommand("eval", "verify a single family member");
    std::string family, params;
    std::uint64_t p = 0;
    eval->add_option("--family", family, "C, B, A, D or T")->required();
    eval->add_option("--params", params, "k=v,... (fractions like -1/2 allowed)")->required();
    eval->add_option("--p", p, "prime")->required();

    auto* jac = app.add_subcommand("jacobsthal", "evaluate phi2, psi3 or rho");
    std::string kind;
    std::int64_t c = 0;
    jac->add_option("--kind", kind, "phi2 | psi3 | rho")->required();
    jac->add_option("--c", c, "argument")->required();
    jac->add_option("--p", p, "prime")->required();

    auto* dec = app.add_subcommand("decomp", "print p = A^2 + B^2 and p = A^2 + 3B^2");
    dec->add_option("--p", p, "prime")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) {
            SweepConfig cfg;
            cfg.p_min = p_min;
            cfg.p_max = p_max;
            cfg.families = parse_families(families);
            cfg.grid = parse_grid(grid, seed);
            cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
            cfg.output_path = out_path;
            cfg.threads = threads;
            cfg.timing = timing;
            const SweepResult result = run_sweep(cfg);
            write_report(cfg, result);
            const auto& s = result.summary;
            std::cerr << "rows " << s.rows << ", matches " << s.matches << ", mismatches "
                      << s.mismatches << ", no closed form " << s.no_closed_form << ", errors "
                      << s.errors << '\n';
            return s.ok() ? kExitOk : kExitMismatch;
        }
        if (*eval) {
            if (family.size() != 1) throw Error(ErrorKind::InvalidConfig, "family is a single tag");
            const PrimeContext ctx = make_context(p);
            const FamilyKind k = family_from_tag(family[0]);
            const FamilySpec spec = FamilySpec::make(ctx, k, parse_params(ctx, k, params));
            const VerificationRow row = verify_family(spec);
            const auto fibers = fiber_sum_vector(spec).values;
            std::cout << describe_row(row, &fibers);
            if (!row.error.empty()) return kExitUsage;
            return row.match ? kExitOk : kExitMismatch;
        }
        if (*jac) {
            const PrimeContext ctx = make_context(p);
            const auto report = jacobsthal_report(parse_jacobsthal_kind(kind), c, ctx);
            std::cout << report.to_string() << '\n';
            return report.member ? kExitOk : kExitMismatch;
        }
        if (*dec) {
            std::cout << decomp_report(make_context(p));
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
