#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubicvar/families.hpp"
#include "cubicvar/rational.hpp"
#include "cubicvar/theorems.hpp"

namespace cubicvar {

enum class OutputFormat { Csv, Json };

struct GridMode {
    bool sampled = false;
    std::uint64_t count = 0;  // tuples per (prime, family) when sampled
    std::uint64_t seed = 0;
};

struct SweepConfig {
    std::uint64_t p_min = 5;
    std::uint64_t p_max = 61;
    std::vector<FamilyKind> families;
    GridMode grid;
    OutputFormat format = OutputFormat::Csv;
    std::string output_path;
    unsigned threads = 0;  // 0 = hardware concurrency
    bool timing = false;   // when false elapsed_ns is written as 0
};

/// Throws InvalidConfig.
void validate(const SweepConfig& cfg);

struct VerificationRow {
    std::uint64_t p = 0;
    FamilyKind family = FamilyKind::VaryConstant;
    std::vector<std::pair<std::string, std::uint64_t>> params;
    ExactRational brute;
    std::optional<ExactRational> closed;  // nullopt when no closed form applies
    std::vector<Residual> residuals;
    bool match = false;
    std::uint64_t elapsed_ns = 0;
    std::string error;  // nonempty when evaluation threw
};

struct SweepSummary {
    std::size_t rows = 0;
    std::size_t matches = 0;
    std::size_t mismatches = 0;
    std::size_t no_closed_form = 0;
    std::size_t errors = 0;
    bool ok() const noexcept { return mismatches == 0 && errors == 0; }
};

struct SweepResult {
    std::vector<VerificationRow> rows;
    SweepSummary summary;
};

/// Parameter tuples for one (prime, family), sorted ascending.
std::vector<std::vector<std::uint64_t>> parameter_grid(const PrimeContext& ctx, FamilyKind kind,
                                                       const GridMode& grid);

/// Brute-force variance against the closed form for one family member.
VerificationRow verify_family(const FamilySpec& spec, bool timing = false);

/// Rows in canonical order (p, family tag, params); identical for any thread count.
SweepResult run_sweep(const SweepConfig& cfg);

inline constexpr const char* kCsvHeader =
    "p,family,params,brute_num,brute_den,closed_num,closed_den,match,residuals,elapsed_ns";

std::string describe_config(const SweepConfig& cfg);
void write_csv(std::ostream& out, const SweepConfig& cfg, const SweepResult& result);
void write_json(std::ostream& out, const SweepConfig& cfg, const SweepResult& result);
/// Writes to cfg.output_path in cfg.format; throws IoError.
void write_report(const SweepConfig& cfg, const SweepResult& result);

/// "k=v;k=v"
std::string join_params(const std::vector<std::pair<std::string, std::uint64_t>>& params);
std::string join_residuals(const std::vector<Residual>& residuals);

/// Parses "C,B,A" into kinds; throws InvalidConfig.
std::vector<FamilyKind> parse_families(const std::string& text);
/// Parses "full" or "sample:COUNT"; throws InvalidConfig.
GridMode parse_grid(const std::string& text, std::uint64_t seed);
/// Parses "a=0,b=-1/2" against the family's parameter names, reducing mod p.
std::vector<std::uint64_t> parse_params(const PrimeContext& ctx, FamilyKind kind,
                                        const std::string& text);

/// Human-readable single-row report; appends the fiber-sum vector for p <= 61.
std::string describe_row(const VerificationRow& row, const std::vector<std::int64_t>* fibers);

enum class JacobsthalKind { Phi2, Psi3, Rho };
JacobsthalKind parse_jacobsthal_kind(const std::string& text);

struct JacobsthalReport {
    std::int64_t brute = 0;
    std::optional<ClosedFormValue> closed;  // nullopt for rho
    std::string decomposition;              // e.g. "A2=3 B2=2", or "none"
    bool member = true;
    std::string to_string() const;
};

JacobsthalReport jacobsthal_report(JacobsthalKind kind, std::int64_t c, const PrimeContext& ctx);
std::string decomp_report(const PrimeContext& ctx);

}  // namespace cubicvar
