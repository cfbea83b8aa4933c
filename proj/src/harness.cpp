#include "cubicvar/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cubicvar/decomp.hpp"
#include "cubicvar/jacobsthal.hpp"
#include "cubicvar/stats.hpp"

namespace cubicvar {

void validate(const SweepConfig& cfg) {
    if (cfg.p_min < 5) throw Error(ErrorKind::InvalidConfig, "pmin must be at least 5");
    if (cfg.p_min > cfg.p_max) throw Error(ErrorKind::InvalidConfig, "pmin exceeds pmax");
    if (cfg.p_max >= kMaxModulus) throw Error(ErrorKind::InvalidConfig, "pmax must be below 2^32");
    if (cfg.families.empty()) throw Error(ErrorKind::InvalidConfig, "family set is empty");
    if (cfg.grid.sampled && cfg.grid.count == 0) {
        throw Error(ErrorKind::InvalidConfig, "sample count must be at least 1");
    }
}

namespace {

// Number of admissible tuples and the map from an index to a tuple.
std::uint64_t grid_size(std::uint64_t p, FamilyKind kind) {
    switch (kind) {
        case FamilyKind::TwistedSquare: return p - 1;
        case FamilyKind::VaryQuadratic: return p * p - 1;
        default: return p * p;
    }
}

std::vector<std::uint64_t> grid_tuple(std::uint64_t p, FamilyKind kind, std::uint64_t index) {
    switch (kind) {
        case FamilyKind::TwistedSquare: return {index + 1};
        case FamilyKind::VaryQuadratic: ++index; break;  // skip (0, 0)
        default: break;
    }
    return {index / p, index % p};
}

std::vector<std::vector<std::uint64_t>> perturbed_table_tuples(const PrimeContext& ctx) {
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& row : perturbed_table()) {
        out.push_back({ctx.fraction(row.b_num, row.b_den), ctx.fraction(row.c_num, row.c_den)});
    }
    return out;
}

std::uint64_t elapsed_since(std::chrono::steady_clock::time_point start) {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                          std::chrono::steady_clock::now() - start)
                                          .count());
}

}  // namespace

std::vector<std::vector<std::uint64_t>> parameter_grid(const PrimeContext& ctx, FamilyKind kind,
                                                       const GridMode& grid) {
    const std::uint64_t p = ctx.p();
    const std::uint64_t n = grid_size(p, kind);
    std::vector<std::vector<std::uint64_t>> out;

    if (kind == FamilyKind::Perturbed) out = perturbed_table_tuples(ctx);

    if (!grid.sampled) {
        if (kind != FamilyKind::Perturbed) {
            out.reserve(n);
            for (std::uint64_t i = 0; i < n; ++i) out.push_back(grid_tuple(p, kind, i));
        }
    } else if (grid.count >= n) {
        for (std::uint64_t i = 0; i < n; ++i) out.push_back(grid_tuple(p, kind, i));
    } else {
        std::seed_seq seq{static_cast<std::uint32_t>(grid.seed),
                          static_cast<std::uint32_t>(grid.seed >> 32),
                          static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(family_tag(kind))};
        std::mt19937_64 rng(seq);
        std::set<std::uint64_t> picked;
        while (picked.size() < grid.count) picked.insert(rng() % n);
        for (std::uint64_t i : picked) out.push_back(grid_tuple(p, kind, i));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VerificationRow verify_family(const FamilySpec& spec, bool timing) {
    const auto start = std::chrono::steady_clock::now();
    VerificationRow row;
    row.p = spec.context().p();
    row.family = spec.kind();
    const auto names = family_param_names(spec.kind());
    for (std::size_t i = 0; i < names.size(); ++i) row.params.emplace_back(names[i], spec.params()[i]);

    try {
        row.brute = variance(fiber_sum_vector(spec));
        if (auto closed = closed_form_for(spec)) {
            row.closed = closed->value;
            row.residuals = std::move(closed->residuals);
            row.match = row.closed == row.brute;
        } else {
            row.match = true;
        }
    } catch (const std::exception& e) {
        row.error = e.what();
        row.match = false;
    }
    if (timing) row.elapsed_ns = elapsed_since(start);
    return row;
}

SweepResult run_sweep(const SweepConfig& cfg) {
    validate(cfg);

    std::vector<FamilyKind> families = cfg.families;
    std::sort(families.begin(), families.end(),
              [](FamilyKind a, FamilyKind b) { return family_tag(a) < family_tag(b); });
    families.erase(std::unique(families.begin(), families.end()), families.end());

    std::vector<FamilySpec> work;
    for (std::uint64_t p = cfg.p_min; p <= cfg.p_max; ++p) {
        if (!is_prime(p)) continue;
        const PrimeContext ctx = make_context(p);
        for (FamilyKind kind : families) {
            for (const auto& tuple : parameter_grid(ctx, kind, cfg.grid)) {
                work.push_back(FamilySpec::make(ctx, kind, tuple));
            }
        }
    }

    SweepResult result;
    result.rows.resize(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < work.size(); i = next++) {
            result.rows[i] = verify_family(work[i], cfg.timing);
        }
    };
    unsigned width = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    width = static_cast<unsigned>(std::min<std::size_t>(width, std::max<std::size_t>(work.size(), 1)));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < width; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    auto& s = result.summary;
    s.rows = result.rows.size();
    for (const auto& row : result.rows) {
        if (!row.error.empty()) {
            ++s.errors;
        } else if (!row.closed) {
            ++s.no_closed_form;
        } else if (row.match) {
            ++s.matches;
        } else {
            ++s.mismatches;
        }
    }
    return result;
}

std::string join_params(const std::vector<std::pair<std::string, std::uint64_t>>& params) {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty()) out += ';';
        out += k + "=" + std::to_string(v);
    }
    return out;
}

std::string join_residuals(const std::vector<Residual>& residuals) {
    std::string out;
    for (const auto& r : residuals) {
        if (!out.empty()) out += ';';
        out += r.name + "=" + std::to_string(r.value);
    }
    return out;
}

namespace {

std::string families_text(const SweepConfig& cfg) {
    std::string out;
    for (FamilyKind k : cfg.families) {
        if (!out.empty()) out += ',';
        out += family_tag(k);
    }
    return out;
}

std::string grid_text(const GridMode& g) {
    return g.sampled ? "sample:" + std::to_string(g.count) : "full";
}

std::string row_residuals(const VerificationRow& row) {
    std::string out = join_residuals(row.residuals);
    if (!row.error.empty()) {
        std::string e = row.error;
        std::replace(e.begin(), e.end(), ',', ' ');
        std::replace(e.begin(), e.end(), ';', ' ');
        out += (out.empty() ? "" : ";") + std::string("error=") + e;
    }
    return out;
}

}  // namespace

std::string describe_config(const SweepConfig& cfg) {
    std::ostringstream os;
    os << "pmin=" << cfg.p_min << " pmax=" << cfg.p_max << " families=" << families_text(cfg)
       << " grid=" << grid_text(cfg.grid) << " seed=" << cfg.grid.seed;
    return os.str();
}

void write_csv(std::ostream& out, const SweepConfig& cfg, const SweepResult& result) {
    out << "# cubicvar verify " << describe_config(cfg) << '\n';
    out << kCsvHeader << '\n';
    for (const auto& row : result.rows) {
        out << row.p << ',' << family_tag(row.family) << ',' << join_params(row.params) << ','
            << row.brute.num() << ',' << row.brute.den() << ',';
        if (row.closed) {
            out << row.closed->num() << ',' << row.closed->den();
        } else {
            out << "n/a,n/a";
        }
        out << ',' << (row.match ? "true" : "false") << ',' << row_residuals(row) << ','
            << row.elapsed_ns << '\n';
    }
}

void write_json(std::ostream& out, const SweepConfig& cfg, const SweepResult& result) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["config"] = {{"pmin", cfg.p_min},
                     {"pmax", cfg.p_max},
                     {"families", families_text(cfg)},
                     {"grid", grid_text(cfg.grid)},
                     {"seed", cfg.grid.seed}};
    ordered_json rows = ordered_json::array();
    for (const auto& row : result.rows) {
        ordered_json r;
        r["p"] = row.p;
        r["family"] = std::string(1, family_tag(row.family));
        r["params"] = join_params(row.params);
        r["brute_num"] = row.brute.num().str();
        r["brute_den"] = row.brute.den().str();
        r["closed_num"] = row.closed ? ordered_json(row.closed->num().str()) : ordered_json("n/a");
        r["closed_den"] = row.closed ? ordered_json(row.closed->den().str()) : ordered_json("n/a");
        r["match"] = row.match;
        r["residuals"] = row_residuals(row);
        r["elapsed_ns"] = row.elapsed_ns;
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    const auto& s = result.summary;
    doc["summary"] = {{"rows", s.rows},
                      {"matches", s.matches},
                      {"mismatches", s.mismatches},
                      {"no_closed_form", s.no_closed_form},
                      {"errors", s.errors}};
    out << doc.dump(2) << '\n';
}

void write_report(const SweepConfig& cfg, const SweepResult& result) {
    std::ofstream out(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot open " + cfg.output_path);
    if (cfg.format == OutputFormat::Csv) {
        write_csv(out, cfg, result);
    } else {
        write_json(out, cfg, result);
    }
    out.flush();
    if (!out) throw Error(ErrorKind::IoError, "failed writing " + cfg.output_path);
}

std::vector<FamilyKind> parse_families(const std::string& text) {
    std::vector<FamilyKind> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        if (item.size() != 1) throw Error(ErrorKind::InvalidConfig, "bad family '" + item + "'");
        out.push_back(family_from_tag(item[0]));
    }
    return out;
}

GridMode parse_grid(const std::string& text, std::uint64_t seed) {
    GridMode g;
    g.seed = seed;
    if (text == "full") return g;
    const std::string prefix = "sample:";
    if (text.rfind(prefix, 0) == 0) {
        try {
            std::size_t used = 0;
            const std::string n = text.substr(prefix.size());
            g.count = std::stoull(n, &used);
            if (used != n.size() || n.front() == '-') throw std::invalid_argument(n);
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidConfig, "bad sample count in '" + text + "'");
        }
        g.sampled = true;
        if (g.count == 0) throw Error(ErrorKind::InvalidConfig, "sample count must be at least 1");
        return g;
    }
    throw Error(ErrorKind::InvalidConfig, "grid must be 'full' or 'sample:COUNT'");
}

namespace {

std::int64_t parse_int(const std::string& s) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size()) throw Error(ErrorKind::InvalidConfig, "bad integer '" + s + "'");
    return v;
}

std::uint64_t parse_field_value(const PrimeContext& ctx, const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return ctx.reduce(parse_int(s));
    const std::int64_t den = parse_int(s.substr(slash + 1));
    if (ctx.reduce(den) == 0) throw Error(ErrorKind::InvalidConfig, "denominator is 0 mod p in '" + s + "'");
    return ctx.fraction(parse_int(s.substr(0, slash)), den);
}

}  // namespace

std::vector<std::uint64_t> parse_params(const PrimeContext& ctx, FamilyKind kind,
                                        const std::string& text) {
    const auto names = family_param_names(kind);
    std::vector<std::optional<std::uint64_t>> values(names.size());
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::InvalidConfig, "expected k=v, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        auto it = std::find(names.begin(), names.end(), key);
        if (it == names.end()) {
            throw Error(ErrorKind::InvalidConfig,
                        "family " + std::string(1, family_tag(kind)) + " has no parameter '" + key + "'");
        }
        values[static_cast<std::size_t>(it - names.begin())] = parse_field_value(ctx, item.substr(eq + 1));
    }
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!values[i]) throw Error(ErrorKind::InvalidConfig, "missing parameter '" + names[i] + "'");
        out.push_back(*values[i]);
    }
    return out;
}

std::string describe_row(const VerificationRow& row, const std::vector<std::int64_t>* fibers) {
    std::ostringstream os;
    os << "family " << family_tag(row.family) << " p=" << row.p << " params " << join_params(row.params)
       << '\n';
    os << "brute:    " << row.brute.to_string() << '\n';
    os << "closed:   " << (row.closed ? row.closed->to_string() : std::string("n/a")) << '\n';
    if (!row.residuals.empty()) os << "residuals: " << join_residuals(row.residuals) << '\n';
    if (!row.error.empty()) os << "error:    " << row.error << '\n';
    os << "match:    " << (row.match ? "yes" : "NO") << '\n';
    if (fibers != nullptr && row.p <= 61) {
        os << "fiber sums:";
        for (std::int64_t v : *fibers) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

JacobsthalKind parse_jacobsthal_kind(const std::string& text) {
    if (text == "phi2") return JacobsthalKind::Phi2;
    if (text == "psi3") return JacobsthalKind::Psi3;
    if (text == "rho") return JacobsthalKind::Rho;
    throw Error(ErrorKind::InvalidConfig, "kind must be phi2, psi3 or rho");
}

std::string JacobsthalReport::to_string() const {
    std::ostringstream os;
    os << "brute " << brute;
    if (closed) {
        os << ", closed " << (closed->is_exact() ? "Exact " : "") << closed->to_string();
        os << ", " << decomposition << ", " << (member ? "member" : "NOT A MEMBER");
    } else {
        os << " (no closed form)";
    }
    return os.str();
}

JacobsthalReport jacobsthal_report(JacobsthalKind kind, std::int64_t c, const PrimeContext& ctx) {
    const FpElem e(ctx, c);
    JacobsthalReport r;
    switch (kind) {
        case JacobsthalKind::Phi2: {
            r.brute = phi2_brute(e);
            r.closed = phi2_closed(e);
            if (ctx.mod4() == 1) {
                const auto d = two_square(ctx);
                r.decomposition = "A2=" + std::to_string(d.a2) + " B2=" + std::to_string(d.b2);
            } else {
                r.decomposition = "p = 3 mod 4";
            }
            break;
        }
        case JacobsthalKind::Psi3: {
            r.brute = psi3_brute(e);
            r.closed = psi3_closed(e);
            if (ctx.mod3() == 1) {
                const auto d = eisenstein(ctx);
                r.decomposition = "A3=" + std::to_string(d.a3) + " B3=" + std::to_string(d.b3);
            } else {
                r.decomposition = "p = 2 mod 3";
            }
            break;
        }
        case JacobsthalKind::Rho:
            r.brute = rho_brute(e);
            r.decomposition = "none";
            break;
    }
    if (r.closed) r.member = r.closed->contains(r.brute);
    return r;
}

std::string decomp_report(const PrimeContext& ctx) {
    std::ostringstream os;
    os << "p=" << ctx.p() << '\n';
    if (ctx.mod4() == 1) {
        const auto d = two_square(ctx);
        os << "two squares: A2=" << d.a2 << " B2=" << d.b2 << '\n';
    } else {
        os << "two squares: n/a (p = 3 mod 4)\n";
    }
    if (ctx.mod3() == 1) {
        const auto d = eisenstein(ctx);
        os << "A^2+3B^2:    A3=" << d.a3 << " B3=" << d.b3 << '\n';
    } else {
        os << "A^2+3B^2:    n/a (p = 2 mod 3)\n";
    }
    return os.str();
}

}  // namespace cubicvar
