#include "cubicvar/fp_core.hpp"

#include <string>

namespace cubicvar {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    static constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t q : kWitnesses) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kWitnesses) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

struct ContextData {
    std::uint64_t p;
    unsigned mod3;
    unsigned mod4;
    std::vector<std::int8_t> table;  // empty when p exceeds the cap
};

}  // namespace detail

PrimeContext make_context(std::uint64_t p, std::uint64_t table_cap) {
    if (p <= 3) throw Error(ErrorKind::TooSmall, "p must exceed 3, got " + std::to_string(p));
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is composite");
    if (p >= kMaxModulus) throw Error(ErrorKind::BudgetExceeded, "p must be below 2^32");

    auto data = std::make_shared<detail::ContextData>();
    data->p = p;
    data->mod3 = static_cast<unsigned>(p % 3);
    data->mod4 = static_cast<unsigned>(p % 4);
    if (p <= table_cap) {
        data->table.assign(p, -1);
        data->table[0] = 0;
        for (std::uint64_t x = 1; x <= p / 2; ++x) data->table[x * x % p] = 1;
    }
    return PrimeContext(std::move(data));
}

std::uint64_t PrimeContext::p() const noexcept { return data_->p; }
unsigned PrimeContext::mod3() const noexcept { return data_->mod3; }
unsigned PrimeContext::mod4() const noexcept { return data_->mod4; }

std::uint64_t PrimeContext::reduce(std::int64_t v) const noexcept {
    const auto m = static_cast<std::int64_t>(data_->p);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeContext::fraction(std::int64_t num, std::int64_t den) const {
    return mul(reduce(num), inv(reduce(den)));
}

std::uint64_t PrimeContext::add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= data_->p ? s - data_->p : s;
}

std::uint64_t PrimeContext::sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + data_->p - b;
}

std::uint64_t PrimeContext::mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return a * b % data_->p;
}

std::uint64_t PrimeContext::neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : data_->p - a; }

std::uint64_t PrimeContext::pow(std::uint64_t a, std::uint64_t e) const noexcept {
    return powmod(a, e, data_->p);
}

std::uint64_t PrimeContext::inv(std::uint64_t a) const {
    if (a % data_->p == 0) throw Error(ErrorKind::ZeroParameter, "zero has no inverse");
    return powmod(a, data_->p - 2, data_->p);
}

int PrimeContext::chi(std::uint64_t a) const noexcept {
    if (!data_->table.empty()) return data_->table[a];
    return chi_euler(a);
}

int PrimeContext::chi_euler(std::uint64_t a) const noexcept {
    if (a % data_->p == 0) return 0;
    return powmod(a, (data_->p - 1) / 2, data_->p) == 1 ? 1 : -1;
}

bool PrimeContext::has_table() const noexcept { return !data_->table.empty(); }

std::span<const std::int8_t> PrimeContext::table() const {
    if (data_->table.empty()) {
        throw Error(ErrorKind::BudgetExceeded,
                    "no character table for p=" + std::to_string(data_->p));
    }
    return data_->table;
}

CharValue legendre(const FpElem& a) { return {a.context().chi(a.value())}; }

std::span<const std::int8_t> legendre_table(const PrimeContext& ctx) { return ctx.table(); }

Poly::Poly(const PrimeContext& ctx, std::vector<std::uint64_t> coeffs)
    : ctx_(ctx), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c %= ctx_.p();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::from_ints(const PrimeContext& ctx, std::initializer_list<std::int64_t> coeffs) {
    std::vector<std::uint64_t> reduced;
    reduced.reserve(coeffs.size());
    for (std::int64_t c : coeffs) reduced.push_back(ctx.reduce(c));
    return Poly(ctx, std::move(reduced));
}

std::uint64_t Poly::operator()(std::uint64_t x) const noexcept {
    std::uint64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = ctx_.add(ctx_.mul(acc, x), *it);
    }
    return acc;
}

FpElem poly_eval(const Poly& f, const FpElem& x) {
    return FpElem::from_residue(f.context(), f(x.value()));
}

std::uint64_t root_count(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root count of the zero polynomial");
    std::uint64_t n = 0;
    for (std::uint64_t x = 0; x < f.context().p(); ++x) {
        if (f(x) == 0) ++n;
    }
    return n;
}

std::int64_t char_sum(const Poly& f) {
    const auto& ctx = f.context();
    std::int64_t s = 0;
    for (std::uint64_t x = 0; x < ctx.p(); ++x) s += ctx.chi(f(x));
    return s;
}

std::optional<std::uint64_t> sqrt_mod_exhaustive(const PrimeContext& ctx, std::uint64_t a) {
    a %= ctx.p();
    for (std::uint64_t x = 0; x <= ctx.p() / 2; ++x) {
        if (ctx.mul(x, x) == a) return x;
    }
    return std::nullopt;
}

std::optional<std::uint64_t> sqrt_mod_tonelli(const PrimeContext& ctx, std::uint64_t a) {
    const std::uint64_t p = ctx.p();
    a %= p;
    if (a == 0) return 0;
    if (ctx.chi_euler(a) != 1) return std::nullopt;

    std::uint64_t q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t z = 2;
    while (ctx.chi_euler(z) != -1) ++z;

    std::uint64_t m = s;
    std::uint64_t c = ctx.pow(z, q);
    std::uint64_t t = ctx.pow(a, q);
    std::uint64_t r = ctx.pow(a, (q + 1) / 2);
    while (t != 1) {
        std::uint64_t i = 0;
        std::uint64_t t2 = t;
        while (t2 != 1) {
            t2 = ctx.mul(t2, t2);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = ctx.mul(b, b);
        m = i;
        c = ctx.mul(b, b);
        t = ctx.mul(t, c);
        r = ctx.mul(r, b);
    }
    return std::min(r, p - r);
}

std::optional<FpElem> sqrt_mod(const FpElem& a) {
    const auto& ctx = a.context();
    auto root = ctx.p() <= kExhaustiveSqrtBound ? sqrt_mod_exhaustive(ctx, a.value())
                                                : sqrt_mod_tonelli(ctx, a.value());
    if (!root) return std::nullopt;
    return FpElem::from_residue(ctx, *root);
}

}  // namespace cubicvar
