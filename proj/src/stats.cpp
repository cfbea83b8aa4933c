#include "cubicvar/stats.hpp"

#include <string>

#include "cubicvar/error.hpp"

namespace cubicvar {

namespace {

void check_length(std::span<const std::int64_t> values, std::uint64_t p) {
    if (values.size() != p) {
        throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(p) + " entries, got " +
                                                   std::to_string(values.size()));
    }
}

}  // namespace

ExactRational mean(std::span<const std::int64_t> values, std::uint64_t p) {
    check_length(values, p);
    BigInt sum = 0;
    for (std::int64_t v : values) sum += v;
    return {sum, BigInt(p)};
}

ExactRational variance(std::span<const std::int64_t> values, std::uint64_t p) {
    check_length(values, p);
    BigInt sum = 0;
    BigInt sum_sq = 0;
    for (std::int64_t v : values) {
        sum += v;
        sum_sq += BigInt(v) * v;
    }
    const BigInt bp(p);
    return {bp * sum_sq - sum * sum, bp * bp};
}

ExactRational variance_centered(std::span<const std::int64_t> values, std::uint64_t p) {
    const ExactRational m = mean(values, p);
    ExactRational acc;
    for (std::int64_t v : values) {
        const ExactRational d = ExactRational(v) - m;
        acc = acc + d * d;
    }
    return acc / ExactRational(static_cast<std::int64_t>(p));
}

}  // namespace cubicvar
