#include "tvcc/catastrophic.hpp"

#include <random>

#include "tvcc/error.hpp"
#include "tvcc/tvece.hpp"

namespace tvcc {

const char* to_string(Verdict v) noexcept {
    return v == Verdict::Catastrophic ? "CATASTROPHIC" : "NON-CATASTROPHIC";
}

CatastrophicReport massey_sain_check(const TimeInvariantEncoder& e) {
    CatastrophicReport report;
    report.f = minor_gcd(e.transfer(), e.inputs());
    auto [delay, rest] = split_delay(report.f);
    report.delay = delay;
    report.g = std::move(rest);
    report.verdict = report.g.is_one() ? Verdict::NonCatastrophic : Verdict::Catastrophic;
    return report;
}

CatastrophicReport periodic_check(const PeriodicEncoder& e) { return massey_sain_check(build_tvece(e).encoder); }

Poly conversion_divisor(const PeriodicEncoder& e) {
    const auto report = periodic_check(e);
    if (report.verdict == Verdict::NonCatastrophic) return Poly::one();
    return inflate(report.g, e.period());
}

RationalPeriodicEncoder convert(const PeriodicEncoder& e) {
    const auto report = periodic_check(e);
    if (report.verdict == Verdict::NonCatastrophic)
        throw NotCatastrophic("encoder is already non-catastrophic (f=" + report.f.to_string() + ")");
    const Poly divisor = inflate(report.g, e.period());

    std::vector<TimeInvariantEncoder> quotients;
    for (const auto& c : e.constituents()) {
        PolyMatrix q(c.inputs(), c.outputs());
        for (std::size_t r = 0; r < c.inputs(); ++r) {
            for (std::size_t col = 0; col < c.outputs(); ++col) {
                auto [quot, rem] = divmod(c.transfer()(r, col), divisor);
                if (!rem.is_zero()) return RationalPeriodicEncoder(e, divisor);
                q(r, col) = std::move(quot);
            }
        }
        quotients.emplace_back(std::move(q));
    }
    return RationalPeriodicEncoder(PeriodicEncoder(std::move(quotients)), Poly::one());
}

bool verify_same_code(const PeriodicEncoder& original, const RationalPeriodicEncoder& converted, std::size_t trials,
                      std::size_t length, std::uint64_t seed) {
    if (original.inputs() != converted.base().inputs() || original.outputs() != converted.base().outputs() ||
        original.period() != converted.base().period())
        throw ShapeMismatch("original and converted encoders differ in shape");

    const Poly divisor = conversion_divisor(original);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        BitStream u(original.inputs(), length);
        for (std::size_t t = 0; t < length; ++t)
            for (std::size_t j = 0; j < original.inputs(); ++j) u.set(t, j, coin(rng));
        const BitStream expected = encode_serial(original, series_divide(u, divisor, length));
        if (encode_rational(converted, u, length) != expected) return false;
    }
    return true;
}

}  // namespace tvcc
