#ifndef TVCC_TESTS_SUPPORT_HPP
#define TVCC_TESTS_SUPPORT_HPP

// Test-only helpers: schoolbook GF(2) arithmetic on plain bit vectors (kept
// independent of tvcc::Poly) and random encoder generators.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "tvcc/encoder.hpp"
#include "tvcc/gf2poly.hpp"

namespace testing {

using Bits = std::vector<int>;  // index i <-> D^i, trailing zeros allowed

inline Bits trim(Bits a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline Bits naive_mul(const Bits& a, const Bits& b) {
    if (a.empty() || b.empty()) return {};
    Bits out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= a[i] & b[j];
    return trim(out);
}

inline Bits naive_add(Bits a, const Bits& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] ^= b[i];
    return trim(a);
}

/// Remainder of long division; b must be nonzero.
inline Bits naive_mod(Bits a, Bits b) {
    a = trim(a);
    b = trim(b);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] ^= b[i];
        a = trim(a);
    }
    return a;
}

inline Bits from_int(std::uint64_t v) {
    Bits out;
    for (; v != 0; v >>= 1) out.push_back(static_cast<int>(v & 1U));
    return out;
}

inline Bits to_bits(const tvcc::Poly& p) {
    Bits out;
    if (p.is_zero()) return out;
    for (std::size_t i = 0; i <= *p.degree(); ++i) out.push_back(p.coeff(i) ? 1 : 0);
    return out;
}

inline tvcc::Poly to_poly(const Bits& b) {
    tvcc::Poly p;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] != 0) p.set_coeff(i, true);
    return p;
}

/// Highest-degree common divisor found by trial division over every polynomial of degree <= the
/// smaller degree. Both inputs nonzero.
inline Bits trial_division_gcd(const Bits& a, const Bits& b) {
    const std::size_t max_deg = std::min(trim(a).size(), trim(b).size()) - 1;
    Bits best{1};
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << (max_deg + 1)); ++v) {
        const Bits d = from_int(v);
        if (naive_mod(a, d).empty() && naive_mod(b, d).empty() && d.size() > best.size()) best = d;
    }
    return best;
}

inline tvcc::Poly random_poly(std::mt19937_64& rng, std::size_t max_degree) {
    std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << (max_degree + 1)) - 1);
    return tvcc::Poly::from_integer(dist(rng));
}

inline tvcc::PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                      std::size_t max_degree) {
    tvcc::PolyMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_poly(rng, max_degree);
    return m;
}

inline tvcc::PeriodicEncoder random_periodic(std::mt19937_64& rng, std::size_t p, std::size_t k, std::size_t n,
                                             std::size_t max_degree) {
    std::vector<tvcc::TimeInvariantEncoder> cs;
    for (std::size_t i = 0; i < p; ++i) cs.emplace_back(random_matrix(rng, k, n, max_degree));
    return tvcc::PeriodicEncoder(std::move(cs));
}

/// Random shape within the given caps (k < n always holds).
struct ShapeCaps {
    std::size_t max_p;
    std::size_t max_k;
    std::size_t max_n;
    std::size_t max_m;
};

inline tvcc::PeriodicEncoder random_periodic(std::mt19937_64& rng, ShapeCaps caps) {
    auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
    const std::size_t p = pick(1, caps.max_p);
    const std::size_t k = pick(1, std::min(caps.max_k, caps.max_n - 1));
    const std::size_t n = pick(k + 1, caps.max_n);
    const std::size_t m = pick(0, caps.max_m);
    return random_periodic(rng, p, k, n, m);
}

inline tvcc::BitStream random_stream(std::mt19937_64& rng, std::size_t width, std::size_t length) {
    std::bernoulli_distribution coin(0.5);
    tvcc::BitStream s(width, length);
    for (std::size_t t = 0; t < length; ++t)
        for (std::size_t j = 0; j < width; ++j) s.set(t, j, coin(rng));
    return s;
}

/// Delays a stream by `epochs` zero tuples, keeping its length.
inline tvcc::BitStream delayed(const tvcc::BitStream& s, std::size_t epochs) {
    tvcc::BitStream out(s.width(), s.size());
    for (std::size_t t = epochs; t < s.size(); ++t)
        for (std::size_t j = 0; j < s.width(); ++j) out.set(t, j, s.bit(t - epochs, j));
    return out;
}

inline tvcc::Poly P(const char* text) { return tvcc::Poly::parse(text); }

}  // namespace testing

#endif
