#include "tvcc/gf2poly.hpp"

#include <algorithm>
#include <bit>

#include "tvcc/error.hpp"

namespace tvcc {

namespace {

constexpr std::size_t kWordBits = 64;

thread_local ops::Counters g_counters;

}  // namespace

Poly Poly::from_exponents(std::initializer_list<std::size_t> exponents) {
    Poly p;
    for (std::size_t e : exponents) p.set_coeff(e, !p.coeff(e));
    return p;
}

Poly Poly::monomial(std::size_t degree) {
    Poly p;
    p.set_coeff(degree, true);
    return p;
}

Poly Poly::parse(std::string_view text) {
    if (text.empty()) throw InvalidArgument("empty polynomial string");
    Poly p;
    p.words_.assign((text.size() + kWordBits - 1) / kWordBits, 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case '0':
                break;
            case '1':
                p.words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
                break;
            default:
                throw InvalidArgument("invalid character '" + std::string(1, text[i]) + "' in polynomial \"" +
                                      std::string(text) + "\"");
        }
    }
    p.normalize();
    return p;
}

Poly Poly::from_integer(std::uint64_t value) {
    Poly p;
    if (value != 0) p.words_.push_back(value);
    return p;
}

std::optional<std::size_t> Poly::degree() const noexcept {
    if (words_.empty()) return std::nullopt;
    return (words_.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(words_.back()));
}

bool Poly::coeff(std::size_t i) const noexcept {
    const std::size_t w = i / kWordBits;
    if (w >= words_.size()) return false;
    return (words_[w] >> (i % kWordBits)) & 1U;
}

void Poly::set_coeff(std::size_t i, bool value) {
    const std::size_t w = i / kWordBits;
    if (w >= words_.size()) {
        if (!value) return;
        words_.resize(w + 1, 0);
    }
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
        words_[w] |= mask;
    else
        words_[w] &= ~mask;
    normalize();
}

std::size_t Poly::weight() const noexcept {
    std::size_t w = 0;
    for (std::uint64_t word : words_) w += std::popcount(word);
    return w;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    const std::size_t deg = *degree();
    std::string s(deg + 1, '0');
    for (std::size_t i = 0; i <= deg; ++i)
        if (coeff(i)) s[i] = '1';
    return s;
}

std::string Poly::to_octal() const {
    if (is_zero()) return "0";
    const std::size_t deg = *degree();
    std::string s;
    for (std::size_t group = 0; group * 3 <= deg; ++group) {
        int digit = 0;
        for (std::size_t b = 0; b < 3; ++b)
            if (coeff(group * 3 + b)) digit |= 1 << b;
        s.push_back(static_cast<char>('0' + digit));
    }
    std::reverse(s.begin(), s.end());
    return s;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    *this = *this * rhs;
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    ++g_counters.multiplications;
    if (lhs.is_zero() || rhs.is_zero()) return {};
    g_counters.coefficient_ops += (*lhs.degree() + 1) * (*rhs.degree() + 1);

    const Poly& sparse = lhs.weight() <= rhs.weight() ? lhs : rhs;
    const Poly& dense = &sparse == &lhs ? rhs : lhs;
    Poly out;
    out.words_.assign(lhs.words_.size() + rhs.words_.size(), 0);
    for (std::size_t w = 0; w < sparse.words_.size(); ++w) {
        std::uint64_t bits = sparse.words_[w];
        while (bits != 0) {
            const std::size_t b = std::countr_zero(bits);
            bits &= bits - 1;
            out.xor_shifted(dense, w * kWordBits + b);
        }
    }
    out.normalize();
    return out;
}

Poly Poly::shifted(std::size_t shift) const {
    if (is_zero()) return {};
    Poly out;
    out.words_.assign(words_.size() + shift / kWordBits + 1, 0);
    out.xor_shifted(*this, shift);
    out.normalize();
    return out;
}

void Poly::normalize() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

// Caller guarantees words_ is long enough to hold other << shift.
void Poly::xor_shifted(const Poly& other, std::size_t shift) {
    const std::size_t word_shift = shift / kWordBits;
    const std::size_t bit_shift = shift % kWordBits;
    for (std::size_t i = 0; i < other.words_.size(); ++i) {
        const std::uint64_t w = other.words_[i];
        words_[i + word_shift] ^= w << bit_shift;
        if (bit_shift != 0 && i + word_shift + 1 < words_.size()) words_[i + word_shift + 1] ^= w >> (kWordBits - bit_shift);
    }
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    const std::size_t deg_b = *b.degree();
    Poly quotient;
    Poly remainder = a;
    while (!remainder.is_zero() && *remainder.degree() >= deg_b) {
        const std::size_t shift = *remainder.degree() - deg_b;
        quotient.set_coeff(shift, true);
        remainder += b.shifted(shift);
        ++g_counters.division_steps;
        g_counters.coefficient_ops += deg_b + 1;
    }
    return {std::move(quotient), std::move(remainder)};
}

Poly gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly gcd_many(std::span<const Poly> polys) {
    Poly acc;
    for (const Poly& p : polys) {
        if (p.is_zero()) continue;
        acc = acc.is_zero() ? p : gcd(std::move(acc), p);
        if (acc.is_one()) break;
    }
    if (acc.is_zero()) throw InvalidArgument("gcd of an all-zero list");
    return acc;
}

Poly inflate(const Poly& a, std::size_t p) {
    if (p == 0) throw InvalidArgument("inflation factor must be positive");
    if (p == 1 || a.is_zero()) return a;
    Poly out;
    const std::size_t deg = *a.degree();
    for (std::size_t i = 0; i <= deg; ++i)
        if (a.coeff(i)) out.set_coeff(i * p, true);
    return out;
}

DelaySplit split_delay(const Poly& a) {
    if (a.is_zero()) throw InvalidArgument("split_delay of the zero polynomial");
    std::size_t delay = 0;
    while (!a.coeff(delay)) ++delay;
    Poly rest;
    const std::size_t deg = *a.degree();
    for (std::size_t i = delay; i <= deg; ++i)
        if (a.coeff(i)) rest.set_coeff(i - delay, true);
    return {delay, std::move(rest)};
}

namespace ops {

Scope::Scope() : saved_(g_counters) { g_counters = {}; }

Scope::~Scope() {
    g_counters.multiplications += saved_.multiplications;
    g_counters.coefficient_ops += saved_.coefficient_ops;
    g_counters.division_steps += saved_.division_steps;
}

Counters Scope::counters() const { return g_counters; }

}  // namespace ops

}  // namespace tvcc
