#ifndef TVCC_GF2POLY_HPP
#define TVCC_GF2POLY_HPP

/*
 * Polynomials over GF(2) in the delay indeterminate D.
 *
 * Coefficients are packed little-endian by degree: bit i of the storage is the
 * coefficient of D^i. The textual form follows the same order, so "11" is 1+D
 * and "101" is 1+D^2. The zero polynomial has no stored words and no degree.
 */

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tvcc {

class Poly {
   public:
    Poly() = default;

    /// Polynomial with a 1 at each listed exponent (repeated exponents cancel).
    static Poly from_exponents(std::initializer_list<std::size_t> exponents);
    static Poly monomial(std::size_t degree);
    static Poly one() { return monomial(0); }

    /// Parses the little-endian binary form; throws InvalidArgument on an empty
    /// string or a character outside {0,1}.
    static Poly parse(std::string_view text);

    /// Bit i of `value` becomes the coefficient of D^i.
    static Poly from_integer(std::uint64_t value);

    bool is_zero() const noexcept { return words_.empty(); }
    bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;

    bool coeff(std::size_t i) const noexcept;
    void set_coeff(std::size_t i, bool value);
    bool constant_term() const noexcept { return coeff(0); }

    std::size_t weight() const noexcept;

    /// Little-endian binary text; "0" for the zero polynomial.
    std::string to_string() const;
    /// Octal of the integer sum c_i 2^i, i.e. the degree-descending bit string in 3-bit groups.
    std::string to_octal() const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    Poly& operator+=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend bool operator==(const Poly&, const Poly&) = default;

    /// Multiplies by D^shift.
    Poly shifted(std::size_t shift) const;

   private:
    void normalize() noexcept;
    void xor_shifted(const Poly& other, std::size_t shift);

    std::vector<std::uint64_t> words_;
};

/// Quotient and remainder with a = q*b + r, deg r < deg b. Throws DivisionByZero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Greatest common divisor (monic by construction). Throws InvalidArgument when both are zero.
Poly gcd(Poly a, Poly b);

/// Pairwise gcd over the nonzero entries. Throws InvalidArgument when all are zero.
Poly gcd_many(std::span<const Poly> polys);

/// Substitutes D -> D^p.
Poly inflate(const Poly& a, std::size_t p);

struct DelaySplit {
    std::size_t delay = 0;
    Poly rest;
};

/// a = D^delay * rest with rest(0) = 1. Throws InvalidArgument on zero.
DelaySplit split_delay(const Poly& a);

namespace ops {

/// Abstract arithmetic cost counters for the current thread.
///
/// A product of degrees a and b is charged (a+1)(b+1) coefficient operations,
/// one division reduction step against a divisor of degree d is charged d+1.
struct Counters {
    std::uint64_t multiplications = 0;
    std::uint64_t coefficient_ops = 0;
    std::uint64_t division_steps = 0;
};

/// Resets the thread-local counters on construction; read them back with `counters()`.
class Scope {
   public:
    Scope();
    ~Scope();
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

    Counters counters() const;

   private:
    Counters saved_;
};

}  // namespace ops

}  // namespace tvcc

#endif
