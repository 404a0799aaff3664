#ifndef TVCC_POLYMATRIX_HPP
#define TVCC_POLYMATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "tvcc/gf2poly.hpp"

namespace tvcc {

/// Dense rows x cols matrix of bits.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}
    BitMatrix(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool operator()(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
    void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }
    bool is_zero() const noexcept;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Dense row-major matrix over GF(2)[D].
class PolyMatrix {
   public:
    PolyMatrix() = default;
    /// Zero matrix; throws ShapeMismatch if either dimension is zero.
    PolyMatrix(std::size_t rows, std::size_t cols);
    /// Throws ShapeMismatch on ragged or empty input.
    PolyMatrix(std::initializer_list<std::initializer_list<Poly>> rows);

    static PolyMatrix identity(std::size_t side);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Poly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Poly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    /// Largest entry degree; nullopt when every entry is zero.
    std::optional<std::size_t> max_degree() const noexcept;

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Poly> entries_;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

/// Largest side accepted by `determinant`.
inline constexpr std::size_t kMaxDeterminantSide = 16;

/// Exact determinant by Laplace expansion memoized over column subsets.
/// Throws ShapeMismatch for non-square input, TooLarge above kMaxDeterminantSide.
Poly determinant(const PolyMatrix& m);

/// Every order x order minor, lexicographic in (row set, column set).
std::vector<Poly> all_minors(const PolyMatrix& m, std::size_t order);

/// GCD of all minors of the given order. Throws RankDeficient when they all vanish.
Poly minor_gcd(const PolyMatrix& m, std::size_t order);

/// Coefficients of D^j of every entry.
BitMatrix coefficient_slice(const PolyMatrix& m, std::size_t j);

}  // namespace tvcc

#endif
