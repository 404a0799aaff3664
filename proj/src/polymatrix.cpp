#include "tvcc/polymatrix.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "tvcc/error.hpp"

namespace tvcc {

namespace {

// Advances `idx` (strictly increasing, values < n) to the next combination in lex order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    return idx;
}

// Determinant of the submatrix picked by `rows` x `cols` (equal sizes).
//
// dp[mask] holds the determinant of the leading popcount(mask) selected rows
// against the selected columns in mask. Signs vanish in characteristic 2.
Poly sub_determinant(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    const std::size_t side = rows.size();
    if (side == 0) return Poly::one();
    std::vector<Poly> dp(std::size_t{1} << side);
    dp[0] = Poly::one();
    for (std::uint32_t mask = 1; mask < dp.size(); ++mask) {
        const std::size_t row = rows[std::popcount(mask) - 1];
        Poly acc;
        for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
            const std::size_t c = std::countr_zero(bits);
            const Poly& entry = m(row, cols[c]);
            const Poly& rest = dp[mask & ~(std::uint32_t{1} << c)];
            if (entry.is_zero() || rest.is_zero()) continue;
            acc += entry * rest;
        }
        dp[mask] = std::move(acc);
    }
    return dp.back();
}

}  // namespace

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ShapeMismatch("ragged bit matrix literal");
        for (int v : row) bits_.push_back(v != 0 ? 1 : 0);
    }
}

bool BitMatrix::is_zero() const noexcept {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw ShapeMismatch("polynomial matrix dimensions must be positive");
}

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<Poly>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    if (rows_ == 0 || cols_ == 0) throw ShapeMismatch("polynomial matrix dimensions must be positive");
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ShapeMismatch("ragged polynomial matrix literal");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

PolyMatrix PolyMatrix::identity(std::size_t side) {
    PolyMatrix m(side, side);
    for (std::size_t i = 0; i < side; ++i) m(i, i) = Poly::one();
    return m;
}

std::optional<std::size_t> PolyMatrix::max_degree() const noexcept {
    std::optional<std::size_t> best;
    for (const Poly& e : entries_) {
        const auto d = e.degree();
        if (d && (!best || *d > *best)) best = d;
    }
    return best;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows())
        throw ShapeMismatch("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    PolyMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            for (std::size_t i = 0; i < a.cols(); ++i) out(r, c) += a(r, i) * b(i, c);
    return out;
}

Poly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw ShapeMismatch("determinant of a non-square " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            " matrix");
    if (m.rows() > kMaxDeterminantSide)
        throw TooLarge("determinant side " + std::to_string(m.rows()) + " exceeds the limit of " +
                       std::to_string(kMaxDeterminantSide));
    const auto idx = first_combination(m.rows());
    return sub_determinant(m, idx, idx);
}

std::vector<Poly> all_minors(const PolyMatrix& m, std::size_t order) {
    if (order == 0 || order > std::min(m.rows(), m.cols()))
        throw ShapeMismatch("minor order " + std::to_string(order) + " is invalid for a " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()) + " matrix");
    if (order > kMaxDeterminantSide)
        throw TooLarge("minor order " + std::to_string(order) + " exceeds the limit of " +
                       std::to_string(kMaxDeterminantSide));
    std::vector<Poly> minors;
    auto rows = first_combination(order);
    do {
        auto cols = first_combination(order);
        do {
            minors.push_back(sub_determinant(m, rows, cols));
        } while (next_combination(cols, m.cols()));
    } while (next_combination(rows, m.rows()));
    return minors;
}

Poly minor_gcd(const PolyMatrix& m, std::size_t order) {
    const auto minors = all_minors(m, order);
    if (std::all_of(minors.begin(), minors.end(), [](const Poly& p) { return p.is_zero(); }))
        throw RankDeficient("every minor of order " + std::to_string(order) + " of the " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()) + " matrix is zero");
    return gcd_many(minors);
}

BitMatrix coefficient_slice(const PolyMatrix& m, std::size_t j) {
    BitMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m(r, c).coeff(j));
    return out;
}

}  // namespace tvcc
