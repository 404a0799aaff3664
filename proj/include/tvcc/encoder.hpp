#ifndef TVCC_ENCODER_HPP
#define TVCC_ENCODER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tvcc/gf2poly.hpp"
#include "tvcc/polymatrix.hpp"

namespace tvcc {

/// A finite stream of fixed-width binary tuples, one tuple per encoding epoch.
class BitStream {
   public:
    BitStream() = default;
    /// `length` all-zero tuples of `width` bits. Throws ShapeMismatch on width 0.
    BitStream(std::size_t width, std::size_t length = 0);

    /// Parses whitespace-separated tuples such as "10 01 11". Throws InvalidArgument.
    static BitStream parse(std::size_t width, std::string_view text);

    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return width_ == 0 ? 0 : bits_.size() / width_; }
    bool empty() const noexcept { return bits_.empty(); }

    bool bit(std::size_t epoch, std::size_t j) const { return bits_[epoch * width_ + j] != 0; }
    void set(std::size_t epoch, std::size_t j, bool v) { bits_[epoch * width_ + j] = v ? 1 : 0; }

    std::span<const std::uint8_t> symbol(std::size_t epoch) const {
        return std::span<const std::uint8_t>(bits_).subspan(epoch * width_, width_);
    }
    void push_back(std::span<const std::uint8_t> symbol);
    /// Appends all-zero tuples up to `length`, or truncates down to it.
    void resize(std::size_t length) { bits_.resize(length * width_, 0); }

    std::size_t weight() const noexcept;
    /// Tuples separated by single spaces, e.g. "11 01 00".
    std::string to_string() const;

    friend bool operator==(const BitStream&, const BitStream&) = default;
    BitStream& operator^=(const BitStream& rhs);

   private:
    std::size_t width_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Rate k/n time-invariant encoder given by its k x n transfer function matrix.
class TimeInvariantEncoder {
   public:
    /// Throws InvalidArgument unless 1 <= k < n.
    explicit TimeInvariantEncoder(PolyMatrix g);

    std::size_t inputs() const noexcept { return g_.rows(); }
    std::size_t outputs() const noexcept { return g_.cols(); }
    std::size_t memory() const noexcept { return g_.max_degree().value_or(0); }
    const PolyMatrix& transfer() const noexcept { return g_; }

    friend bool operator==(const TimeInvariantEncoder&, const TimeInvariantEncoder&) = default;

   private:
    PolyMatrix g_;
};

/// Encoder cycling through p constituent tap sets; epoch t uses constituent t mod p.
class PeriodicEncoder {
   public:
    /// Throws InvalidArgument on an empty list or constituents of differing shape.
    explicit PeriodicEncoder(std::vector<TimeInvariantEncoder> constituents);
    PeriodicEncoder(TimeInvariantEncoder single) : PeriodicEncoder(std::vector{std::move(single)}) {}

    std::size_t period() const noexcept { return constituents_.size(); }
    std::size_t inputs() const noexcept { return constituents_.front().inputs(); }
    std::size_t outputs() const noexcept { return constituents_.front().outputs(); }
    std::size_t memory() const noexcept;

    const TimeInvariantEncoder& constituent(std::size_t i) const { return constituents_.at(i); }
    const std::vector<TimeInvariantEncoder>& constituents() const noexcept { return constituents_; }

    friend bool operator==(const PeriodicEncoder&, const PeriodicEncoder&) = default;

   private:
    std::vector<TimeInvariantEncoder> constituents_;
};

/// Periodic encoder whose constituents share one denominator polynomial.
class RationalPeriodicEncoder {
   public:
    /// Throws InvalidArgument unless den(0) = 1.
    RationalPeriodicEncoder(PeriodicEncoder base, Poly den);

    const PeriodicEncoder& base() const noexcept { return base_; }
    const Poly& den() const noexcept { return den_; }
    bool is_polynomial() const noexcept { return den_.is_one(); }

    friend bool operator==(const RationalPeriodicEncoder&, const RationalPeriodicEncoder&) = default;

   private:
    PeriodicEncoder base_;
    Poly den_;
};

/// Serial description: one circuit whose taps change every epoch.
BitStream encode_serial(const PeriodicEncoder& e, const BitStream& input);

/// Parallel description: each constituent encodes everything, all but the active output is punctured.
BitStream encode_parallel(const PeriodicEncoder& e, const BitStream& input);

/// Time-invariant encoding (period one).
BitStream encode(const TimeInvariantEncoder& e, const BitStream& input);

/// Power-series quotient input(D)/den(D) per tuple component, `length` epochs long
/// (input zero-extended). Throws InvalidArgument unless den(0) = 1.
BitStream series_divide(const BitStream& input, const Poly& den, std::size_t length);

/// Feeds the power-series quotient input/den through the numerator encoder; `length` epochs of output.
BitStream encode_rational(const RationalPeriodicEncoder& e, const BitStream& input, std::size_t length);

}  // namespace tvcc

#endif
