#include "tvcc/encoder.hpp"

#include <algorithm>
#include <cctype>

#include "tvcc/error.hpp"

namespace tvcc {

namespace {

void require_width(const BitStream& input, std::size_t k) {
    if (input.width() != k)
        throw ShapeMismatch("input tuples have width " + std::to_string(input.width()) + ", encoder expects " +
                            std::to_string(k));
}

// Tap tables G^j for j = 0..memory, zero-padded for constituents of smaller degree.
std::vector<BitMatrix> tap_slices(const TimeInvariantEncoder& e, std::size_t memory) {
    std::vector<BitMatrix> slices;
    slices.reserve(memory + 1);
    for (std::size_t j = 0; j <= memory; ++j) slices.push_back(coefficient_slice(e.transfer(), j));
    return slices;
}

}  // namespace

BitStream::BitStream(std::size_t width, std::size_t length) : width_(width), bits_(width * length, 0) {
    if (width == 0) throw ShapeMismatch("bit stream tuple width must be positive");
}

BitStream BitStream::parse(std::size_t width, std::string_view text) {
    BitStream out(width);
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        const std::string_view token = text.substr(i, j - i);
        if (token.size() != width)
            throw InvalidArgument("tuple \"" + std::string(token) + "\" does not have width " + std::to_string(width));
        std::vector<std::uint8_t> symbol(width);
        for (std::size_t b = 0; b < width; ++b) {
            if (token[b] != '0' && token[b] != '1')
                throw InvalidArgument("invalid character in tuple \"" + std::string(token) + "\"");
            symbol[b] = token[b] == '1' ? 1 : 0;
        }
        out.push_back(symbol);
        i = j;
    }
    return out;
}

void BitStream::push_back(std::span<const std::uint8_t> symbol) {
    if (symbol.size() != width_) throw ShapeMismatch("tuple width mismatch on push_back");
    for (std::uint8_t b : symbol) bits_.push_back(b != 0 ? 1 : 0);
}

std::size_t BitStream::weight() const noexcept { return std::count(bits_.begin(), bits_.end(), std::uint8_t{1}); }

std::string BitStream::to_string() const {
    std::string s;
    for (std::size_t t = 0; t < size(); ++t) {
        if (t != 0) s.push_back(' ');
        for (std::size_t j = 0; j < width_; ++j) s.push_back(bit(t, j) ? '1' : '0');
    }
    return s;
}

BitStream& BitStream::operator^=(const BitStream& rhs) {
    if (rhs.width_ != width_ || rhs.bits_.size() != bits_.size()) throw ShapeMismatch("xor of mismatched streams");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= rhs.bits_[i];
    return *this;
}

TimeInvariantEncoder::TimeInvariantEncoder(PolyMatrix g) : g_(std::move(g)) {
    if (g_.rows() == 0 || g_.rows() >= g_.cols())
        throw InvalidArgument("encoder needs 1 <= k < n, got k=" + std::to_string(g_.rows()) +
                              " n=" + std::to_string(g_.cols()));
}

PeriodicEncoder::PeriodicEncoder(std::vector<TimeInvariantEncoder> constituents)
    : constituents_(std::move(constituents)) {
    if (constituents_.empty()) throw InvalidArgument("periodic encoder needs at least one constituent");
    for (const auto& c : constituents_)
        if (c.inputs() != inputs() || c.outputs() != outputs())
            throw InvalidArgument("constituents must share k and n");
}

std::size_t PeriodicEncoder::memory() const noexcept {
    std::size_t m = 0;
    for (const auto& c : constituents_) m = std::max(m, c.memory());
    return m;
}

RationalPeriodicEncoder::RationalPeriodicEncoder(PeriodicEncoder base, Poly den)
    : base_(std::move(base)), den_(std::move(den)) {
    if (!den_.constant_term()) throw InvalidArgument("denominator must have constant term 1, got " + den_.to_string());
}

BitStream encode_serial(const PeriodicEncoder& e, const BitStream& input) {
    const std::size_t k = e.inputs();
    const std::size_t n = e.outputs();
    const std::size_t m = e.memory();
    require_width(input, k);

    std::vector<std::vector<BitMatrix>> taps;
    for (const auto& c : e.constituents()) taps.push_back(tap_slices(c, m));

    BitStream out(n, input.size());
    for (std::size_t t = 0; t < input.size(); ++t) {
        const auto& active = taps[t % e.period()];
        for (std::size_t j = 0; j <= std::min(m, t); ++j) {
            const BitMatrix& tap = active[j];
            for (std::size_t r = 0; r < k; ++r) {
                if (!input.bit(t - j, r)) continue;
                for (std::size_t c = 0; c < n; ++c)
                    if (tap(r, c)) out.set(t, c, !out.bit(t, c));
            }
        }
    }
    return out;
}

BitStream encode(const TimeInvariantEncoder& e, const BitStream& input) {
    return encode_serial(PeriodicEncoder(e), input);
}

BitStream encode_parallel(const PeriodicEncoder& e, const BitStream& input) {
    require_width(input, e.inputs());
    std::vector<BitStream> branches;
    branches.reserve(e.period());
    for (const auto& c : e.constituents()) branches.push_back(encode(c, input));

    BitStream out(e.outputs());
    for (std::size_t t = 0; t < input.size(); ++t) out.push_back(branches[t % e.period()].symbol(t));
    return out;
}

BitStream series_divide(const BitStream& input, const Poly& den, std::size_t length) {
    if (!den.constant_term()) throw InvalidArgument("series division needs den(0) = 1, got " + den.to_string());
    const std::size_t width = input.width();
    const std::size_t deg = *den.degree();
    BitStream q(width, length);
    for (std::size_t t = 0; t < length; ++t) {
        for (std::size_t r = 0; r < width; ++r) {
            bool v = t < input.size() && input.bit(t, r);
            for (std::size_t s = 1; s <= std::min(deg, t); ++s)
                if (den.coeff(s) && q.bit(t - s, r)) v = !v;
            q.set(t, r, v);
        }
    }
    return q;
}

BitStream encode_rational(const RationalPeriodicEncoder& e, const BitStream& input, std::size_t length) {
    require_width(input, e.base().inputs());
    return encode_serial(e.base(), series_divide(input, e.den(), length));
}

}  // namespace tvcc
