#ifndef TVCC_TVECE_HPP
#define TVCC_TVECE_HPP

#include <cstddef>
#include <vector>

#include "tvcc/encoder.hpp"

namespace tvcc {

/// Time-invariant encoder equivalent, input for input, to a periodic encoder.
///
/// A (p, n, k, m) periodic encoder becomes a kp-input, np-output encoder of
/// memory at most ceil(m/p) that consumes p epochs of the original per step.
struct TveceResult {
    TimeInvariantEncoder encoder;
    std::size_t source_period;

    std::size_t memory() const noexcept { return encoder.memory(); }
};

TveceResult build_tvece(const PeriodicEncoder& e);

/// ceil(m/p), the memory bound of the equivalent encoder.
constexpr std::size_t tvece_memory_bound(std::size_t m, std::size_t p) { return (m + p - 1) / p; }

/// Round-robin interleave: epoch t*p + i of the result is epoch t of streams[i].
/// Throws ShapeMismatch unless all streams share length and width.
BitStream serialize(const std::vector<BitStream>& streams);

/// Inverse of serialize. Throws ShapeMismatch unless the length is a multiple of p.
std::vector<BitStream> deserialize(const BitStream& stream, std::size_t p);

/// Groups p consecutive k-tuples into one kp-tuple, zero-padding the tail up to a multiple of p.
BitStream block_input(const BitStream& input, std::size_t p);

/// Splits every np-tuple into p consecutive n-tuples.
BitStream unblock_output(const BitStream& output, std::size_t p);

}  // namespace tvcc

#endif
