#include "tvcc/tvece.hpp"

#include "tvcc/error.hpp"

namespace tvcc {

// Writing the periodic encoder as one semi-infinite generator matrix, the row
// for input epoch r carries the tap block G_{mu(j)}^{j-r} at output epoch j,
// where mu(j) = j mod p picks the constituent active at j. Grouping p input
// epochs and p output epochs into super-epochs, the cell (r, c) of the l-th
// delay block links input epoch r to output epoch lp + c, giving
//
//     Block_l(r, c) = G_c^{lp + c - r}   if 0 <= lp + c - r <= m, else 0,
//
// with r, c in 0..p-1. Only l <= ceil(m/p) can be nonzero.
TveceResult build_tvece(const PeriodicEncoder& e) {
    const std::size_t p = e.period();
    const std::size_t k = e.inputs();
    const std::size_t n = e.outputs();
    const std::size_t m = e.memory();

    std::vector<std::vector<BitMatrix>> taps(p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j <= m; ++j) taps[i].push_back(coefficient_slice(e.constituent(i).transfer(), j));

    PolyMatrix g(k * p, n * p);
    for (std::size_t l = 0; l <= tvece_memory_bound(m, p); ++l) {
        for (std::size_t r = 0; r < p; ++r) {
            for (std::size_t c = 0; c < p; ++c) {
                if (l * p + c < r) continue;
                const std::size_t j = l * p + c - r;
                if (j > m) continue;
                const BitMatrix& tap = taps[c][j];
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        if (tap(a, b)) g(r * k + a, c * n + b).set_coeff(l, true);
            }
        }
    }
    return {TimeInvariantEncoder(std::move(g)), p};
}

BitStream serialize(const std::vector<BitStream>& streams) {
    if (streams.empty()) throw ShapeMismatch("serialize needs at least one stream");
    const std::size_t width = streams.front().width();
    const std::size_t length = streams.front().size();
    for (const auto& s : streams)
        if (s.width() != width || s.size() != length)
            throw ShapeMismatch("serialize needs streams of equal width and length");
    BitStream out(width);
    for (std::size_t t = 0; t < length; ++t)
        for (const auto& s : streams) out.push_back(s.symbol(t));
    return out;
}

std::vector<BitStream> deserialize(const BitStream& stream, std::size_t p) {
    if (p == 0) throw InvalidArgument("period must be positive");
    if (stream.size() % p != 0)
        throw ShapeMismatch("stream length " + std::to_string(stream.size()) + " is not a multiple of " +
                            std::to_string(p));
    std::vector<BitStream> out(p, BitStream(stream.width()));
    for (std::size_t t = 0; t < stream.size(); ++t) out[t % p].push_back(stream.symbol(t));
    return out;
}

BitStream block_input(const BitStream& input, std::size_t p) {
    if (p == 0) throw InvalidArgument("period must be positive");
    const std::size_t k = input.width();
    const std::size_t blocks = (input.size() + p - 1) / p;
    BitStream out(k * p, blocks);
    for (std::size_t t = 0; t < input.size(); ++t)
        for (std::size_t j = 0; j < k; ++j) out.set(t / p, (t % p) * k + j, input.bit(t, j));
    return out;
}

BitStream unblock_output(const BitStream& output, std::size_t p) {
    if (p == 0 || output.width() % p != 0)
        throw ShapeMismatch("tuple width " + std::to_string(output.width()) + " is not a multiple of the period");
    const std::size_t n = output.width() / p;
    BitStream out(n, output.size() * p);
    for (std::size_t t = 0; t < output.size(); ++t)
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < n; ++j) out.set(t * p + i, j, output.bit(t, i * n + j));
    return out;
}

}  // namespace tvcc
