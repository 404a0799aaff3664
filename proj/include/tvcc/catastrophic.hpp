#ifndef TVCC_CATASTROPHIC_HPP
#define TVCC_CATASTROPHIC_HPP

#include <cstddef>
#include <cstdint>

#include "tvcc/encoder.hpp"

namespace tvcc {

enum class Verdict { NonCatastrophic, Catastrophic };

const char* to_string(Verdict v) noexcept;

/// Outcome of the minor-GCD test: f = D^delay * g with g(0) = 1.
struct CatastrophicReport {
    Verdict verdict = Verdict::NonCatastrophic;
    Poly f;
    std::size_t delay = 0;
    Poly g;
};

/// GCD of the order-k minors of G(D); non-catastrophic iff that GCD is a pure delay D^l.
/// Throws RankDeficient when every minor vanishes.
CatastrophicReport massey_sain_check(const TimeInvariantEncoder& e);

/// The same test applied to the time-invariant equivalent (minors of order kp).
CatastrophicReport periodic_check(const PeriodicEncoder& e);

/// The polynomial the input is divided by when converting: g(D^p) for a
/// catastrophic encoder, 1 otherwise. The pure delay factor of f is never divided out.
Poly conversion_divisor(const PeriodicEncoder& e);

/// Divides every constituent by g(D^p). When g(D^p) divides every entry the
/// quotient is taken entry-wise and the denominator is 1.
/// Throws NotCatastrophic if the encoder is already non-catastrophic.
RationalPeriodicEncoder convert(const PeriodicEncoder& e);

/// Random-sampling check that `converted` maps every input u to the codeword the
/// original assigns to u / conversion_divisor(original), over `trials` inputs of `length` epochs.
bool verify_same_code(const PeriodicEncoder& original, const RationalPeriodicEncoder& converted, std::size_t trials,
                      std::size_t length, std::uint64_t seed);

}  // namespace tvcc

#endif
