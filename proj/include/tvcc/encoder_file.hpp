#ifndef TVCC_ENCODER_FILE_HPP
#define TVCC_ENCODER_FILE_HPP

/*
 * Line-oriented encoder text format. '#' starts a comment, blank lines are ignored.
 *
 *     p k n
 *     <n polynomials>      k lines per constituent, p constituents in phase order
 *     ...
 *     den <polynomial>     optional, makes the encoder rational
 *
 * Polynomials are little-endian binary strings ("101" is 1+D^2).
 */

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "tvcc/encoder.hpp"

namespace tvcc {

using AnyEncoder = std::variant<PeriodicEncoder, RationalPeriodicEncoder>;

/// Throws ParseError with line and column on syntax or semantic errors.
AnyEncoder parse_encoder(std::string_view text);

AnyEncoder read_encoder_file(const std::filesystem::path& path);

std::string print_encoder(const PeriodicEncoder& e);
std::string print_encoder(const RationalPeriodicEncoder& e);
std::string print_encoder(const AnyEncoder& e);

/// Views any encoder as rational (den = 1 for polynomial encoders).
RationalPeriodicEncoder as_rational(const AnyEncoder& e);

}  // namespace tvcc

#endif
