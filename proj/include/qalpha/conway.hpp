#pragma once

#include <istream>
#include <map>
#include <optional>

#include "qalpha/field.hpp"

namespace qalpha {

/// Conway polynomials over GF(2) for 1 <= s <= 16, bit i = coefficient of x^i.
const std::map<unsigned, Bits>& bundled_conway_table();

/// Parses the "s:hexmodulus" line format (blank lines and '#' comments
/// are skipped).
std::map<unsigned, Bits> read_conway_table(std::istream& in);

/// Table in effect: the bundled one, overridden entry-by-entry by the file
/// named in QALPHA_CONWAY_TABLE when that variable is set. Loaded once.
const std::map<unsigned, Bits>& active_conway_table();

std::optional<Bits> conway_modulus(unsigned s);

}  // namespace qalpha
