#pragma once

#include <string>
#include <string_view>

#include "coframes/sset/sset.hpp"

namespace coframes::sset {

/// Parses a simplicial-set file. Simplex names must be unique across all
/// dimensions; faces and degeneracies are triples [simplex, index, result].
/// Throws coframes::ParseError naming the field.
TruncatedSSet read_sset(std::string_view text);

/// Canonical text; reading it back and writing again is byte-identical.
/// Throws coframes::Error when two simplices share a name.
std::string write_sset(const TruncatedSSet& k);

}  // namespace coframes::sset
