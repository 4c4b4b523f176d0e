#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "coframes/chain/diagram.hpp"
#include "coframes/fincat/category.hpp"

namespace coframes::chain {

/// Complex files: prime, lo, hi, dims, and one row-major matrix per degree
/// in (lo, hi]. Throws coframes::ParseError naming the field.
ChainComplex read_complex(std::string_view text);
std::string write_complex(const ChainComplex& x);

/// Chain-map files carry both endpoints and the nonempty blocks; missing
/// blocks are zero.
ChainMap read_chain_map(std::string_view text);
std::string write_chain_map(const ChainMap& f);

struct DiagramFile {
  ChainDiagram diagram;
  std::optional<fincat::MorphismClass> weq;
};

/// Resolves a category reference (a path) to the text of a category file.
using CategoryLoader = std::function<std::string(const std::string&)>;

/// Diagram files: `category` is an inline category object or a reference
/// resolved by `load`; `objects` maps object names to complexes; `maps` maps
/// non-identity morphism names to blocks. Identities are implied.
DiagramFile read_diagram(std::string_view text, const CategoryLoader& load = {});
/// Canonical text with the category inlined, or referenced when `category_ref` is set.
std::string write_diagram(const ChainDiagram& x, const fincat::MorphismClass* weq = nullptr,
                          const std::optional<std::string>& category_ref = std::nullopt);

}  // namespace coframes::chain
