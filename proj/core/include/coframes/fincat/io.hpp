#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "coframes/fincat/category.hpp"

namespace coframes::fincat {

struct CategoryFile {
  FinCategory category;
  std::optional<MorphismClass> weq;
};

/// Parses a category file. The result is not validated; run
/// validate_category on it. Throws coframes::ParseError naming the field.
CategoryFile read_category(std::string_view text);

/// Canonical text: sorted keys, two-space indentation, composites listed by
/// (first morphism, second morphism) index. Reading canonical text and writing
/// it again reproduces it byte for byte.
std::string write_category(const FinCategory& c, const MorphismClass* weq = nullptr);

}  // namespace coframes::fincat
