#pragma once

#include "report.hpp"
#include "suites.hpp"

#include <functional>
#include <optional>
#include <string>

namespace coframes::cli {

/// Generator parameters; shrinking lowers them one at a time.
struct Size {
  int degrees = 3;  ///< complexes live in degrees 0..degrees-1
  int dim = 3;      ///< largest dimension of a chain group
  int objects = 4;  ///< largest index category
};

struct Property {
  std::string module;
  std::string name;
  /// A failure description, or nullopt when the case passes.
  std::function<std::optional<std::string>(chain::Rng&, const Size&)> check;
};

struct PropertyOutcome {
  bool pass = true;
  int runs = 0;
  int failing_case = -1;
  Size minimized;
  std::string witness;
};

/// Runs `cases` seeded cases on stream `stream`; the first failure is shrunk
/// (degrees, then dim, then objects) while it keeps failing.
PropertyOutcome run_property(const Property& prop, std::uint64_t seed, int stream, int cases);

/// Seeded invariant checks across all modules. A failing property is shrunk
/// (degree range, then dimensions, then object count) and reported with the
/// smallest size that still fails.
Report run_property_tests(const SuiteConfig& config);

}  // namespace coframes::cli
