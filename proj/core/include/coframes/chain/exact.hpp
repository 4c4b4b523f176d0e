#pragma once

#include <string>

#include "coframes/chain/diagram.hpp"
#include "coframes/chain/reedy.hpp"

namespace coframes::chain {

/// The catalog of exact functors: shift by k, and ⊗ F_p^m.
struct ExactFunctor {
  enum class Kind { Shift, Tensor };
  Kind kind = Kind::Tensor;
  int amount = 1;

  static ExactFunctor shift(int k) { return {Kind::Shift, k}; }
  static ExactFunctor tensor(int m) { return {Kind::Tensor, m}; }
  std::string name() const;
};

/// Parses "shift:<k>" or "tensor:<m>".
ExactFunctor parse_exact_functor(const std::string& text);

ChainComplex apply(const ExactFunctor& F, const ChainComplex& x);
/// F(f) between the given images of its endpoints.
ChainMap apply(const ExactFunctor& F, const ChainMap& f, const ComplexPtr& source, const ComplexPtr& target);
ChainMap apply(const ExactFunctor& F, const ChainMap& f);

ChainDiagram pushforward_exact(const ExactFunctor& F, const ChainDiagram& x);
DiagramMap pushforward_exact(const ExactFunctor& F, const DiagramMap& f, const ChainDiagram& fx,
                             const ChainDiagram& fy);

/// Empty when colim(F∘X) -> F(colim X), induced by the F-images of the legs,
/// is an isomorphism; otherwise the reason. X must be Reedy cofibrant.
std::string colimit_preservation_failure(const ExactFunctor& F, const ChainDiagram& x);

}  // namespace coframes::chain
