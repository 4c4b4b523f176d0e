#pragma once

#include <string>
#include <vector>

#include "coframes/chain/reedy.hpp"
#include "coframes/frames/frames.hpp"
#include "coframes/sset/rank.hpp"

namespace coframes::cli {

struct Outcome {
  std::string name;
  bool pass = false;
  std::string witness;
};

/// The four postconditions of a relative replacement, each checked on its own.
std::vector<Outcome> replacement_postconditions(const chain::ChainDiagram& x, const fincat::MorphismClass& weq,
                                                const fincat::CatFunctor& sieve, const chain::ChainDiagram& h,
                                                const chain::DiagramMap& f, const chain::Replacement& r);

/// H(g_t)^{-1} ∘ H(f) ∘ H(g_s): f between the homologies of two frame values.
chain::GradedMatrix in_frame_bases(const chain::ChainMap& f, const frames::ObjectFrame& s,
                                   const frames::ObjectFrame& t, const frames::FrameContext& ctx);

/// All monotone maps [m] -> [n] as value lists.
std::vector<std::vector<int>> monotone_maps(int m, int n);

/// For every simplex of N(hK) in dimension `dim`: exactly one pair (primitive τ,
/// monotone f with f(0) = 0 and f(last) = dim τ) with f*τ = σ, and it is the
/// one primitive_factorization returns. Exhaustive over all such pairs.
Outcome factorization_uniqueness(const sset::UnitMap& u, int dim);

/// rank of (g*τ)|{i, j} is g(j) - g(i) for every primitive τ and monotone g.
Outcome rank_restriction(const sset::UnitMap& u);

/// K^(n-1) ⊆ K^(n) for n <= max rank, and K^(max rank) is everything.
Outcome filtration_exhausts(const sset::UnitMap& u);

/// Named 1-skeletal simplicial sets: delta1, spine2, spine3, wedge.
std::vector<std::string> sset_corpus_names();
sset::TruncatedSSet sset_corpus(const std::string& name, int cap);

}  // namespace coframes::cli
