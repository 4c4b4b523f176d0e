#include "coframes/chain/exact.hpp"

#include "coframes/error.hpp"

namespace coframes::chain {

std::string ExactFunctor::name() const {
  return (kind == Kind::Shift ? "shift:" : "tensor:") + std::to_string(amount);
}

ExactFunctor parse_exact_functor(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error("exact functor '" + text + "': expected shift:<k> or tensor:<m>");
  const std::string kind = text.substr(0, colon);
  int amount = 0;
  try {
    amount = std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw Error("exact functor '" + text + "': bad amount");
  }
  if (kind == "shift") return ExactFunctor::shift(amount);
  if (kind == "tensor") {
    if (amount < 0) throw Error("exact functor '" + text + "': negative rank");
    return ExactFunctor::tensor(amount);
  }
  throw Error("exact functor '" + text + "': unknown kind");
}

ChainComplex apply(const ExactFunctor& F, const ChainComplex& x) {
  const int p = x.prime();
  std::vector<int> dims;
  std::vector<Matrix> diffs;
  if (F.kind == ExactFunctor::Kind::Shift) {
    const bool odd = F.amount % 2 != 0;
    for (int n = x.lo(); n <= x.hi(); ++n) {
      dims.push_back(x.dim(n));
      diffs.push_back(odd ? -x.d(n) : x.d(n));
    }
    return ChainComplex(p, x.lo() + F.amount, std::move(dims), std::move(diffs));
  }
  const Matrix v = Matrix::identity(p, F.amount);
  for (int n = x.lo(); n <= x.hi(); ++n) {
    dims.push_back(x.dim(n) * F.amount);
    diffs.push_back(Matrix::kronecker(x.d(n), v));
  }
  return ChainComplex(p, x.lo(), std::move(dims), std::move(diffs));
}

ChainMap apply(const ExactFunctor& F, const ChainMap& f, const ComplexPtr& source, const ComplexPtr& target) {
  if (F.kind == ExactFunctor::Kind::Shift)
    return ChainMap::build(source, target, [&](int n) { return f.at(n - F.amount); });
  const Matrix v = Matrix::identity(f.source->prime(), F.amount);
  return ChainMap::build(source, target, [&](int n) { return Matrix::kronecker(f.at(n), v); });
}

ChainMap apply(const ExactFunctor& F, const ChainMap& f) {
  return apply(F, f, share(apply(F, *f.source)), share(apply(F, *f.target)));
}

ChainDiagram pushforward_exact(const ExactFunctor& F, const ChainDiagram& x) {
  ChainDiagram out{x.index, {}, {}};
  for (const auto& o : x.objects) out.objects.push_back(share(apply(F, *o)));
  const auto& c = *x.index;
  for (int m = 0; m < c.morphism_count(); ++m)
    out.maps.push_back(apply(F, x.maps[m], out.objects[c.source(m)], out.objects[c.target(m)]));
  return out;
}

DiagramMap pushforward_exact(const ExactFunctor& F, const DiagramMap& f, const ChainDiagram& fx,
                             const ChainDiagram& fy) {
  DiagramMap out;
  for (std::size_t o = 0; o < f.components.size(); ++o)
    out.components.push_back(apply(F, f.components[o], fx.objects[o], fy.objects[o]));
  return out;
}

std::string colimit_preservation_failure(const ExactFunctor& F, const ChainDiagram& x) {
  const ReedyColimit col = reedy_colimit(x);
  const ChainDiagram fx = pushforward_exact(F, x);
  if (auto s = reedy_cofibrant(fx); !s.ok) return "F∘X is not Reedy cofibrant: " + s.detail;
  ReedyColimit image{share(apply(F, *col.object)), {}};
  for (std::size_t o = 0; o < col.legs.size(); ++o)
    image.legs.push_back(apply(F, col.legs[o], fx.objects[o], image.object));
  // F(colim X) with the F-images of the legs is a colimit of F∘X.
  if (auto v = colimit_mismatch(fx, image); !v.empty()) return v;
  if (auto v = colimit_mismatch(fx, reedy_colimit(fx)); !v.empty()) return "colim(F∘X): " + v;
  return {};
}

}  // namespace coframes::chain
