#include "oracle.hpp"

#include <algorithm>
#include <utility>

#include "coframes/chain/reedy.hpp"

namespace oracle {

using namespace coframes::chain;

namespace {

long long mod(long long v, int p) { return ((v % p) + p) % p; }

long long inverse_mod(long long a, int p) {
  long long r = 1, e = p - 2;
  a = mod(a, p);
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// A degree range covering both complexes with a margin, so boundary terms vanish.
std::pair<int, int> span(const ChainComplex& x, const ChainComplex& y) {
  return {std::min(x.lo(), y.lo()) - 2, std::max(x.hi(), y.hi()) + 2};
}

}  // namespace

int rank_mod(Rows a, int p) {
  int r = 0;
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(a.size()); ++c) {
    int pivot = -1;
    for (int i = r; i < static_cast<int>(a.size()); ++i)
      if (mod(a[i][c], p) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    const long long inv = inverse_mod(a[r][c], p);
    for (auto& v : a[r]) v = mod(v * inv, p);
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
      if (i == r || mod(a[i][c], p) == 0) continue;
      const long long k = mod(a[i][c], p);
      for (int j = 0; j < cols; ++j) a[i][j] = mod(a[i][j] - k * a[r][j], p);
    }
    ++r;
  }
  return r;
}

Rows rows_of(const Matrix& m) {
  Rows out(m.rows(), std::vector<long long>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
  return out;
}

int rank(const Matrix& m) { return rank_mod(rows_of(m), m.prime()); }

int betti(const ChainComplex& x, int n) { return x.dim(n) - rank(x.d(n)) - rank(x.d(n + 1)); }

bool injective(const ChainMap& f) {
  const auto [lo, hi] = span(*f.source, *f.target);
  for (int n = lo; n <= hi; ++n)
    if (rank(f.at(n)) != f.source->dim(n)) return false;
  return true;
}

bool quasi_iso(const ChainMap& f) {
  const ChainComplex& x = *f.source;
  const ChainComplex& y = *f.target;
  const int p = x.prime();
  // C_n = X_{n-1} ⊕ Y_n, d(a, b) = (-d a, f a + d b).
  auto cone_d = [&](int n) {
    const int xs = x.dim(n - 1), ys = y.dim(n), xt = x.dim(n - 2), yt = y.dim(n - 1);
    Rows d(xt + yt, std::vector<long long>(xs + ys, 0));
    const Matrix dx = x.d(n - 1), fm = f.at(n - 1), dy = y.d(n);
    for (int i = 0; i < xt; ++i)
      for (int j = 0; j < xs; ++j) d[i][j] = -dx.at(i, j);
    for (int i = 0; i < yt; ++i) {
      for (int j = 0; j < xs; ++j) d[xt + i][j] = fm.at(i, j);
      for (int j = 0; j < ys; ++j) d[xt + i][xs + j] = dy.at(i, j);
    }
    return d;
  };
  const auto [lo, hi] = span(x, y);
  std::vector<int> ranks;
  for (int n = lo; n <= hi + 2; ++n) ranks.push_back(rank_mod(cone_d(n), p));
  for (int n = lo; n <= hi + 1; ++n) {
    const int dim_c = x.dim(n - 1) + y.dim(n);
    if (dim_c != ranks[n - lo] + ranks[n - lo + 1]) return false;
  }
  return true;
}

bool invertible(const GradedMatrix& m) {
  for (const Matrix& b : m.blocks)
    if (b.rows() != b.cols() || rank(b) != b.rows()) return false;
  return true;
}

bool is_identity(const GradedMatrix& m) {
  for (const Matrix& b : m.blocks) {
    if (b.rows() != b.cols()) return false;
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j)
        if (b.at(i, j) != (i == j ? 1 : 0)) return false;
  }
  return true;
}

int colimit_dim(const ChainDiagram& x, int n) {
  const auto& c = *x.index;
  std::vector<int> offset(c.object_count() + 1, 0);
  for (int o = 0; o < c.object_count(); ++o) offset[o + 1] = offset[o] + x.objects[o]->dim(n);
  const int total = offset.back();
  Rows rel;
  for (int m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    const int i = c.source(m), j = c.target(m);
    const Matrix a = x.maps[m].at(n);
    for (int k = 0; k < x.objects[i]->dim(n); ++k) {
      std::vector<long long> v(total, 0);
      v[offset[i] + k] -= 1;
      for (int r = 0; r < a.rows(); ++r) v[offset[j] + r] += a.at(r, k);
      rel.push_back(std::move(v));
    }
  }
  return total - rank_mod(rel, x.prime());
}

bool latching_maps_injective(const ChainDiagram& x, std::string* witness) {
  for (int i = 0; i < x.index->object_count(); ++i) {
    const Latching l = latching_object(x, i);
    if (!injective(*l.map)) {
      if (witness) *witness = x.index->object_name(i);
      return false;
    }
  }
  return true;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
