// Copyright 2026 The spunnorm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Double description with a combinatorial adjacency test. Rays are kept in
// machine integers while they fit; any overflow restarts the run in GMP.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "spunnorm/exact_math.hpp"

namespace spunnorm {
namespace {

struct Overflow {};

inline int64_t Mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline int64_t Add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline int64_t Sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline int Sign(int64_t a) { return (a > 0) - (a < 0); }
inline int64_t Gcd(int64_t a, int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    const int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}
inline int64_t DivExact(int64_t a, int64_t b) { return a / b; }
inline int64_t FromInteger(const Integer& z, int64_t*) {
  if (!z.fits_slong_p()) throw Overflow{};
  return z.get_si();
}
inline Integer ToInteger(int64_t a) { return Integer(static_cast<long>(a)); }

inline Integer Mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer Add(const Integer& a, const Integer& b) { return a + b; }
inline Integer Sub(const Integer& a, const Integer& b) { return a - b; }
inline int Sign(const Integer& a) { return sgn(a); }
inline Integer Gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
inline Integer DivExact(const Integer& a, const Integer& b) {
  Integer r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
inline Integer FromInteger(const Integer& z, Integer*) { return z; }
inline Integer ToInteger(const Integer& a) { return a; }

// Rays with their zero sets, stored flat: `words` 64-bit words per zero set.
template <typename N>
struct RaySet {
  size_t dim = 0;
  size_t words = 0;
  std::vector<N> x;
  std::vector<uint64_t> z;

  size_t size() const { return dim ? x.size() / dim : 0; }
  const N* X(size_t r) const { return x.data() + r * dim; }
  const uint64_t* Z(size_t r) const { return z.data() + r * words; }
  uint64_t* Z(size_t r) { return z.data() + r * words; }
  void Append(const RaySet& from, size_t r) {
    x.insert(x.end(), from.X(r), from.X(r) + dim);
    z.insert(z.end(), from.Z(r), from.Z(r) + words);
  }
};

inline bool TestBit(const uint64_t* z, size_t i) { return (z[i >> 6] >> (i & 63)) & 1; }
inline void SetBit(uint64_t* z, size_t i) { z[i >> 6] |= uint64_t{1} << (i & 63); }

inline bool Contains(const uint64_t* a, const uint64_t* b, size_t words) {
  for (size_t w = 0; w < words; ++w)
    if (b[w] & ~a[w]) return false;
  return true;
}

// Superset queries on zero sets. Each node splits its rays on one bit and
// stores the union of their zero sets, so a subtree whose union misses part
// of the query cannot hold a superset.
class ZeroSetIndex {
 public:
  ZeroSetIndex(const uint64_t* z, size_t count, size_t words, size_t bits) : z_(z), words_(words), bits_(bits) {
    order_.resize(count);
    for (size_t i = 0; i < count; ++i) order_[i] = static_cast<uint32_t>(i);
    counts_.resize(bits);
    if (count) Build(0, static_cast<uint32_t>(count));
  }

  // True iff some ray other than skip1 and skip2 has a zero set containing c.
  bool HasSuperset(const uint64_t* c, size_t skip1, size_t skip2) const {
    return !nodes_.empty() && Search(0, c, skip1, skip2);
  }

 private:
  static constexpr uint32_t kLeafSize = 16;

  struct Node {
    int bit = -1;  // -1 for a leaf
    int with = -1;  // child whose rays have `bit` in their zero set
    int without = -1;
    uint32_t begin = 0;
    uint32_t end = 0;
  };

  int Build(uint32_t begin, uint32_t end) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{-1, -1, -1, begin, end});
    unions_.resize(unions_.size() + words_, 0);
    uint64_t* u = unions_.data() + id * words_;
    for (uint32_t i = begin; i < end; ++i)
      for (size_t w = 0; w < words_; ++w) u[w] |= z_[order_[i] * words_ + w];
    const uint32_t size = end - begin;
    if (size <= kLeafSize) return id;

    // Split on the bit closest to halving the rays.
    std::fill(counts_.begin(), counts_.end(), 0);
    for (uint32_t i = begin; i < end; ++i) {
      const uint64_t* zr = z_ + order_[i] * words_;
      for (size_t w = 0; w < words_; ++w)
        for (uint64_t v = zr[w]; v; v &= v - 1) ++counts_[w * 64 + std::countr_zero(v)];
    }
    int best = -1;
    uint32_t best_gap = size;
    for (size_t b = 0; b < bits_; ++b) {
      const uint32_t c = counts_[b];
      if (c == 0 || c == size) continue;
      const uint32_t gap = c > size / 2 ? c - size / 2 : size / 2 - c;
      if (gap < best_gap) {
        best_gap = gap;
        best = static_cast<int>(b);
      }
    }
    if (best < 0) return id;
    const auto mid = std::stable_partition(order_.begin() + begin, order_.begin() + end,
                                           [&](uint32_t r) { return TestBit(z_ + r * words_, best); });
    const uint32_t m = static_cast<uint32_t>(mid - order_.begin());
    const int with = Build(begin, m);
    const int without = Build(m, end);
    nodes_[id].bit = best;
    nodes_[id].with = with;
    nodes_[id].without = without;
    return id;
  }

  bool Search(int id, const uint64_t* c, size_t skip1, size_t skip2) const {
    if (!Contains(unions_.data() + id * words_, c, words_)) return false;
    const Node& node = nodes_[id];
    if (node.bit < 0) {
      for (uint32_t i = node.begin; i < node.end; ++i) {
        const uint32_t r = order_[i];
        if (r != skip1 && r != skip2 && Contains(z_ + r * words_, c, words_)) return true;
      }
      return false;
    }
    if (Search(node.with, c, skip1, skip2)) return true;
    return !TestBit(c, node.bit) && Search(node.without, c, skip1, skip2);
  }

  const uint64_t* z_;
  size_t words_;
  size_t bits_;
  std::vector<uint32_t> order_;
  std::vector<Node> nodes_;
  std::vector<uint64_t> unions_;
  std::vector<uint32_t> counts_;
};

// Support tests applied to the common zero set of a candidate pair.
class SupportTest {
 public:
  SupportTest(const EnumerationOptions& opt, size_t dim, size_t words)
      : filter_(opt.filter), dim_(dim), words_(words), support_(dim) {
    for (const auto& g : opt.exclusive) {
      for (const auto& block : g.blocks) {
        masks_.resize(masks_.size() + words, 0);
        uint64_t* m = masks_.data() + masks_.size() - words;
        for (size_t j : block) {
          if (j >= dim) throw std::invalid_argument("exclusive group names a coordinate out of range");
          SetBit(m, j);
        }
      }
      group_end_.push_back(masks_.size() / words);
    }
  }

  bool active() const { return filter_ || !group_end_.empty(); }

  // `zeros` is the zero set; the support is its complement.
  bool Passes(const uint64_t* zeros) {
    size_t block = 0;
    for (size_t end : group_end_) {
      int met = 0;
      for (; block < end; ++block) {
        const uint64_t* m = masks_.data() + block * words_;
        for (size_t w = 0; w < words_; ++w)
          if (m[w] & ~zeros[w]) {
            ++met;
            break;
          }
      }
      if (met > 1) return false;
    }
    if (filter_) {
      for (size_t j = 0; j < dim_; ++j) support_[j] = !TestBit(zeros, j);
      if (!filter_(support_)) return false;
    }
    return true;
  }

 private:
  const SupportFilter& filter_;
  size_t dim_;
  size_t words_;
  std::vector<uint64_t> masks_;    // one mask per block
  std::vector<size_t> group_end_;  // block index past each group
  std::vector<bool> support_;
};

template <typename N>
void Normalize(N* x, size_t n) {
  N g = 0;
  for (size_t j = 0; j < n; ++j) {
    g = Gcd(g, x[j]);
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (size_t j = 0; j < n; ++j) x[j] = DivExact(x[j], g);
}

template <typename N>
N Dot(const std::vector<N>& a, const N* x) {
  N s = 0;
  for (size_t j = 0; j < a.size(); ++j)
    if (a[j] != 0 && x[j] != 0) s = Add(s, Mul(a[j], x[j]));
  return s;
}

// Combines the adjacent (positive, negative) pairs for one new constraint.
// `values` holds the constraint value on each ray. Support tests only apply
// when zero sets index coordinates.
template <typename N>
RaySet<N> CombinePairs(const RaySet<N>& rays, const std::vector<N>& values, const std::vector<size_t>& pos,
                       const std::vector<size_t>& neg, size_t min_common, const EnumerationOptions& opt,
                       size_t zero_bits, bool zeros_are_coords) {
  const size_t words = rays.words, dim = rays.dim;
  const ZeroSetIndex index(rays.z.data(), rays.size(), words, zero_bits);
  std::vector<RaySet<N>> per_pos(pos.size());
  auto work = [&](size_t a, SupportTest& test, std::vector<uint64_t>& common) {
    const bool check_support = zeros_are_coords && test.active();
    RaySet<N>& out = per_pos[a];
    out.dim = dim;
    out.words = words;
    const size_t p = pos[a];
    const uint64_t* zp = rays.Z(p);
    for (size_t n : neg) {
      const uint64_t* zn = rays.Z(n);
      size_t count = 0;
      for (size_t w = 0; w < words; ++w) {
        common[w] = zp[w] & zn[w];
        count += std::popcount(common[w]);
      }
      if (count < min_common) continue;
      if (check_support && !test.Passes(common.data())) continue;
      if (index.HasSuperset(common.data(), p, n)) continue;
      const size_t base = out.x.size();
      out.x.resize(base + dim);
      N* r = out.x.data() + base;
      const N* xp = rays.X(p);
      const N* xn = rays.X(n);
      const N& sp = values[p];
      const N& sn = values[n];
      for (size_t j = 0; j < dim; ++j) r[j] = Sub(Mul(sp, xn[j]), Mul(sn, xp[j]));
      Normalize(r, dim);
      out.z.insert(out.z.end(), common.begin(), common.end());
    }
  };
  // Strided split keeps the load balanced as pair counts vary.
  auto run = [&](size_t first, size_t stride) {
    SupportTest test(opt, dim, words);
    std::vector<uint64_t> common(words);
    for (size_t a = first; a < pos.size(); a += stride) work(a, test, common);
  };
  const size_t nt = std::max<size_t>(1, std::min<size_t>(opt.threads, pos.size()));
  if (nt <= 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (size_t t = 0; t < nt; ++t) {
      pool.emplace_back([&, t] {
        try {
          run(t, nt);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }
  RaySet<N> out;
  out.dim = dim;
  out.words = words;
  for (auto& v : per_pos) {
    out.x.insert(out.x.end(), v.x.begin(), v.x.end());
    out.z.insert(out.z.end(), v.z.begin(), v.z.end());
  }
  return out;
}

template <typename N>
std::vector<IntVector> Finish(const RaySet<N>& rays) {
  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (size_t r = 0; r < rays.size(); ++r) {
    IntVector v(rays.dim);
    for (size_t j = 0; j < v.size(); ++j) v[j] = ToInteger(rays.X(r)[j]);
    out.push_back(Primitive(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Splits rays by the sign of `values`.
template <typename N>
void Classify(const std::vector<N>& values, std::vector<size_t>& pos, std::vector<size_t>& neg,
              std::vector<size_t>& zero) {
  for (size_t r = 0; r < values.size(); ++r) {
    const int s = Sign(values[r]);
    (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
  }
}

template <typename N>
std::vector<IntVector> OrthantRays(const ConeDescription& cone, const EnumerationOptions& opt) {
  const size_t n = cone.dimension;
  const size_t words = (n + 63) / 64;
  std::vector<std::vector<N>> eqs;
  for (size_t i = 0; i < cone.equations.rows(); ++i) {
    std::vector<N> row(n);
    bool nonzero = false;
    for (size_t j = 0; j < n; ++j) {
      row[j] = FromInteger(cone.equations(i, j), static_cast<N*>(nullptr));
      nonzero |= row[j] != 0;
    }
    if (nonzero) eqs.push_back(std::move(row));
  }

  RaySet<N> rays;
  rays.dim = n;
  rays.words = words;
  SupportTest test(opt, n, words);
  std::vector<uint64_t> zeros(words);
  for (size_t i = 0; i < n; ++i) {
    std::fill(zeros.begin(), zeros.end(), 0);
    for (size_t j = 0; j < n; ++j)
      if (j != i) SetBit(zeros.data(), j);
    if (test.active() && !test.Passes(zeros.data())) continue;
    rays.x.resize(rays.x.size() + n, 0);
    rays.x[rays.x.size() - n + i] = 1;
    rays.z.insert(rays.z.end(), zeros.begin(), zeros.end());
  }

  // Equations go in by how few coordinates they add to those already touched
  // by inserted equations; this keeps intermediate cones small on matching
  // systems. Ties go to the lower index.
  RatMatrix inserted(0, n);
  std::vector<bool> used(eqs.size(), false);
  std::vector<bool> touched(n, false);
  for (size_t step = 0; step < eqs.size(); ++step) {
    size_t best = eqs.size();
    size_t best_cost = std::numeric_limits<size_t>::max();
    for (size_t e = 0; e < eqs.size(); ++e) {
      if (used[e]) continue;
      size_t cost = 0;
      for (size_t j = 0; j < n; ++j) cost += eqs[e][j] != 0 && !touched[j];
      if (cost < best_cost) {
        best_cost = cost;
        best = e;
      }
    }
    used[best] = true;
    const auto& eq = eqs[best];
    for (size_t j = 0; j < n; ++j) touched[j] = touched[j] || eq[j] != 0;

    std::vector<N> values(rays.size());
    for (size_t r = 0; r < rays.size(); ++r) values[r] = Dot(eq, rays.X(r));
    std::vector<size_t> pos, neg, zero;
    Classify(values, pos, neg, zero);
    {
      RatVector row(n);
      for (size_t j = 0; j < n; ++j) row[j] = ToInteger(eq[j]);
      inserted.AppendRow(row);
    }
    if (pos.empty() && neg.empty()) continue;
    const size_t dim = n - Rank(inserted);
    // Adjacent rays of a dim-dimensional cone share at least dim - 2 zeros.
    const size_t min_common = dim >= 2 ? dim - 2 : 0;
    RaySet<N> next = CombinePairs(rays, values, pos, neg, min_common, opt, n, true);
    RaySet<N> kept;
    kept.dim = n;
    kept.words = words;
    for (size_t r : zero) kept.Append(rays, r);
    kept.x.insert(kept.x.end(), next.x.begin(), next.x.end());
    kept.z.insert(kept.z.end(), next.z.begin(), next.z.end());
    rays = std::move(kept);
  }
  return Finish(rays);
}

template <typename N>
std::vector<IntVector> InequalityRays(const IntMatrix& g, unsigned threads) {
  const size_t m = g.rows(), n = g.cols();
  if (n == 0) return {};
  // Greedy choice of n independent rows for the initial simplicial cone.
  std::vector<size_t> basis;
  RatMatrix acc(0, n);
  for (size_t i = 0; i < m && basis.size() < n; ++i) {
    RatMatrix trial = acc;
    trial.AppendRow(ToRational(g.Row(i)));
    if (Rank(trial) > basis.size()) {
      acc = trial;
      basis.push_back(i);
    }
  }
  if (basis.size() < n) throw std::invalid_argument("inequality cone is not pointed");

  // Columns of B^{-1}, scaled to integers.
  RaySet<N> rays;
  rays.dim = n;
  rays.words = (m + 63) / 64;
  for (size_t k = 0; k < n; ++k) {
    RatVector e(n);
    e[k] = 1;
    const SolveResult s = Solve(acc, e);
    const IntVector col = Primitive(s.solution);
    for (size_t j = 0; j < n; ++j) rays.x.push_back(FromInteger(col[j], static_cast<N*>(nullptr)));
    rays.z.resize(rays.z.size() + rays.words, 0);
    for (size_t b = 0; b < n; ++b)
      if (b != k) SetBit(rays.Z(k), basis[b]);
  }

  std::vector<bool> in_basis(m, false);
  for (size_t b : basis) in_basis[b] = true;
  const EnumerationOptions opt{SupportFilter{}, {}, threads};
  for (size_t i = 0; i < m; ++i) {
    if (in_basis[i]) continue;
    std::vector<N> row(n);
    for (size_t j = 0; j < n; ++j) row[j] = FromInteger(g(i, j), static_cast<N*>(nullptr));
    std::vector<N> values(rays.size());
    for (size_t r = 0; r < rays.size(); ++r) values[r] = Dot(row, rays.X(r));
    std::vector<size_t> pos, neg, zero;
    Classify(values, pos, neg, zero);
    if (neg.empty()) {
      for (size_t r : zero) SetBit(rays.Z(r), i);
      continue;
    }
    const size_t min_common = n >= 2 ? n - 2 : 0;
    RaySet<N> added = CombinePairs(rays, values, pos, neg, min_common, opt, m, false);
    RaySet<N> next;
    next.dim = n;
    next.words = rays.words;
    for (size_t r : pos) next.Append(rays, r);
    for (size_t r : zero) {
      next.Append(rays, r);
      SetBit(next.Z(next.size() - 1), i);
    }
    for (size_t r = 0; r < added.size(); ++r) {
      next.Append(added, r);
      SetBit(next.Z(next.size() - 1), i);
    }
    rays = std::move(next);
  }
  return Finish(rays);
}

}  // namespace

std::vector<IntVector> ExtremeRays(const ConeDescription& cone, const EnumerationOptions& options) {
  if (cone.equations.rows() > 0 && cone.equations.cols() != cone.dimension)
    throw std::invalid_argument("cone: equation width differs from dimension");
  if (cone.dimension == 0) return {};
  try {
    return OrthantRays<int64_t>(cone, options);
  } catch (const Overflow&) {
    return OrthantRays<Integer>(cone, options);
  }
}

std::vector<IntVector> ExtremeRaysOfInequalities(const IntMatrix& g, unsigned threads) {
  try {
    return InequalityRays<int64_t>(g, threads);
  } catch (const Overflow&) {
    return InequalityRays<Integer>(g, threads);
  }
}

}  // namespace spunnorm
