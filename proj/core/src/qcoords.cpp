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

#include "spunnorm/qcoords.hpp"

#include <algorithm>
#include <cctype>

namespace spunnorm {

int QuadTypeSeparating(int a, int b) { return QuadTypeOfPair(EdgeIndex(a, b)); }

std::string OrientedQuadName(int index) {
  const int tet = index / kOrientedPerTet, pair = index % kOrientedPerTet;
  return "q^" + std::to_string(tet) + "_{" + std::to_string(kEdgeVertices[pair][0]) +
         std::to_string(kEdgeVertices[pair][1]) + "}";
}

std::string QuadTypeName(int index) {
  static const char* kNames[3] = {"01|23", "02|13", "03|12"};
  return "q^" + std::to_string(index / kTypesPerTet) + "_{" + kNames[index % kTypesPerTet] + "}";
}

namespace {

int Sign3(int a, int b, int c) {
  const int inv = (a > b) + (a > c) + (b > c);
  return inv % 2 ? -1 : 1;
}

}  // namespace

int Slope(const IdealTriangulation& t, int tet, int a, int b, int type) {
  // The quad of type {a,b}|{k,l} misses edge ab; the other two meet it with
  // opposite slopes. The sign is fixed relative to the tetrahedron orientation.
  if (QuadTypeSeparating(a, b) == type) return 0;
  const int i = std::min(a, b), j = std::max(a, b);
  const auto kl = OtherTwo(i, j);
  const int k = kl[0], l = kl[1];
  const int sigma = t.sign(tet) * (j % 2 ? -1 : 1) * Sign3(i, k, l);
  return QuadTypeSeparating(i, k) == type ? -sigma : sigma;
}

namespace {

// Calls fn(edge, end, oriented column, coefficient) for every term of the
// oriented matching rows.
template <typename Fn>
void ForEachMatchingTerm(const IdealTriangulation& t, Fn fn) {
  for (const auto& e : t.edge_classes()) {
    for (int end = 0; end < 2; ++end) {
      for (const auto& s : e.around) {
        const int b = end ? s.head : s.tail;  // the end the edge points toward
        const int a = end ? s.tail : s.head;
        for (int k : OtherTwo(a, b))
          fn(e.id, end, kOrientedPerTet * s.tet + PositivePair(b, k), Slope(t, s.tet, a, b, QuadTypeSeparating(b, k)));
      }
    }
  }
}

int UnorientedColumn(int c) { return (c / kOrientedPerTet) * kTypesPerTet + QuadTypeOfPair(c % kOrientedPerTet); }

}  // namespace

MatchingSystem BuildMatching(const IdealTriangulation& t) {
  const int n = t.size();
  const int ne = static_cast<int>(t.edge_classes().size());
  MatchingSystem m;
  m.oriented = IntMatrix(2 * ne, kOrientedPerTet * n);
  m.unoriented = IntMatrix(ne, kTypesPerTet * n);
  for (int e = 0; e < ne; ++e)
    for (int end = 0; end < 2; ++end) m.oriented_rows.push_back({e, end});
  ForEachMatchingTerm(t, [&](int e, int end, int c, int v) {
    m.oriented(2 * e + end, c) += v;
    m.unoriented(e, UnorientedColumn(c)) += v;
  });
  return m;
}

bool SatisfiesMatching(const IdealTriangulation& t, const IntVector& x) {
  const bool oriented = x.size() == static_cast<size_t>(kOrientedPerTet * t.size());
  if (!oriented && x.size() != static_cast<size_t>(kTypesPerTet * t.size()))
    throw std::invalid_argument("quad vector length does not match the triangulation");
  // Coefficients are +-1, so sums of small entries cannot overflow a long.
  const auto small = [](const Integer& c) { return c.fits_sint_p(); };
  if (!std::all_of(x.begin(), x.end(), small)) {
    const MatchingSystem m = BuildMatching(t);
    for (const auto& r : (oriented ? m.oriented : m.unoriented) * x)
      if (r != 0) return false;
    return true;
  }
  std::vector<long> v;
  v.reserve(x.size());
  for (const auto& c : x) v.push_back(c.get_si());
  std::vector<long> rows(2 * t.edge_classes().size(), 0);
  ForEachMatchingTerm(t, [&](int e, int end, int c, int coeff) {
    rows[oriented ? 2 * e + end : e] += coeff * v[oriented ? c : UnorientedColumn(c)];
  });
  for (const auto& r : rows)
    if (r != 0) return false;
  return true;
}

IntVector ForgetOrientation(const IntVector& x) {
  if (x.size() % kOrientedPerTet) throw std::invalid_argument("oriented vector length must be 6t");
  const size_t n = x.size() / kOrientedPerTet;
  IntVector out(kTypesPerTet * n);
  for (size_t i = 0; i < x.size(); ++i)
    out[(i / kOrientedPerTet) * kTypesPerTet + QuadTypeOfPair(i % kOrientedPerTet)] += x[i];
  return out;
}

IntVector ReverseOrientation(const IntVector& x) {
  IntVector out(x.size());
  for (size_t i = 0; i < x.size(); ++i)
    out[(i / kOrientedPerTet) * kOrientedPerTet + ComplementPair(i % kOrientedPerTet)] = x[i];
  return out;
}

IntVector CanonicalLift(const IntVector& u) {
  if (u.size() % kTypesPerTet) throw std::invalid_argument("unoriented vector length must be 3t");
  const size_t n = u.size() / kTypesPerTet;
  IntVector out(kOrientedPerTet * n);
  for (size_t i = 0; i < u.size(); ++i) out[(i / kTypesPerTet) * kOrientedPerTet + i % kTypesPerTet] = u[i];
  return out;
}

namespace {

template <typename V>
bool Admissible(const V& x, int n) {
  int per;
  if (static_cast<int>(x.size()) == kOrientedPerTet * n) {
    per = kOrientedPerTet;
  } else if (static_cast<int>(x.size()) == kTypesPerTet * n) {
    per = kTypesPerTet;
  } else {
    throw std::invalid_argument("quad vector length does not match the triangulation");
  }
  for (int tet = 0; tet < n; ++tet) {
    int used = -1;
    for (int k = 0; k < per; ++k) {
      const auto& v = x[tet * per + k];
      if (v < 0) return false;
      if (v == 0) continue;
      const int type = per == kOrientedPerTet ? QuadTypeOfPair(k) : k;
      if (used >= 0 && used != type) return false;
      used = type;
    }
  }
  return true;
}

}  // namespace

bool IsAdmissible(const IntVector& x, int n) { return Admissible(x, n); }
bool IsAdmissible(const RatVector& x, int n) { return Admissible(x, n); }

std::vector<ExclusiveGroup> AdmissibilityGroups(int n, bool oriented) {
  const int per = oriented ? kOrientedPerTet : kTypesPerTet;
  std::vector<ExclusiveGroup> groups(n);
  for (int tet = 0; tet < n; ++tet) {
    auto& blocks = groups[tet].blocks;
    blocks.resize(kTypesPerTet);
    for (int k = 0; k < per; ++k)
      blocks[oriented ? QuadTypeOfPair(k) : k].push_back(static_cast<size_t>(per * tet + k));
  }
  return groups;
}

namespace {

// Walks the around sequence in the positive direction for the edge oriented
// toward `end`; the tail end reverses the stored sequence.
template <typename Count>
Translation Walk(const IdealTriangulation& t, int edge, int end, Count count) {
  const auto& around = t.edge_classes().at(edge).around;
  const int n = static_cast<int>(around.size());
  Translation tr;
  tr.total = 0;
  for (int i = 0; i < n; ++i) {
    const EdgeStep& s = around[end ? i : n - 1 - i];
    const int b = end ? s.head : s.tail;
    const int from = end ? s.enter : s.leave, to = end ? s.leave : s.enter;
    const Integer shift = count(s.tet, b, to) - count(s.tet, b, from);
    tr.shifts.push_back(shift);
    tr.total += shift;
  }
  return tr;
}

}  // namespace

Translation EdgeTranslation(const IdealTriangulation& t, int edge, int end, const IntVector& x) {
  return Walk(t, edge, end, [&](int tet, int b, int f) -> const Integer& {
    return x[kOrientedPerTet * tet + PositivePair(b, f)];
  });
}

Translation EdgeTranslationUnoriented(const IdealTriangulation& t, int edge, int end, const IntVector& u) {
  return Walk(t, edge, end, [&](int tet, int b, int f) -> const Integer& {
    return u[kTypesPerTet * tet + QuadTypeSeparating(b, f)];
  });
}

IntVector ParseQuadVector(const std::string& text) {
  IntVector out;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    Integer v;
    if (v.set_str(tok, 10) != 0) throw InputError("invalid integer \"" + tok + "\" in quad vector");
    out.push_back(v);
    tok.clear();
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+') {
      tok.push_back(ch);
    } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '[' || ch == ']' ||
               ch == '(' || ch == ')') {
      flush();
    } else {
      throw InputError(std::string("unexpected character '") + ch + "' in quad vector");
    }
  }
  flush();
  return out;
}

}  // namespace spunnorm
