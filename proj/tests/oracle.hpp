#pragma once

// Brute-force reference computations for the tests. Nothing here touches the
// library: groups are plain integer vectors and subgroups are explicit
// element sets, so agreement with the RREF/functional code paths is a real
// cross-check.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;

inline std::vector<Vec> all_vectors(int n, int p) {
  std::vector<Vec> out;
  Vec v(n, 0);
  while (true) {
    out.push_back(v);
    int pos = n;
    bool carry = true;
    while (carry && pos > 0) {
      --pos;
      if (++v[pos] == p) {
        v[pos] = 0;
      } else {
        carry = false;
      }
    }
    if (carry) break;
  }
  return out;
}

inline int dot(const Vec& a, const Vec& b, int p) {
  long acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += long{a[i]} * b[i];
  return static_cast<int>(acc % p);
}

inline Vec scale(const Vec& a, int c, int p) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c % p;
  return out;
}

inline Vec add(const Vec& a, const Vec& b, int p) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % p;
  return out;
}

inline bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

// sigma_0 = (p-1,...,p-1), sigma_i = e_i.
inline std::vector<Vec> generators(int n, int p) {
  std::vector<Vec> g;
  g.push_back(Vec(n, p - 1));
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    g.push_back(e);
  }
  return g;
}

// Every element of the span, by closing {0} under adding multiples.
inline std::set<Vec> span(const std::vector<Vec>& vectors, int n, int p) {
  std::set<Vec> elements{Vec(n, 0)};
  for (const auto& v : vectors) {
    std::set<Vec> next;
    for (const auto& e : elements) {
      for (int c = 0; c < p; ++c) next.insert(add(e, scale(v, c, p), p));
    }
    elements = std::move(next);
  }
  return elements;
}

inline std::set<Vec> kernel_elements(const Vec& functional, int p) {
  std::set<Vec> out;
  for (const auto& x : all_vectors(static_cast<int>(functional.size()), p)) {
    if (dot(functional, x, p) == 0) out.insert(x);
  }
  return out;
}

// Representative of the hyperplane ker(a): the multiple c·a whose first
// nonzero entry is 1, found by trying every c.
inline Vec normalized(const Vec& a, int p) {
  for (int c = 1; c < p; ++c) {
    const Vec s = scale(a, c, p);
    const auto it = std::find_if(s.begin(), s.end(), [](int x) { return x != 0; });
    if (it != s.end() && *it == 1) return s;
  }
  return a;
}

// Distinct index-p subgroups of F_p^m as element sets, keyed by a
// normalized functional.
inline std::vector<Vec> hyperplanes(int m, int p) {
  std::set<std::set<Vec>> seen;
  std::vector<Vec> out;
  for (const auto& a : all_vectors(m, p)) {
    if (is_zero(a)) continue;
    if (seen.insert(kernel_elements(a, p)).second) out.push_back(normalized(a, p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Functionals on F_p^m vanishing on no element of the standard generalized
// Fermat system e_1..e_m, -(e_1+...+e_m).
inline std::vector<Vec> admissible(int m, int p) {
  std::vector<Vec> out;
  const auto gens = generators(m, p);
  for (const auto& h : hyperplanes(m, p)) {
    const auto elems = kernel_elements(h, p);
    bool ok = true;
    for (const auto& g : gens) ok = ok && elems.count(g) == 0;
    if (ok) out.push_back(h);
  }
  return out;
}

inline std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Riemann-Hurwitz with the stabilizer data read off the element set.
inline std::int64_t quotient_genus(int n, int p, const std::set<Vec>& subgroup) {
  const std::int64_t order = static_cast<std::int64_t>(subgroup.size());
  const std::int64_t fiber = ipow(p, n - 1);
  const std::int64_t euler_cover = fiber * ((n - 1) * (p - 1) - 2);  // 2g-2
  std::int64_t ramification = 0;
  for (const auto& s : generators(n, p)) {
    std::int64_t d = 0;
    for (int c = 0; c < p; ++c) d += subgroup.count(scale(s, c, p));
    ramification += fiber * (d - 1);
  }
  return ((euler_cover - ramification) / order + 2) / 2;
}

// Classical Fermat curve of degree p.
inline std::int64_t fermat_plane_genus(int p) { return (p - 1) * (p - 2) / 2; }

// Humbert-Edge curve of type n.
inline std::int64_t humbert_edge_genus(int n) { return ipow(2, n - 2) * (n - 3) + 1; }

}  // namespace oracle
