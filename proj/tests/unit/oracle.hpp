#pragma once

// Brute-force reference computations, written without the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using Row = std::vector<long long>;
using Mat = std::vector<Row>;

inline long long binomial(long long n, long long k) {
  if (k == 0) return 1;
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Every function {0..l} -> {0..k}, kept when weakly increasing.
inline std::vector<std::vector<int>> monotone(int l, int k) {
  std::vector<std::vector<int>> out;
  if (l < 0) return {{}};
  if (k < 0) return out;
  std::vector<int> f(static_cast<std::size_t>(l + 1), 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 1; i < f.size(); ++i) ok = ok && f[i - 1] <= f[i];
    if (ok) out.push_back(f);
    std::size_t i = 0;
    while (i < f.size() && f[i] == k) f[i++] = 0;
    if (i == f.size()) break;
    ++f[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool surjective(const std::vector<int>& f, int k) {
  std::vector<bool> hit(static_cast<std::size_t>(k + 1), false);
  for (int v : f) hit[static_cast<std::size_t>(v)] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

// |simplex(n)_m| and |boundary(n)_m| by listing maps [m] -> [n].
inline std::size_t simplex_level(int n, int m) { return monotone(m, n).size(); }
inline std::size_t boundary_level(int n, int m) {
  std::size_t c = 0;
  for (const auto& f : monotone(m, n)) c += surjective(f, n) ? 0 : 1;
  return c;
}

// Leibniz expansion.
inline long long det(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  long long total = 0;
  do {
    long long term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][p[i]];
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Smith invariants d_k = D_k / D_{k-1}, D_k the gcd of the k x k minors.
inline std::vector<long long> invariant_factors(const Mat& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<long long> out;
  long long prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    long long g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Mat minor(k, Row(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = a[r[i]][c[j]];
        g = std::gcd(g, det(minor));
      }
    if (g == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(prev == 0 ? 0 : g / prev);
    prev = g;
  }
  return out;
}

// Rank over Z/p by Gaussian elimination.
inline std::size_t rank_mod(Mat a, long long p) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  auto inv = [p](long long x) {
    long long r = 1, e = p - 2;
    x %= p;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const long long iv = inv(a[rank][c]);
    for (auto& x : a[rank]) x = x * iv % p;
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && a[r][c] != 0) {
        const long long f = a[r][c];
        for (std::size_t j = 0; j < cols; ++j) a[r][j] = ((a[r][j] - f * a[rank][j]) % p + p) % p;
      }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
