#pragma once

// Test-only integer linear algebra on machine integers, written independently
// of the library's GMP routines so the two can be cross-checked.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<long long>>;

inline long long checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("oracle: int64 overflow");
  return static_cast<long long>(v);
}

/// Invariant factors (nonzero diagonal entries of the Smith form, 1s included)
/// by plain elimination.
inline std::vector<long long> smith_diagonal(Mat a) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  std::vector<long long> diag;
  std::size_t t = 0;
  while (t < m && t < n) {
    // smallest nonzero entry in the remaining block
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (pi == m || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) pi = i, pj = j;
    if (pi == m) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);
    bool clean = true;
    for (std::size_t i = t + 1; i < m; ++i) {
      const long long q = a[i][t] / a[t][t];
      for (std::size_t j = t; j < n; ++j) a[i][j] = checked(static_cast<__int128>(a[i][j]) - static_cast<__int128>(q) * a[t][j]);
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      const long long q = a[t][j] / a[t][t];
      for (std::size_t i = t; i < m; ++i) a[i][j] = checked(static_cast<__int128>(a[i][j]) - static_cast<__int128>(q) * a[i][t]);
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    // divisibility: fold a non-divisible entry into the pivot row
    bool divides = true;
    for (std::size_t i = t + 1; i < m && divides; ++i)
      for (std::size_t j = t + 1; j < n; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
          divides = false;
          break;
        }
    if (!divides) continue;
    diag.push_back(std::llabs(a[t][t]));
    ++t;
  }
  return diag;
}

/// Homology of a chain complex C_0 <-d_1- C_1 <-d_2- ... given boundary
/// matrices d_k (rows = dim C_{k-1}, cols = dim C_k) and the dimensions.
struct Homology {
  long long free_rank = 0;
  std::vector<long long> torsion;
};

inline std::vector<Homology> homology(const std::vector<int>& dims, const std::vector<Mat>& boundaries) {
  // boundaries[k] is d_{k+1}: C_{k+1} -> C_k
  const std::size_t top = dims.size();
  std::vector<std::vector<long long>> diags(top + 1);
  std::vector<long long> ranks(top + 1, 0);
  for (std::size_t k = 0; k < boundaries.size(); ++k) {
    diags[k + 1] = smith_diagonal(boundaries[k]);
    ranks[k + 1] = static_cast<long long>(diags[k + 1].size());
  }
  std::vector<Homology> out(top);
  for (std::size_t k = 0; k < top; ++k) {
    const long long cycles = dims[k] - ranks[k];
    out[k].free_rank = cycles - ranks[k + 1];
    for (long long d : diags[k + 1])
      if (d > 1) out[k].torsion.push_back(d);
  }
  return out;
}

inline long long det(Mat a) {
  // Bareiss
  const std::size_t n = a.size();
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = checked((static_cast<__int128>(a[i][j]) * a[k][k] - static_cast<__int128>(a[i][k]) * a[k][j]) / prev);
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Invariant factors via determinantal divisors: d_k = gcd of all k x k minors.
inline std::vector<long long> determinantal_factors(const Mat& a) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  std::vector<long long> out;
  long long prev = 1;
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    long long g = 0;
    std::vector<bool> rsel(m, false), csel(n, false);
    std::fill(rsel.end() - static_cast<long>(k), rsel.end(), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.end() - static_cast<long>(k), csel.end(), true);
      do {
        Mat sub;
        for (std::size_t i = 0; i < m; ++i) {
          if (!rsel[i]) continue;
          std::vector<long long> row;
          for (std::size_t j = 0; j < n; ++j)
            if (csel[j]) row.push_back(a[i][j]);
          sub.push_back(row);
        }
        g = std::gcd(g, std::llabs(det(sub)));
      } while (std::next_permutation(csel.begin(), csel.end()));
    } while (std::next_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace oracle
