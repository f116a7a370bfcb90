#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "toda/rational.hpp"

namespace toda {

// Small dense exact matrices. Everything here is O(n^3) textbook elimination;
// the dimensions in play are the Lie algebra rank (<= 8) and weight-space
// multiplicities (<= 4), so there is nothing to optimize.

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;
using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;

inline RatMat rat_identity(int n) {
  RatMat m(n, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMat int_identity(int n) {
  IntMat m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMat int_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMat c(n, IntVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      long long av = a[i][t];
      if (av == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += av * b[t][j];
    }
  return c;
}

template <typename T>
std::vector<T> mat_vec(const std::vector<std::vector<T>>& a, const std::vector<T>& x) {
  std::vector<T> y(a.size(), T(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

inline RatMat rat_mul(const RatMat& a, const RatMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat c(n, RatVec(m, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

template <typename T>
std::vector<std::vector<T>> transpose(const std::vector<std::vector<T>>& a) {
  if (a.empty()) return {};
  std::vector<std::vector<T>> t(a[0].size(), std::vector<T>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Gauss-Jordan inverse; throws on singular input.
inline RatMat rat_inverse(const RatMat& a) {
  int n = static_cast<int>(a.size());
  RatMat work = a;
  RatMat inv = rat_identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (work[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::invalid_argument("singular matrix has no inverse");
    std::swap(work[piv], work[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = work[col][col];
    for (int j = 0; j < n; ++j) {
      work[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work[r][col] == 0) continue;
      Rat f = work[r][col];
      for (int j = 0; j < n; ++j) {
        work[r][j] -= f * work[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Solve a x = b for symmetric positive definite (or at least nonsingular) a.
inline RatVec rat_solve(RatMat a, RatVec b) {
  int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::invalid_argument("singular linear system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  RatVec x(n, Rat(0));
  for (int i = n - 1; i >= 0; --i) {
    Rat s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

inline Rat rat_det(RatMat a) {
  int n = static_cast<int>(a.size());
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

inline RatMat rat_from_int(const IntMat& a) {
  RatMat m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = RatVec(a[i].begin(), a[i].end());
  return m;
}

}  // namespace toda
