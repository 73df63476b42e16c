// Independent reference computations for the tests. Nothing here calls into
// the library; every routine is written from first principles so the tests
// compare two separate code paths.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <vector>

namespace oracle {

constexpr double pi = std::numbers::pi;

/// P_k(t) by Bonnet's recurrence (k+1) P_{k+1} = (2k+1) t P_k - k P_{k-1}.
inline double legendre(int k, double t) {
  if (k == 0) return 1.0;
  double p0 = 1.0;
  double p1 = t;
  for (int j = 1; j < k; ++j) {
    const double p2 = ((2.0 * j + 1.0) * t * p1 - j * p0) / (j + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/// Zonal harmonic on S^2 from the Legendre addition theorem.
inline double zonal_s2(int k, double t) { return (2.0 * k + 1.0) / (4.0 * pi) * legendre(k, t); }

/// Zonal harmonic on S^3: Z_k = (k+1)^2 / (2 pi^2) * U_k(t) / (k+1), U the
/// Chebyshev polynomial of the second kind, U_k(cos g) = sin((k+1)g)/sin g.
inline double zonal_s3(int k, double gamma) {
  const double s = std::sin(gamma);
  const double u = std::abs(s) < 1e-12 ? (k + 1.0) * (std::cos(gamma) > 0 ? 1.0 : ((k % 2) ? -1.0 : 1.0))
                                       : std::sin((k + 1.0) * gamma) / s;
  return (k + 1.0) / (2.0 * pi * pi) * u;
}

/// omega_N = 2 pi^{(N+1)/2} / Gamma((N+1)/2), straight from std::tgamma.
inline double sphere_area(int n) {
  return 2.0 * std::pow(pi, 0.5 * (n + 1)) / std::tgamma(0.5 * (n + 1));
}

/// Composite Simpson rule with `panels` (even) subintervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

/// Dimension of harmonic homogeneous polynomials of degree k in `vars`
/// variables, by brute force: the kernel dimension of the Laplacian acting on
/// the monomial basis of degree k, with the rank found by Gaussian elimination.
inline int harmonic_count(int vars, int k) {
  std::vector<std::vector<int>> mono_k;
  std::vector<std::vector<int>> mono_k2;
  std::function<void(std::vector<int>&, int, int, std::vector<std::vector<int>>&)> gen =
      [&](std::vector<int>& cur, int var, int left, std::vector<std::vector<int>>& out) {
        if (var == vars - 1) {
          cur[var] = left;
          out.push_back(cur);
          return;
        }
        for (int e = 0; e <= left; ++e) {
          cur[var] = e;
          gen(cur, var + 1, left - e, out);
        }
      };
  std::vector<int> cur(vars, 0);
  gen(cur, 0, k, mono_k);
  if (k >= 2) gen(cur, 0, k - 2, mono_k2);
  if (mono_k2.empty()) return static_cast<int>(mono_k.size());
  std::map<std::vector<int>, int> row_of;
  for (std::size_t i = 0; i < mono_k2.size(); ++i) row_of[mono_k2[i]] = static_cast<int>(i);
  // matrix rows: target monomials, columns: source monomials
  std::vector<std::vector<double>> m(mono_k2.size(), std::vector<double>(mono_k.size(), 0.0));
  for (std::size_t c = 0; c < mono_k.size(); ++c) {
    for (int v = 0; v < vars; ++v) {
      const int a = mono_k[c][v];
      if (a < 2) continue;
      auto target = mono_k[c];
      target[v] -= 2;
      m[static_cast<std::size_t>(row_of[target])][c] += a * (a - 1.0);
    }
  }
  int rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = mono_k.size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    for (std::size_t r = piv; r < rows; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    }
    if (std::abs(m[piv][c]) < 1e-9) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      const double f = m[r][c] / m[static_cast<std::size_t>(rank)][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[static_cast<std::size_t>(rank)][j];
    }
    ++rank;
  }
  return static_cast<int>(cols) - rank;
}

/// Riesz weight (1 - lambda_k/lambda_n)^alpha with 0^0 = 1, on S^N.
inline double riesz_weight(int dim, double alpha, int k, int n) {
  const double lk = k * (k + dim - 1.0);
  const double ln = n * (n + dim - 1.0);
  const double base = 1.0 - lk / ln;
  if (alpha == 0.0) return 1.0;
  return base <= 0.0 ? 0.0 : std::pow(base, alpha);
}

/// A_m^alpha as a ratio of Gamma functions.
inline double cesaro(int m, double alpha) {
  return std::exp(std::lgamma(m + alpha + 1.0) - std::lgamma(alpha + 1.0) - std::lgamma(m + 1.0));
}

}  // namespace oracle
