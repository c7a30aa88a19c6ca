#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "stapulse/errors.hpp"

namespace stapulse {

namespace detail {

template <typename T>
double abs_of(const T& x) {
  return std::abs(x);
}

// Recursive adaptive Simpson with the usual 15x error estimate.
template <typename F, typename T>
T adaptive_simpson_rec(const F& f, double a, double b, T fa, T fm, T fb, T whole,
                       double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const T flm = f(lm);
  const T frm = f(rm);
  const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const T delta = left + right - whole;
  if (depth <= 0 || abs_of(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

// Integrate f over [a,b] to absolute tolerance tol. The integrand may be
// real or complex. Oscillatory integrands are handled by seeding the
// recursion with enough panels to resolve the fastest expected mode.
template <typename F>
auto integrate(const F& f, double a, double b, double tol = 1e-10,
               int initial_panels = 16) -> decltype(f(a)) {
  using T = decltype(f(a));
  if (a == b) return T{};
  initial_panels = std::max(initial_panels, 1);
  const double h = (b - a) / initial_panels;
  T total{};
  for (int i = 0; i < initial_panels; ++i) {
    const double x0 = a + i * h;
    const double x1 = x0 + h;
    const double xm = 0.5 * (x0 + x1);
    const T f0 = f(x0), fm = f(xm), f1 = f(x1);
    const T whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
    total += detail::adaptive_simpson_rec(f, x0, x1, f0, fm, f1, whole,
                                          tol / initial_panels, 48);
  }
  return total;
}

// Scan [lo,hi] in n_steps equal steps, collect all sign-change brackets of f.
template <typename F>
std::vector<std::pair<double, double>> bracket_roots(const F& f, double lo, double hi,
                                                     int n_steps) {
  std::vector<std::pair<double, double>> brackets;
  double x_prev = lo;
  double f_prev = f(lo);
  for (int i = 1; i <= n_steps; ++i) {
    const double x = lo + (hi - lo) * i / n_steps;
    const double fx = f(x);
    if (f_prev == 0.0) brackets.emplace_back(x_prev, x_prev);
    if (f_prev * fx < 0.0) brackets.emplace_back(x_prev, x);
    x_prev = x;
    f_prev = fx;
  }
  return brackets;
}

// Bisection to absolute x tolerance. The bracket must change sign.
template <typename F>
double bisect(const F& f, double lo, double hi, double xtol = 1e-12) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  double fhi = f(hi);
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) {
    std::ostringstream msg;
    msg << "bisect: no sign change on [" << lo << ", " << hi << "], f = " << flo
        << " .. " << fhi;
    throw NoBracketFound(msg.str());
  }
  while (hi - lo > xtol) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if (flo * fmid < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  return 0.5 * (lo + hi);
}

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
};

// Nelder-Mead in n dimensions. Good enough for the 2-parameter phase
// optimization this project needs; not meant as a general-purpose library.
template <typename F>
SimplexResult nelder_mead(const F& f, std::vector<double> x0, double scale = 0.1,
                          double ftol = 1e-16, double xtol = 1e-12,
                          int max_iter = 4000) {
  const size_t n = x0.size();
  std::vector<std::vector<double>> pts(n + 1, x0);
  for (size_t i = 0; i < n; ++i) pts[i + 1][i] += scale;
  std::vector<double> vals(n + 1);
  for (size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);

  auto order = [&] {
    std::vector<size_t> idx(n + 1);
    for (size_t i = 0; i <= n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return vals[a] < vals[b]; });
    std::vector<std::vector<double>> p2(n + 1);
    std::vector<double> v2(n + 1);
    for (size_t i = 0; i <= n; ++i) {
      p2[i] = pts[idx[i]];
      v2[i] = vals[idx[i]];
    }
    pts.swap(p2);
    vals.swap(v2);
  };

  int iter = 0;
  for (; iter < max_iter; ++iter) {
    order();
    double spread = 0.0;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j <= n; ++j)
        spread = std::max(spread, std::abs(pts[j][i] - pts[0][i]));
    }
    if (std::abs(vals.back() - vals.front()) < ftol && spread < xtol) break;

    std::vector<double> centroid(n, 0.0);
    for (size_t j = 0; j < n; ++j) {
      for (size_t i = 0; i < n; ++i) centroid[i] += pts[j][i] / n;
    }
    auto blend = [&](double t) {
      std::vector<double> p(n);
      for (size_t i = 0; i < n; ++i) p[i] = centroid[i] + t * (pts[n][i] - centroid[i]);
      return p;
    };

    auto reflected = blend(-1.0);
    const double fr = f(reflected);
    if (fr < vals[0]) {
      auto expanded = blend(-2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        pts[n] = expanded;
        vals[n] = fe;
      } else {
        pts[n] = reflected;
        vals[n] = fr;
      }
    } else if (fr < vals[n - 1]) {
      pts[n] = reflected;
      vals[n] = fr;
    } else {
      auto contracted = blend(fr < vals[n] ? -0.5 : 0.5);
      const double fc = f(contracted);
      if (fc < std::min(fr, vals[n])) {
        pts[n] = contracted;
        vals[n] = fc;
      } else {
        for (size_t j = 1; j <= n; ++j) {
          for (size_t i = 0; i < n; ++i) pts[j][i] = 0.5 * (pts[j][i] + pts[0][i]);
          vals[j] = f(pts[j]);
        }
      }
    }
  }
  order();
  return {pts[0], vals[0], iter};
}

// Run fn(i) for i in [0,n) on up to n_threads workers. Results must be
// written into caller-owned slots indexed by i, so the output order is
// deterministic regardless of scheduling.
inline void parallel_for(std::size_t n, int n_threads, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  n_threads = std::max(1, n_threads);
  const std::size_t workers = std::min<std::size_t>(n_threads, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::atomic<std::size_t> next{0};
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

} // namespace stapulse
