#include "deo/kernels.hpp"

#include "deo/errors.hpp"

namespace deo::kernels {

std::vector<long double> sample(const ExpPoly& f, long double t0, long double h, int count, Execution exec) {
  std::vector<long double> out(count > 0 ? count : 0);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < count; ++i) out[i] = eval_complex(f, t0 + i * h).real();
  } else {
    for (int i = 0; i < count; ++i) out[i] = eval_complex(f, t0 + i * h).real();
  }
  return out;
}

std::vector<long double> central_difference(const std::vector<long double>& v, long double h, Execution exec) {
  const int n = static_cast<int>(v.size()) - 4;
  if (n <= 0) throw StencilOutOfRange("central difference needs at least 5 nodes");
  std::vector<long double> out(n);
  const long double w = 1.0L / (12.0L * h);
  auto at = [&](int i) { return (v[i] - 8.0L * v[i + 1] + 8.0L * v[i + 3] - v[i + 4]) * w; };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) out[i] = at(i);
  } else {
    for (int i = 0; i < n; ++i) out[i] = at(i);
  }
  return out;
}

std::vector<long double> cumulative_integral(const std::vector<long double>& v, long double h) {
  const int n = static_cast<int>(v.size());
  if (n < 3) throw StencilOutOfRange("cumulative integral needs at least 3 nodes");
  std::vector<long double> out(n, 0.0L);
  const long double w3 = h / 12.0L, w4 = h / 24.0L;
  for (int i = 0; i + 1 < n; ++i) {
    long double step;
    if (i == 0)
      step = w3 * (5.0L * v[0] + 8.0L * v[1] - v[2]);
    else if (i + 2 == n)
      step = w3 * (5.0L * v[n - 1] + 8.0L * v[n - 2] - v[n - 3]);
    else
      step = w4 * (-v[i - 1] + 13.0L * v[i] + 13.0L * v[i + 1] - v[i + 2]);
    out[i + 1] = out[i] + step;
  }
  return out;
}

}  // namespace deo::kernels
