#pragma once

#include <vector>

#include "deo/exppoly.hpp"

namespace deo::kernels {

// Serial is the reference; Parallel must agree with it bit for bit.
enum class Execution { Serial, Parallel };

// Re f(t0 + i h), i = 0..count-1
std::vector<long double> sample(const ExpPoly& f, long double t0, long double h, int count,
                                Execution exec = Execution::Serial);

// Fourth-order central difference; out[i] approximates v' at node i + 2.
std::vector<long double> central_difference(const std::vector<long double>& v, long double h,
                                            Execution exec = Execution::Serial);

// out[i] ~ integral of v from node 0 to node i (out[0] = 0), fourth order.
std::vector<long double> cumulative_integral(const std::vector<long double>& v, long double h);

}  // namespace deo::kernels
