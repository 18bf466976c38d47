#pragma once

#include <string>
#include <vector>

#include "plh/plmap.hpp"

namespace plh {

struct Sample {
  Rational x;
  Rational fx;
};

/// Evaluates f at x_i = i / (points - 1), i = 0..points-1. points >= 2.
std::vector<Sample> sample_serial(const PLHomeo& f, int points);
/// Same grid, evaluated with an OpenMP parallel loop. Output is identical to
/// sample_serial.
std::vector<Sample> sample_parallel(const PLHomeo& f, int points);

/// CSV with header x,fx,x_exact,fx_exact; decimal columns rounded to `digits`.
std::string samples_to_csv(const std::vector<Sample>& samples, int digits);

} // namespace plh
