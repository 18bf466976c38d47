#include "plh/sampling.hpp"

#include <sstream>

namespace plh {

namespace {

void check_points(int points) {
  if (points < 2) throw Error(ErrorCode::domain, "sample: need at least 2 points");
}

Sample sample_at(const PLHomeo& f, int i, int points) {
  Rational x(i, points - 1);
  Rational fx = f.evaluate(x);
  return Sample{std::move(x), std::move(fx)};
}

} // namespace

std::vector<Sample> sample_serial(const PLHomeo& f, int points) {
  check_points(points);
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) out.push_back(sample_at(f, i, points));
  return out;
}

std::vector<Sample> sample_parallel(const PLHomeo& f, int points) {
  check_points(points);
  std::vector<Sample> out(static_cast<std::size_t>(points));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = sample_at(f, i, points);
  return out;
}

std::string samples_to_csv(const std::vector<Sample>& samples, int digits) {
  std::ostringstream os;
  os << "x,fx,x_exact,fx_exact\n";
  for (const Sample& s : samples)
    os << s.x.to_decimal(digits) << ',' << s.fx.to_decimal(digits) << ',' << s.x.str() << ','
       << s.fx.str() << '\n';
  return os.str();
}

} // namespace plh
