#include "plh/harness.hpp"

namespace plh::harness {

namespace {

constexpr int kMaxRounds = 200;

bool still_fails(const Property& property, const Case& candidate, const Options& options) {
  try {
    return property.check(candidate, options).outcome == Outcome::fail;
  } catch (const std::exception&) {
    // A candidate that breaks a precondition is a different failure.
    return false;
  }
}

// Simpler variants of f, most aggressive first.
std::vector<PLHomeo> candidates(const PLHomeo& f) {
  std::vector<PLHomeo> out;
  const std::vector<Point>& pts = f.breakpoints();
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    std::vector<Point> fewer = pts;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(PLHomeo::from_breakpoints(std::move(fewer)));
  }
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const Rational x = simplest_between(pts[i - 1].x, pts[i + 1].x);
    const Rational y = simplest_between(pts[i - 1].y, pts[i + 1].y);
    if (x != pts[i].x) {
      std::vector<Point> moved = pts;
      moved[i].x = x;
      out.push_back(PLHomeo::from_breakpoints(std::move(moved)));
    }
    if (y != pts[i].y) {
      std::vector<Point> moved = pts;
      moved[i].y = y;
      out.push_back(PLHomeo::from_breakpoints(std::move(moved)));
    }
  }
  return out;
}

} // namespace

Case shrink(const Property& property, const Case& failing, const Options& options) {
  Case current = failing;
  if (!still_fails(property, current, options)) return current;
  for (int round = 0; round < kMaxRounds; ++round) {
    bool improved = false;
    for (std::size_t e = 0; e < current.elements.size() && !improved; ++e) {
      for (PLHomeo& simpler : candidates(current.elements[e].value)) {
        Case trial = current;
        trial.elements[e].value = std::move(simpler);
        if (still_fails(property, trial, options)) {
          current = std::move(trial);
          improved = true;
          break;
        }
      }
    }
    if (!improved) break;
  }
  return current;
}

} // namespace plh::harness
