#include "plh/harness.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "plh/json_io.hpp"

namespace plh::harness {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// FNV-1a, stable across platforms unlike std::hash.
std::uint64_t name_hash(const std::string& name) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  return h;
}

template <class T> const T& lookup(const std::vector<Named<T>>& items, const std::string& name) {
  for (const auto& item : items)
    if (item.name == name) return item.value;
  throw Error(ErrorCode::usage, "case has no input named '" + name + "'");
}

} // namespace

Case& Case::with(std::string name, PLHomeo f) {
  elements.push_back({std::move(name), std::move(f)});
  return *this;
}

Case& Case::with(std::string name, Rational x) {
  scalars.push_back({std::move(name), std::move(x)});
  return *this;
}

const PLHomeo& Case::element(const std::string& name) const { return lookup(elements, name); }
const Rational& Case::scalar(const std::string& name) const { return lookup(scalars, name); }
long Case::integer(const std::string& name) const { return scalar(name).num().get_si(); }

std::uint64_t case_seed(std::uint64_t seed, const std::string& property, long index) {
  return splitmix64(splitmix64(seed ^ name_hash(property)) + static_cast<std::uint64_t>(index));
}

Verdict run_case(const Property& property, long index, const Options& options, Case* inputs) {
  try {
    Rng rng(case_seed(options.seed, property.name, index));
    Case c = property.generate(rng, index);
    if (inputs) *inputs = c;
    return property.check(c, options);
  } catch (const Error& e) {
    return Verdict::fail("exception " + std::string(code_name(e.code())) + ": " + e.what());
  } catch (const std::exception& e) {
    return Verdict::fail(std::string("exception: ") + e.what());
  }
}

SuiteReport run_properties(const std::string& suite, const std::vector<Property>& properties,
                           const Options& options) {
  if (options.cases < 1) throw Error(ErrorCode::usage, "cases must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = suite;
  report.seed = options.seed;
  report.cases = options.cases;

  for (const Property& property : properties) {
    std::vector<Verdict> verdicts(static_cast<std::size_t>(options.cases));
    if (options.execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long i = 0; i < options.cases; ++i)
        verdicts[static_cast<std::size_t>(i)] = run_case(property, i, options);
    } else {
      for (long i = 0; i < options.cases; ++i)
        verdicts[static_cast<std::size_t>(i)] = run_case(property, i, options);
    }

    // Reduction in case order keeps the report independent of scheduling.
    PropertyReport pr{property.name, options.cases, 0, 0, 0};
    for (long i = 0; i < options.cases; ++i) {
      const Verdict& v = verdicts[static_cast<std::size_t>(i)];
      switch (v.outcome) {
      case Outcome::pass:
        ++pr.passed;
        break;
      case Outcome::discard:
        ++pr.discarded;
        break;
      case Outcome::fail:
        ++pr.failed;
        if (!report.counterexample) {
          Counterexample ce;
          ce.property = property.name;
          ce.index = i;
          ce.detail = v.detail;
          run_case(property, i, options, &ce.inputs);
          ce.shrunk = options.shrink ? shrink(property, ce.inputs, options) : ce.inputs;
          report.counterexample = std::move(ce);
        }
        break;
      }
    }
    report.failures += pr.failed;
    report.properties.push_back(std::move(pr));
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SuiteReport run_suite(const std::string& suite, const Options& options) {
  return run_properties(suite, suite_properties(suite), options);
}

nlohmann::json to_json(const Case& c) {
  nlohmann::json elements = nlohmann::json::object();
  for (const auto& e : c.elements) elements[e.name] = to_json(e.value);
  nlohmann::json scalars = nlohmann::json::object();
  for (const auto& s : c.scalars) scalars[s.name] = s.value.str();
  return {{"elements", elements}, {"scalars", scalars}};
}

nlohmann::json to_json(const SuiteReport& report, bool timing) {
  nlohmann::json props = nlohmann::json::array();
  for (const PropertyReport& p : report.properties)
    props.push_back({{"name", p.name},
                     {"cases", p.cases},
                     {"passed", p.passed},
                     {"failed", p.failed},
                     {"discarded", p.discarded}});
  nlohmann::json out = {{"suite", report.suite}, {"seed", report.seed},
                        {"cases", report.cases}, {"failures", report.failures},
                        {"properties", props},   {"counterexample", nullptr}};
  if (report.counterexample) {
    const Counterexample& ce = *report.counterexample;
    out["counterexample"] = {{"property", ce.property},
                             {"index", ce.index},
                             {"detail", ce.detail},
                             {"inputs", to_json(ce.inputs)},
                             {"shrunk", to_json(ce.shrunk)}};
  }
  if (timing) out["elapsed_seconds"] = report.elapsed_seconds;
  return out;
}

std::string to_text(const SuiteReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << "  seed " << report.seed << "  cases " << report.cases << '\n';
  for (const PropertyReport& p : report.properties) {
    os << "  " << (p.failed == 0 ? "ok  " : "FAIL") << ' ' << std::left << std::setw(40) << p.name
       << " passed " << p.passed << "  failed " << p.failed;
    if (p.discarded) os << "  discarded " << p.discarded;
    os << '\n';
  }
  if (report.counterexample) {
    const Counterexample& ce = *report.counterexample;
    os << "first counterexample: " << ce.property << " case " << ce.index << ": " << ce.detail
       << '\n'
       << "  shrunk inputs: " << to_json(ce.shrunk).dump() << '\n';
  }
  os << "failures " << report.failures << "  elapsed " << std::fixed << std::setprecision(2)
     << report.elapsed_seconds << " s\n";
  return os.str();
}

} // namespace plh::harness
