#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "plh/random.hpp"

namespace plh::harness {

using gen::Rng;

/// h^g; the suites route every conjugation through this so that a wrong
/// convention can be injected.
using Conjugator = std::function<PLHomeo(const PLHomeo& h, const PLHomeo& g)>;

enum class Execution { serial, parallel };

struct Options {
  std::uint64_t seed = 42;
  long cases = 200;
  Execution execution = Execution::parallel;
  Conjugator conjugate = [](const PLHomeo& h, const PLHomeo& g) { return plh::conjugate(h, g); };
  bool shrink = true;
};

template <class T> struct Named {
  std::string name;
  T value;

  friend bool operator==(const Named&, const Named&) = default;
};

/// Inputs of one property case.
struct Case {
  std::vector<Named<PLHomeo>> elements;
  std::vector<Named<Rational>> scalars;

  Case& with(std::string name, PLHomeo f);
  Case& with(std::string name, Rational x);
  const PLHomeo& element(const std::string& name) const;
  const Rational& scalar(const std::string& name) const;
  long integer(const std::string& name) const;

  friend bool operator==(const Case&, const Case&) = default;
};

enum class Outcome { pass, fail, discard };

struct Verdict {
  Outcome outcome = Outcome::pass;
  std::string detail;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {Outcome::fail, std::move(why)}; }
  static Verdict discard(std::string why) { return {Outcome::discard, std::move(why)}; }
  /// pass when `holds`, otherwise fail with `why`.
  static Verdict expect(bool holds, std::string why) {
    return holds ? pass() : fail(std::move(why));
  }
};

struct Property {
  std::string name; ///< "suite/property"
  std::function<Case(Rng&, long index)> generate;
  std::function<Verdict(const Case&, const Options&)> check;
};

struct PropertyReport {
  std::string name;
  long cases = 0;
  long passed = 0;
  long failed = 0;
  long discarded = 0;
};

struct Counterexample {
  std::string property;
  long index = 0;
  std::string detail;
  Case inputs;
  Case shrunk;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  long cases = 0;
  std::vector<PropertyReport> properties;
  long failures = 0;
  std::optional<Counterexample> counterexample;
  double elapsed_seconds = 0;
};

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Properties of a named suite; throws ErrorCode::usage for unknown names.
std::vector<Property> suite_properties(const std::string& suite);

/// Engine seed for one case: a SplitMix64 hash of (seed, property, index).
std::uint64_t case_seed(std::uint64_t seed, const std::string& property, long index);

/// Runs one case; exceptions become failures.
Verdict run_case(const Property& property, long index, const Options& options,
                 Case* inputs = nullptr);

SuiteReport run_properties(const std::string& suite, const std::vector<Property>& properties,
                           const Options& options);
SuiteReport run_suite(const std::string& suite, const Options& options);

/// Greedily drops interior breakpoints and simplifies coordinates while the
/// case still fails (without throwing).
Case shrink(const Property& property, const Case& failing, const Options& options);

nlohmann::json to_json(const Case& c);
nlohmann::json to_json(const SuiteReport& report, bool timing = true);
std::string to_text(const SuiteReport& report);

} // namespace plh::harness
