// Acceptance run: one PASS/FAIL line per criterion. Every comparison is
// exact rational equality; each criterion also has a wall-clock limit.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sys/wait.h>

#include "plh/harness.hpp"

using namespace plh;
using namespace plh::harness;

namespace {

struct Batch {
  std::string suite;
  std::vector<std::string> names; ///< exact property names
  long cases = 0;
};

struct Criterion {
  int id = 0;
  std::string title;
  double limit_seconds = 0;
  std::vector<Batch> batches;
  bool expect_counterexample = false; ///< mutation criterion
};

std::vector<Property> pick(const Batch& batch) {
  std::vector<Property> out;
  for (const Property& p : suite_properties(batch.suite))
    for (const std::string& name : batch.names)
      if (p.name == name) out.push_back(p);
  if (out.size() != batch.names.size())
    throw Error(ErrorCode::usage, "acceptance: missing property in suite " + batch.suite);
  return out;
}

std::vector<std::string> tagged(const std::string& stem, const std::vector<std::string>& tags) {
  std::vector<std::string> out;
  for (const std::string& t : tags) out.push_back(stem + "[" + t + "]");
  return out;
}

PLHomeo reversed_conjugate(const PLHomeo& h, const PLHomeo& g) {
  return compose(compose(invert(g), h), g);
}

bool report(const Criterion& c, bool ok, double seconds, const std::string& note) {
  const bool in_time = seconds < c.limit_seconds;
  std::cout << "criterion " << std::setw(2) << c.id << ' ' << (ok && in_time ? "PASS" : "FAIL")
            << "  " << std::left << std::setw(54) << c.title << std::right << std::fixed
            << std::setprecision(2) << std::setw(8) << seconds << " s (limit "
            << std::setprecision(0) << c.limit_seconds << " s, tolerance 0)";
  if (!note.empty()) std::cout << "  " << note;
  std::cout << std::endl;
  return ok && in_time;
}

bool run_criterion(const Criterion& c) {
  Options options;
  options.seed = 42;
  if (c.expect_counterexample) options.conjugate = reversed_conjugate;
  const auto start = std::chrono::steady_clock::now();
  long cases = 0, failures = 0;
  bool every_batch_caught = true;
  std::string note;
  for (const Batch& b : c.batches) {
    options.cases = b.cases;
    for (const Property& p : pick(b)) {
      const SuiteReport r = run_properties(b.suite, {p}, options);
      cases += b.cases;
      failures += r.failures;
      if (c.expect_counterexample) {
        if (!r.counterexample) every_batch_caught = false;
        note += (note.empty() ? "" : " ") + p.name + ":" + std::to_string(r.failures);
      } else if (r.counterexample && note.empty()) {
        note = p.name + " case " + std::to_string(r.counterexample->index) + ": " +
               r.counterexample->detail;
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.expect_counterexample) return report(c, every_batch_caught, seconds, "caught " + note);
  return report(c, failures == 0, seconds,
                std::to_string(cases) + " cases" + (note.empty() ? "" : "; " + note));
}

bool run_cli_criterion() {
  const Criterion c{10, "full verify --suite all --seed 42 --cases 200", 300, {}, false};
  const std::string command = std::string("\"") + PLH_CLI_PATH +
                              "\" verify --suite all --seed 42 --cases 200 > /dev/null 2>&1";
  const auto start = std::chrono::steady_clock::now();
  const int raw = std::system(command.c_str());
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const int status = raw != -1 && WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return report(c, status == 0, seconds, "exit " + std::to_string(status));
}

} // namespace

int main() {
  const std::vector<std::string> kernel_modes{"F", "Pa(2)", "Pa(3/2)", "Pa(5/3)", "P"};
  const std::vector<std::string> bases{"2", "3/2", "5/3"};
  const std::vector<std::string> pa_modes{"Pa(2)", "Pa(3/2)", "Pa(5/3)"};
  const std::vector<std::string> all_modes{"F", "Pa(2)", "Pa(3/2)", "Pa(5/3)", "PQ", "P"};

  std::vector<std::string> axioms;
  for (const char* law : {"associativity", "identity", "inverse"})
    for (const std::string& n : tagged(std::string("group_axioms/") + law, kernel_modes))
      axioms.push_back(n);

  std::vector<std::string> alpha_pa = tagged("alpha/homomorphism", pa_modes);
  for (const std::string& n : tagged("alpha/class_function", pa_modes)) alpha_pa.push_back(n);

  const std::vector<Criterion> criteria{
      {1, "group axioms in F, P^a (a = 2, 3/2, 5/3), P", 10, {{"group_axioms", axioms, 500}}},
      {2,
       "alpha homomorphism and class function",
       10,
       {{"alpha", {"alpha/homomorphism[F]", "alpha/class_function[F]"}, 500},
        {"alpha", alpha_pa, 200}}},
      {3,
       "beta surjectivity (odd k <= 199), class invariance",
       30,
       {{"beta", {"beta/realize_round_trip"}, 100}, {"beta", {"beta/class_invariance"}, 200}}},
      {4,
       "gamma level independence, class invariance, realizer",
       60,
       {{"gamma",
         {"gamma/level_independence", "gamma/class_invariance", "gamma/realize_round_trip"},
         100}}},
      {5,
       "word identity in F (case 0: x0 on I_2, h0 basic)",
       60,
       {{"word_F", {"word_F/identity"}, 50}}},
      {6,
       "P^a connector, beta_a, gamma_a",
       60,
       {{"pa", tagged("pa/connect_slopes", bases), 100},
        {"pa", tagged("pa/beta_class_invariance", bases), 200},
        {"pa", tagged("pa/gamma_level_independence", bases), 100},
        {"pa", tagged("pa/gamma_class_invariance", bases), 100}}},
      {7,
       "monitored information in P and P^Q",
       120,
       {{"pgroup", {"pgroup/shape_law", "pgroup/conjugation_invariance"}, 200},
        {"pgroup", {"pgroup/golden_monitor"}, 1},
        {"pgroup", {"pgroup/realize_info"}, 100},
        {"pq", {"pq/realize_info"}, 100},
        {"word_P", {"word_P/identity[P]", "word_P/identity[PQ]"}, 50}}},
      {8,
       "commutator end slopes are 1",
       10,
       {{"commutator", tagged("commutator/end_slopes", all_modes), 500}}},
      {9,
       "reversed conjugation is detected",
       120,
       {{"beta", {"beta/class_invariance"}, 200},
        {"gamma", {"gamma/class_invariance"}, 200},
        {"pgroup", {"pgroup/conjugation_invariance"}, 200}},
       true},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    try {
      all = run_criterion(c) && all;
    } catch (const std::exception& e) {
      report(c, false, 0, std::string("error: ") + e.what());
      all = false;
    }
  }
  all = run_cli_criterion() && all;
  std::cout << (all ? "acceptance PASS" : "acceptance FAIL") << std::endl;
  return all ? 0 : 1;
}
