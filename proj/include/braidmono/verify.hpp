#pragma once

#include <functional>
#include <string>
#include <vector>

#include "braidmono/words.hpp"

namespace braidmono {

enum class Verdict { Holds, Fails, ResourceExceeded };

// paper-asserted: the text asserts the identity with a displayed proof; a
//   failure fails the suite.
// recorded-outcome: the catalogue reports the computed truth value (used
//   where the displayed equations look garbled or depend on the pinned tau
//   word); a failure is a logged discrepancy, not a suite failure.
// negative-control: deliberately perturbed identity, must fail with witness.
enum class Expectation { PaperAsserted, RecordedOutcome, NegativeControl };

struct VerdictReport {
  std::string id;
  std::string params;
  Verdict verdict = Verdict::Holds;
  std::string witness;
  Expectation expected = Expectation::PaperAsserted;
  std::string note;
};

struct IdentityCase {
  std::string id;
  std::string params;
  Expectation expected = Expectation::PaperAsserted;
  std::string note;
  std::function<bool(std::string& witness)> check;
};

const std::vector<IdentityCase>& identity_catalogue();

VerdictReport run_identity(const IdentityCase& c);

// Runs every catalogued case whose id matches the filter ("" or "*" for all,
// trailing '*' for a prefix match, otherwise exact).
std::vector<VerdictReport> run_suite(const std::string& filter);

// true iff a paper-asserted case fails (or errors) or a negative control
// unexpectedly holds
bool suite_failed(const std::vector<VerdictReport>& reports);

std::string report_line(const VerdictReport& r);
std::string report_json(const std::vector<VerdictReport>& rs);

// ---- Lemma filt engine ----

struct FiltMatch {
  bool t_side;        // true: matches an element of T_k - T_{k-1}
  std::size_t level;  // k >= 2
  std::size_t from;   // index into the level's new elements
  std::size_t to;     // index into the full other-side set at level k
  BraidWord conjugator;
};

// Filtered generating sets S_1 c S_2 c ... and T likewise, with explicit
// conjugators for every element above level one.
struct FiltInstance {
  std::string name;
  std::vector<std::vector<BraidWord>> s_new;  // elements new at each level
  std::vector<std::vector<BraidWord>> t_new;
  std::vector<FiltMatch> matches;
};

VerdictReport run_filt(const FiltInstance& inst);

// the iso/tri/gen filtration with the proof's conjugators
FiltInstance filt_iso_tri_gen(int n);

}  // namespace braidmono
