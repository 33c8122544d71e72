#ifndef TSA_CHECKS_SUITES_H
#define TSA_CHECKS_SUITES_H

#include <cstdint>
#include <string>
#include <vector>

#include "tsa/kernel/eval.h"

namespace tsa {

// Outcome of one property suite run. `cases` counts the generated or
// enumerated scenarios, `checks` the individual verifications inside them.
// Runs are deterministic: the same suite, case count, and seed produce the
// same counts and the same first counterexample on every platform.
struct SuiteResult {
  std::string suite;
  long long cases = 0;
  long long checks = 0;
  long long failures = 0;
  std::string first_counterexample;  // empty when everything passed

  bool ok() const { return failures == 0; }
};

// Evaluates every defining equation of every constant (the signature-only
// one excluded) at every number-argument tuple over 0..max_arg, pairing
// each function parameter with each functor from the fixed pool.
SuiteResult check_defining_axioms_sweep(int max_arg,
                                        const EvalLimits& limits = {});

// Random-probe variant: `cases` draws of (constant, arguments) with number
// arguments in 0..40 and pooled functors.
SuiteResult check_defining_axioms(int cases, std::uint64_t seed,
                                  const EvalLimits& limits = {});

// Sequence-code laws: component/encode roundtrips on random sequences
// (length <= 6, entries <= 20), decode and length on positive-entry
// sequences, the concatenation law, pair codes, componentwise joins, and
// agreement between the host codec and the object-language coding
// constants. Ends with the initial-segment codes of every pooled functor
// for lengths 0..12 checked component by component.
SuiteResult check_codec(int cases, std::uint64_t seed,
                        const EvalLimits& limits = {});

// Characteristic terms: for random decidable-class formulas, the compiled
// term stays 0/1-valued, vanishes exactly on truth, and mentions only
// variables of the source, across every assignment with values in 0..5.
SuiteResult check_char_term(int cases, std::uint64_t seed,
                            const EvalLimits& limits = {});

// Witness extraction: least witnesses are confirmed minimal by rescanning
// every smaller value, absence is confirmed by a full scan, and choice
// tables satisfy both the match clause and the nothing-smaller clause at
// every point of the domain.
SuiteResult check_witnesses(int cases, std::uint64_t seed,
                            const EvalLimits& limits = {});

// Recursion elimination. Syntactic block: results are recursion-free,
// preserve free-variable sets exactly, leave recursion-free inputs
// untouched, are idempotent, and commute with every connective and
// quantifier as node-for-node equalities. Semantic block: the witness
// check validates the transform on prime-rooted decidable formulas for
// every assignment with values in 0..4 at the given iteration bound.
SuiteResult check_rec_translate(int syntactic_cases, int semantic_cases,
                                std::uint64_t seed,
                                std::uint64_t w_bound = 64,
                                const EvalLimits& limits = {});

// Lambda elimination, mirroring check_rec_translate (the semantic block
// allows up to two abstractions per formula).
SuiteResult check_lambda_translate(int syntactic_cases, int semantic_cases,
                                   std::uint64_t seed,
                                   const EvalLimits& limits = {});

// Schema instantiation: `per_schema` generated instances of every schema
// survive instantiate -> match -> instantiate up to congruence, and
// `adversarial` crafted near-misses are rejected — piece sets violating a
// side condition raise the condition by name, and shape-broken formulas
// never match.
SuiteResult check_schema_roundtrip(int per_schema, int adversarial,
                                   std::uint64_t seed);

// Definitional extension by primitive recursion: for random defining pairs
// the direct recursion and the expanded recursor term agree at every
// argument pair over 0..8, and expansions land inside the unextended
// language. Every tenth case chains a second definition on the first.
SuiteResult check_definitional_extension(int cases, std::uint64_t seed,
                                         const EvalLimits& limits = {});

// Recursor semantics: for every pooled functor and all base/count values
// up to max_xy, the recursor satisfies its two defining equations and
// matches the course-of-values code position by position.
SuiteResult check_rec_semantics(int max_xy, const EvalLimits& limits = {});

// Canonical suite names, in presentation order.
const std::vector<std::string>& suite_names();

// Name-driven dispatch used by the command line. `cases <= 0` selects the
// suite's default volume. Throws ParseError for unknown names.
SuiteResult run_suite(const std::string& name, int cases, std::uint64_t seed,
                      const EvalLimits& limits = {});

}  // namespace tsa

#endif  // TSA_CHECKS_SUITES_H
