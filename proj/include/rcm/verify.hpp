#pragma once
// Property-verification suites exposed through the CLI `verify` command.
//
// Each suite runs a fixed battery of exact checks (formula vs. independent
// recomputation, closed form vs. brute force) and reports one CheckResult
// per check.  Checks whose exhaustive search space exceeds the caller's
// budget are reported as skipped, never as failed, so any budget yields an
// honest report.

#include <string>
#include <vector>

#include "rcm/numtheory.hpp"

namespace rcm {

enum class Status { pass, fail, skip };

const char* status_name(Status s);  // "PASS" / "FAIL" / "SKIP"

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::string detail;  // counterexample or skip reason; empty when passing
};

// Closed-form orders over prime fields and extensions vs. exhaustive
// enumeration, unit-part factor split, determinant-one counts, and the
// image of the determinant map.
std::vector<CheckResult> verify_orders(u64 budget);

// Orders over Z/aZ vs. enumeration, multiplicativity across the prime
// factorization of a, and the p^n lifting recursion between Z/p^t and
// Z/p^{t+1}.
std::vector<CheckResult> verify_zmod(u64 budget);

// Cycle-structure formula for x -> p^t x on Z/mZ vs. the literal cycle
// decomposition, and forward/inverse consistency.
std::vector<CheckResult> verify_cycles();

// Pascal-matrix inverses (signed and reflected), Kronecker factorization
// of Pascal matrices over F_p, and digit-wise binomials vs. exact ones.
std::vector<CheckResult> verify_pascal();

// Conjugation to block-diagonal Jordan form, canonical forms of random
// regular circulants, admissibility and round-trip synthesis, the
// admissible-count identity, and group axioms on random pairs.
std::vector<CheckResult> verify_structure(u64 budget);

// Dispatch by suite name: orders | zmod | cycles | pascal | structure |
// all.  Throws std::invalid_argument for unknown names.
std::vector<CheckResult> verify_suite(const std::string& name, u64 budget);

// True iff no check failed (skips are non-failing).
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace rcm
