#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace xmodcat {

using ObjId = int;
using MorId = int;
using ElemId = int;

/// Malformed or ill-typed input (bad ids, non-composable pair, schema error).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive search ran past its candidate budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::uint64_t required, std::uint64_t limit)
      : std::runtime_error("search budget exceeded: needs >= "
                           + std::to_string(required) + " candidates, limit "
                           + std::to_string(limit)),
        required_(required),
        limit_(limit) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

/// Candidate cap for brute-force enumeration; every search degrades loudly.
struct SearchBudget {
  std::uint64_t limit = 10'000'000;
};

/// Counts candidates against a SearchBudget and throws once exhausted.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget) : limit_(budget.limit) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) throw BudgetError(used_, limit_);
  }

  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t used_ = 0;
  std::uint64_t limit_;
};

struct Violation {
  std::string rule;     // which axiom failed, e.g. "associativity"
  std::string witness;  // the concrete counterexample, rendered with ids
};

/// Outcome of an exhaustive axiom check. Never a failure by itself: callers
/// decide what a non-empty violation list means.
struct ValidationReport {
  std::vector<Violation> violations;
  bool applicable = true;
  std::string not_applicable_reason;

  bool ok() const { return applicable && violations.empty(); }

  void add(std::string rule, std::string witness) {
    violations.push_back({std::move(rule), std::move(witness)});
  }

  std::string summary() const;
};

}  // namespace xmodcat
