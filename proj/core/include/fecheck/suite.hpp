#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fecheck/verdict.hpp"

namespace fecheck {

struct SuiteCase {
  std::string name;
  Outcome expected = Outcome::pass;
  std::function<Verdict()> run;
};

struct SuiteResult {
  std::string name;
  Outcome expected = Outcome::pass;
  Verdict verdict;
  bool matched() const noexcept { return verdict.outcome == expected; }
};

struct SuiteOptions {
  std::uint64_t seed = 7;
  std::size_t samples = 10;  ///< random samples added to the structured ones
  bool corrupt_fixture = false;  ///< test hook: breaks the power-equation converse fixture
};

/// Built-in checks: worked examples, commute and chain-rule cases, both converse
/// directions with their kernels, and counterexamples expected to FAIL.
std::vector<SuiteCase> builtin_cases(const SuiteOptions& options);

/// Runs cases concurrently and returns results sorted by name. An exception
/// inside a case becomes a FAIL carrying the message. Throws
/// std::invalid_argument on an empty list or duplicate names.
std::vector<SuiteResult> run_cases(std::vector<SuiteCase> cases, unsigned threads = 0);

std::vector<SuiteResult> paper_suite(const SuiteOptions& options = {});

std::size_t mismatches(const std::vector<SuiteResult>& results);

}  // namespace fecheck
