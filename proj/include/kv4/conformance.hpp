#pragma once

// The acceptance criteria as executable checks.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kv4/kmodule.hpp"

namespace kv4 {

struct ConformanceOptions {
  std::size_t max_dim = 13;        // bound for the family grids
  std::size_t census_max_dim = 4;  // bound for the brute-force census
  std::uint64_t seed = 0;
  std::size_t random_trials = 100;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Labels of the round-trip grid over GF(2): Free, Trivial, every f^l of
/// degree <= 4, and ZeroBand/SyzygyPos/SyzygyNeg up to index 6, capped by max_dim.
std::vector<Label> round_trip_grid(std::size_t max_dim);

/// Seeded random sums of at most four canonical summands (total dim <= 20)
/// over GF(2) and GF(4), conjugated by random invertible matrices.
struct RandomSum {
  std::vector<Label> labels;  // sorted
  KModule module;
};
std::vector<RandomSum> random_sums(std::size_t count, std::uint64_t seed);

/// Runs every criterion in order; `report` is called after each.
std::vector<CriterionResult> run_conformance(const ConformanceOptions& opts,
                                             const std::function<void(const CriterionResult&)>& report = {});

std::string format_result(const CriterionResult& r);

}  // namespace kv4
