#pragma once

// Brute-force enumeration of indecomposable modules up to isomorphism.

#include <cstdint>
#include <optional>
#include <vector>

#include "kv4/kmodule.hpp"

namespace kv4 {

/// Fitting's criterion by exhaustive search: every endomorphism is nilpotent
/// or invertible. Intended for small modules.
bool is_indecomposable_brute(const KModule& m);

/// Every label of the given dimension over `f`.
std::vector<Label> labels_of_dim(Field f, std::size_t dim);

struct CensusClass {
  KModule representative;       // least encoding in the class
  std::size_t members = 0;      // enumerated modules in the class
  std::optional<Label> label;   // canonical label found by iso, if any
};

struct Census {
  std::size_t dim = 0;
  bool pruned = false;           // A fixed to square-zero normal forms
  std::uint64_t candidates = 0;  // pairs examined
  std::uint64_t valid = 0;       // modules among them
  std::uint64_t indecomposable = 0;
  std::vector<CensusClass> classes;  // sorted by representative encoding
};

/// Naive enumeration of all (A, B) while q^(2 dim^2) <= 2^22; otherwise A runs
/// over the rank-r normal forms e_i -> e_{dim-r+i} and only B is enumerated.
/// Candidate filtering fans out over threads; classes are merged in encoding order.
Census enumerate(Field f, std::size_t dim);

}  // namespace kv4
