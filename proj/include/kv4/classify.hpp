#pragma once

// Decomposition into indecomposables with explicit witnesses, labels, and
// isomorphism testing.

#include <cstdint>
#include <optional>
#include <vector>

#include "kv4/kmodule.hpp"
#include "kv4/quiver.hpp"

namespace kv4 {

struct Split {
  Matrix retraction;             // dim S x dim M, intertwining, retraction * inclusion = I
  KModule complement;            // ker retraction with the restricted action
  Matrix complement_inclusion;   // dim M x dim complement
};
/// Throws NotASummand when no intertwining retraction exists.
Split split_off(const KModule& m, const Submodule& s);

struct Summand {
  Label label;
  KModule module;  // canonical(label)
};

struct Decomposition {
  std::vector<Summand> summands;  // sorted by Label order
  /// Columns are the images of the canonical bases, so
  /// witness * A_sum = A_input * witness (and likewise for B).
  Matrix witness;
};

/// What happened inside decompose; consumed by the conformance checks.
struct PipelineTrace {
  struct Extraction {
    bool dual;             // found on the dual module
    std::size_t degree;    // l of the minimal pencil vector
    bool independent;      // the 2l+1 spanning vectors were independent
    bool split;            // split_off found a retraction
  };
  std::vector<Extraction> extractions;
  std::size_t free_summands = 0;
  /// Labels of the regular part from the Smith form of the pencils.
  std::vector<Label> regular_smith;
  /// Labels of the regular part from the constructive basis (must agree).
  std::vector<Label> regular_constructive;
};

Decomposition decompose(const KModule& m, PipelineTrace* trace = nullptr);

/// Labels of a regular square pencil psi1 + λ psi2: finite elementary divisors
/// f^l give Band(f, l), divisors μ^n of psi2 + μ psi1 give ZeroBand(n). Sorted.
std::vector<Label> regular_labels_smith(const QuiverRep& r);
/// The same labels through a point λ0 with psi1 + λ0 psi2 invertible, from the
/// rational canonical form of (psi1 + λ0 psi2)^-1 psi2. Empty optional when
/// no such λ0 exists in the field.
std::optional<std::vector<Label>> regular_labels_lambda0(const QuiverRep& r);

/// Label of an indecomposable module from its invariants, cross-checked
/// against decompose. Throws NotIndecomposable.
Label label_of(const KModule& m);

struct IsoOptions {
  std::uint64_t exhaustion_bound = std::uint64_t{1} << 20;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
};
/// An invertible intertwiner X (X A_M = A_N X, X B_M = B_N X), or nullopt after
/// a sound non-isomorphism certificate. Throws Inconclusive when the hom space
/// is too large to exhaust and sampling found nothing.
std::optional<Matrix> iso(const KModule& m, const KModule& n, const IsoOptions& opts = {});

}  // namespace kv4
