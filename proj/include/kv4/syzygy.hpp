#pragma once

// Projective covers, Heller shifts, extensions and almost split sequences.

#include <vector>

#include "kv4/kmodule.hpp"

namespace kv4 {

struct CoverData {
  std::size_t rank = 0;      // g, the number of free generators
  KModule cover;             // the free module of rank g, canonical basis per generator
  Matrix covering;           // dim M x 4g; block j is (x_j, A x_j, B x_j, AB x_j)
  KModule kernel;            // Omega(M)
  Matrix kernel_inclusion;   // 4g x dim kernel
};
/// Minimal projective cover: generators are the standard vectors completing
/// the radical, so g = radical_quotient_dim(M).
CoverData projective_cover(const KModule& m);

struct Hull {
  KModule hull;      // free, of rank dim socle(M)
  Matrix embedding;  // dim hull x dim M, injective intertwiner
  KModule cokernel;  // Omega^-1(M)
};
/// Injective hull as the transpose of the cover of the dual.
Hull injective_hull(const KModule& m);

/// The free summands of M split off; the complement is returned.
KModule projective_free_part(const KModule& m);

/// Omega^n(M): iterated cover kernels for n > 0, dual(Omega^-n(dual M)) for
/// n < 0, and the projective-free part for n = 0.
KModule omega(const KModule& m, int n);

struct ShortExactSequence {
  KModule left, middle, right;
  Matrix inject;   // dim middle x dim left
  Matrix surject;  // dim right x dim middle
};
/// Injective/surjective intertwiners with im inject = ker surject.
bool is_exact(const ShortExactSequence& s);
/// Whether inject admits an intertwining retraction.
bool is_split(const ShortExactSequence& s);

/// Representatives of Ext^1(C, A) as maps Omega(C) -> A modulo the maps that
/// extend to the cover of C. Reduced echelon choice, deterministic.
std::vector<Matrix> ext1_basis(const KModule& c, const KModule& a);

/// Pushout of 0 -> Omega(C) -> P -> C -> 0 along h. Throws NotACocycle when h is
/// not an intertwiner Omega(C) -> A.
ShortExactSequence extension_from_cocycle(const KModule& c, const KModule& a, const Matrix& h);

/// The almost split sequence ending in Omega^l(k), found by searching cocycles
/// in coordinate order until the middle term decomposes as expected.
/// Throws InvalidLabel when |l| > limit, SearchExhausted if nothing matches.
ShortExactSequence ar_sequence(Field f, int l, int limit = 6);
/// Middle-term labels of the almost split sequence ending in Omega^l(k), sorted.
std::vector<Label> ar_middle_labels(int l);

}  // namespace kv4
