#include <algorithm>

#include "kv4/classify.hpp"
#include "kv4/error.hpp"

namespace kv4 {

namespace {

struct Piece {
  Label label;
  Matrix columns;  // images of the canonical basis, in input coordinates
};

// {x : p x ∈ span(q x_basis)} as an echelon basis; `span` may have no columns.
Matrix preimage(const Matrix& p, const Matrix& q, const Matrix& span) {
  const std::size_t d = p.cols();
  if (span.cols() == 0) {
    Matrix k = kernel(p);
    return k.cols() ? column_space(k) : k;
  }
  const Matrix k = kernel(hstack({p, q * span}));
  if (k.cols() == 0) return Matrix(p.field(), d, 0);
  const Matrix top = k.rows_range(0, d);
  return top.is_zero() ? Matrix(p.field(), d, 0) : column_space(top);
}

// Iterates x -> preimage(p, q, x) from `start` until the dimension settles.
Matrix wong_limit(const Matrix& p, const Matrix& q, Matrix start) {
  for (;;) {
    Matrix next = preimage(p, q, start);
    if (next.cols() == start.cols()) return next;
    start = std::move(next);
  }
}

// Permutation taking dual(SyzygyPos(n)) to SyzygyNeg(n): position j of the
// SyzygyNeg basis maps to entry perm[j] of the dual basis.
std::vector<std::size_t> dual_to_neg(std::size_t n) {
  std::vector<std::size_t> perm(2 * n + 1);
  for (std::size_t i = 1; i <= n; ++i) perm[i - 1] = n + 1 + (n - i);
  for (std::size_t k = 0; k <= n; ++k) perm[n + k] = n - k;
  return perm;
}

class Pipeline {
 public:
  Pipeline(const KModule& m, PipelineTrace* trace)
      : input_(m), rest_(m), embed_(Matrix::identity(m.field(), m.dim())), trace_(trace) {}

  Decomposition run() {
    strip_free();
    while (rest_.dim() > 0 && (extract_primal() || extract_dual())) {
    }
    if (rest_.dim() > 0) regular_part();
    return assemble();
  }

 private:
  void peel(const Split& s) {
    embed_ = embed_ * s.complement_inclusion;
    rest_ = s.complement;
  }

  void strip_free() {
    const Matrix ab = rest_.a() * rest_.b();
    if (ab.is_zero()) return;
    const Matrix image = column_space(ab);
    std::vector<Matrix> blocks;
    for (std::size_t j = 0; j < image.cols(); ++j) {
      const Matrix x = *solve(ab, image.col(j));
      blocks.push_back(hstack({x, rest_.a() * x, rest_.b() * x, ab * x}));
    }
    const Split s = split_off(rest_, {rest_, hstack(blocks)});
    for (const auto& b : blocks) pieces_.push_back({Label::free_module(), embed_ * b});
    if (trace_) trace_->free_summands = blocks.size();
    peel(s);
  }

  Submodule extract(const KModule& m, const QuiverData& q, const PencilVector& v, bool dual) {
    try {
      return syzygy_submodule_from_vector(m, q, v);
    } catch (const Error& e) {
      if (trace_ && e.code() == ErrorCode::NotMinimal) trace_->extractions.push_back({dual, v.degree(), false, false});
      throw;
    }
  }

  Split split_recorded(const KModule& m, const Submodule& s, bool dual, std::size_t l, bool final_step) {
    try {
      Split sp = split_off(m, s);
      if (trace_ && final_step) trace_->extractions.push_back({dual, l, true, true});
      return sp;
    } catch (const Error& e) {
      if (trace_ && e.code() == ErrorCode::NotASummand) trace_->extractions.push_back({dual, l, true, false});
      throw;
    }
  }

  bool extract_primal() {
    const QuiverData q = to_quiver(rest_);
    const auto v = pencil_kernel_min(q.rep);
    if (!v) return false;
    const std::size_t l = v->degree();
    const Submodule s = extract(rest_, q, *v, false);
    const Split sp = split_recorded(rest_, s, false, l, true);
    pieces_.push_back({Label::omega_of_trivial(static_cast<int>(l)), embed_ * s.inclusion});
    peel(sp);
    return true;
  }

  bool extract_dual() {
    const KModule d = dual(rest_);
    const QuiverData q = to_quiver(d);
    const auto v = pencil_kernel_min(q.rep);
    if (!v) return false;
    const std::size_t l = v->degree();
    const Submodule s = extract(d, q, *v, true);
    const Split sd = split_recorded(d, s, true, l, false);
    // The transposed retraction embeds dual(Omega^l k) = Omega^-l k into the module.
    Matrix incl = sd.retraction.transpose();
    if (l > 0) incl = incl * permutation_matrix(rest_.field(), dual_to_neg(l));
    const Submodule sub{rest_, incl};
    const Split sp = split_recorded(rest_, sub, true, l, true);
    pieces_.push_back({l == 0 ? Label::trivial() : Label::syzygy_neg(static_cast<unsigned>(l)), embed_ * incl});
    peel(sp);
    return true;
  }

  void regular_part() {
    const QuiverData q = to_quiver(rest_);
    const QuiverRep& r = q.rep;
    if (r.d1 != r.d2) throw Error(ErrorCode::InternalError, "remaining pencil is not square");
    const Field& f = rest_.field();
    const std::size_t d = r.d1;
    const Matrix finite = wong_limit(r.psi1, r.psi2, Matrix::identity(f, d));
    const Matrix infinite = wong_limit(r.psi2, r.psi1, Matrix(f, d, 0));
    if (finite.cols() + infinite.cols() != d) throw Error(ErrorCode::InternalError, "pencil is not regular");

    std::vector<Label> constructive;
    // Finite part: psi1 V = psi2 V T with psi2 injective on V.
    if (finite.cols() > 0) {
      const Matrix t = *solve(r.psi2 * finite, r.psi1 * finite);
      add_blocks(q, t, finite, false, constructive);
    }
    // Infinite part: psi2 W = psi1 W N with N nilpotent.
    if (infinite.cols() > 0) {
      const Matrix nil = *solve(r.psi1 * infinite, r.psi2 * infinite);
      add_blocks(q, nil, infinite, true, constructive);
    }
    std::sort(constructive.begin(), constructive.end());
    std::vector<Label> smith = regular_labels_smith(r);
    if (trace_) {
      trace_->regular_smith = smith;
      trace_->regular_constructive = constructive;
    }
    if (smith != constructive) throw Error(ErrorCode::InternalError, "Smith form and constructive splitting disagree");
  }

  void add_blocks(const QuiverData& q, const Matrix& op, const Matrix& space, bool infinite,
                  std::vector<Label>& labels) {
    const RationalCanonicalForm rc = rcf(op);
    const Matrix g = space * *inverse(rc.transform);
    const Matrix& down = infinite ? rest_.a() : rest_.b();
    std::size_t offset = 0;
    for (const auto& div : rc.elementary_divisors) {
      const std::size_t s = static_cast<std::size_t>(div.poly.degree()) * div.multiplicity;
      std::vector<std::size_t> rev(s);
      for (std::size_t i = 0; i < s; ++i) rev[i] = offset + s - 1 - i;
      const Matrix tops = q.complement * g.select_cols(rev);
      const Matrix cols = hstack({tops, down * tops});
      Label label;
      if (infinite) {
        if (div.poly.degree() != 1 || div.poly[0] != 0) throw Error(ErrorCode::InternalError, "infinite part is not nilpotent");
        label = Label::zero_band(div.multiplicity);
      } else {
        label = Label::band(div.poly, div.multiplicity);
      }
      labels.push_back(label);
      pieces_.push_back({label, embed_ * cols});
      offset += s;
    }
  }

  Decomposition assemble() {
    std::stable_sort(pieces_.begin(), pieces_.end(), [](const Piece& a, const Piece& b) { return a.label < b.label; });
    const Field& f = input_.field();
    Decomposition out{{}, Matrix(f, 0, 0)};
    if (pieces_.empty()) return out;
    std::vector<Matrix> cols;
    std::vector<KModule> parts;
    for (auto& p : pieces_) {
      KModule c = canonical(f, p.label);
      cols.push_back(p.columns);
      parts.push_back(c);
      out.summands.push_back({p.label, std::move(c)});
    }
    out.witness = hstack(cols);
    const KModule sum = direct_sum(f, parts);
    if (!inverse(out.witness) || !(out.witness * sum.a() == input_.a() * out.witness) ||
        !(out.witness * sum.b() == input_.b() * out.witness))
      throw Error(ErrorCode::InternalError, "decomposition witness failed verification");
    return out;
  }

  const KModule& input_;
  KModule rest_;
  Matrix embed_;
  PipelineTrace* trace_;
  std::vector<Piece> pieces_;
};

}  // namespace

Decomposition decompose(const KModule& m, PipelineTrace* trace) { return Pipeline(m, trace).run(); }

std::vector<Label> regular_labels_smith(const QuiverRep& r) {
  if (r.d1 != r.d2) throw Error(ErrorCode::NotSquare, "pencil is not square");
  std::vector<Label> out;
  if (r.d1 == 0) return out;
  const Poly mu = Poly::x(r.field);
  for (const Poly& d : invariant_factors(PolyMatrix::pencil(r.psi1, r.psi2))) {
    if (d.is_zero()) throw Error(ErrorCode::InternalError, "pencil is singular");
    if (d.degree() < 1) continue;
    for (auto& fac : factor(d)) out.push_back(Label::band(fac.poly, fac.multiplicity));
  }
  for (const Poly& d : invariant_factors(PolyMatrix::pencil(r.psi2, r.psi1))) {
    if (d.degree() < 1) continue;
    for (auto& fac : factor(d))
      if (fac.poly == mu) out.push_back(Label::zero_band(fac.multiplicity));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Label>> regular_labels_lambda0(const QuiverRep& r) {
  const Poly det = pencil_determinant(r);
  const Field& f = r.field;
  std::vector<Label> out;
  if (r.d1 == 0) return out;
  for (std::uint32_t c = 0; c < f.order(); ++c) {
    const auto l0 = static_cast<Elem>(c);
    if (det.eval(l0) == 0) continue;
    const Matrix t = *inverse(r.psi1 + l0 * r.psi2) * r.psi2;
    const Poly x = Poly::x(f);
    for (const auto& div : elementary_divisors(t)) {
      if (div.poly == x)
        out.push_back(Label::zero_band(div.multiplicity));
      else
        out.push_back(Label::band(div.poly.reversed().shift(l0).monic(), div.multiplicity));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  return std::nullopt;
}

Label label_of(const KModule& m) {
  const Decomposition dec = decompose(m);
  if (dec.summands.size() != 1) throw Error(ErrorCode::NotIndecomposable, std::to_string(dec.summands.size()) + " summands");
  const std::size_t dim = m.dim();
  Label by_invariants;
  if (!(m.a() * m.b()).is_zero()) {
    by_invariants = Label::free_module();
  } else if (dim % 2 == 1) {
    const auto n = static_cast<unsigned>(dim / 2);
    const std::size_t s = socle(m).dim();
    if (n == 0)
      by_invariants = Label::trivial();
    else if (s == n)
      by_invariants = Label::syzygy_pos(n);
    else if (s == n + 1)
      by_invariants = Label::syzygy_neg(n);
    else
      throw Error(ErrorCode::InternalError, "odd-dimensional indecomposable with unexpected socle");
  } else {
    const QuiverData q = to_quiver(m);
    const auto psi2_inv = q.rep.d1 == q.rep.d2 ? inverse(q.rep.psi2) : std::nullopt;
    if (psi2_inv) {
      const auto divs = elementary_divisors(*psi2_inv * q.rep.psi1);
      if (divs.size() != 1) throw Error(ErrorCode::InternalError, "indecomposable band with several blocks");
      by_invariants = Label::band(divs[0].poly, divs[0].multiplicity);
    } else {
      by_invariants = Label::zero_band(static_cast<unsigned>(dim / 2));
    }
  }
  if (!(by_invariants == dec.summands[0].label))
    throw Error(ErrorCode::InternalError, "invariants give " + to_string(by_invariants) + ", decomposition gives " +
                                              to_string(dec.summands[0].label));
  return by_invariants;
}

}  // namespace kv4
