#include "kv4/conformance.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "kv4/census.hpp"
#include "kv4/classify.hpp"
#include "kv4/error.hpp"
#include "kv4/quiver.hpp"
#include "kv4/syzygy.hpp"

namespace kv4 {

namespace {

std::string labels_text(const std::vector<Label>& ls) {
  std::string s = "[";
  for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? " " : "") + to_string(ls[i]);
  return s + "]";
}

std::vector<Label> labels_of(const Decomposition& d) {
  std::vector<Label> out;
  for (const auto& s : d.summands) out.push_back(s.label);
  return out;
}

// Family grid over `f`: Band f^l up to `band_degree`, indexed families up to `max_index`,
// everything capped by `max_dim`.
std::vector<Label> family_grid(Field f, unsigned band_degree, unsigned max_index, std::size_t max_dim,
                               bool with_free_and_trivial) {
  std::vector<Label> out;
  if (with_free_and_trivial) {
    out.push_back(Label::free_module());
    out.push_back(Label::trivial());
  }
  for (unsigned d = 1; d <= band_degree; ++d)
    for (const Poly& p : irreducibles(f, d))
      for (unsigned l = 1; l * d <= band_degree; ++l) out.push_back(Label::band(p, l));
  for (unsigned n = 1; n <= max_index; ++n) {
    out.push_back(Label::zero_band(n));
    out.push_back(Label::syzygy_pos(n));
    out.push_back(Label::syzygy_neg(n));
  }
  std::erase_if(out, [&](const Label& l) { return dim_of(l) > max_dim; });
  std::sort(out.begin(), out.end());
  return out;
}

bool even(const Label& l) { return l.kind == Label::Kind::Band || l.kind == Label::Kind::ZeroBand; }

struct Check {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = what;
  }
  // Runs f, turning an exception into a recorded failure.
  template <class F>
  void guard(const std::string& what, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      expect(false, what + ": " + e.what());
    }
  }
  CriterionResult result(int id, std::string name, const std::string& summary) const {
    CriterionResult r{id, std::move(name), failed == 0, summary, 0};
    if (failed) r.detail = std::to_string(failed) + "/" + std::to_string(checked) + " failed; first: " + first_failure;
    return r;
  }
};

bool witness_ok(const KModule& m, const Decomposition& d) {
  if (d.summands.empty()) return m.dim() == 0;
  std::vector<KModule> parts;
  for (const auto& s : d.summands) parts.push_back(canonical(m.field(), s.label));
  const KModule sum = direct_sum(m.field(), parts);
  return inverse(d.witness).has_value() && d.witness * sum.a() == m.a() * d.witness &&
         d.witness * sum.b() == m.b() * d.witness;
}

struct Context {
  const ConformanceOptions& opts;
  std::vector<Label> grid;
  std::vector<RandomSum> sums;

  // Modules of criteria 1 and 3.
  std::vector<KModule> corpus() const {
    std::vector<KModule> out;
    for (const Label& l : grid) out.push_back(canonical(Field::gf2(), l));
    for (const auto& s : sums) out.push_back(s.module);
    return out;
  }
};

CriterionResult round_trip(const Context& ctx) {
  Check c;
  for (const Label& l : ctx.grid)
    c.guard(to_string(l), [&] {
      const KModule m = canonical(Field::gf2(), l);
      const Decomposition d = decompose(m);
      c.expect(labels_of(d) == std::vector<Label>{l} && witness_ok(m, d), to_string(l) + " -> " + labels_text(labels_of(d)));
    });
  return c.result(1, "classification round trip", std::to_string(ctx.grid.size()) + " labels");
}

CriterionResult census(const Context& ctx) {
  Check c;
  const std::vector<std::size_t> expected{1, 3, 2, 5};
  std::ostringstream summary;
  for (std::size_t d = 1; d <= std::min<std::size_t>(ctx.opts.census_max_dim, 4); ++d)
    c.guard("dim " + std::to_string(d), [&] {
      const Census cs = enumerate(Field::gf2(), d);
      std::vector<Label> found;
      bool all_labelled = true;
      for (const auto& cl : cs.classes) {
        if (cl.label)
          found.push_back(*cl.label);
        else
          all_labelled = false;
      }
      std::sort(found.begin(), found.end());
      const std::vector<Label> want = labels_of_dim(Field::gf2(), d);
      summary << (d > 1 ? ", " : "") << "dim " << d << ": " << cs.classes.size();
      c.expect(cs.classes.size() == expected[d - 1] && all_labelled && found == want,
               "dim " + std::to_string(d) + " classes " + labels_text(found));
    });
  return c.result(2, "completeness census", summary.str());
}

CriterionResult krull_schmidt(const Context& ctx) {
  Check c;
  for (std::size_t i = 0; i < ctx.sums.size(); ++i)
    c.guard("sum " + std::to_string(i), [&] {
      const auto& s = ctx.sums[i];
      const Decomposition d = decompose(s.module);
      c.expect(labels_of(d) == s.labels && witness_ok(s.module, d),
               labels_text(s.labels) + " -> " + labels_text(labels_of(d)));
    });
  return c.result(3, "Krull-Remak-Schmidt", std::to_string(ctx.sums.size()) + " random conjugates");
}

CriterionResult pencil_equivalence(const Context& ctx) {
  Check c;
  std::size_t vectors = 0, extractions = 0, square = 0, non_square = 0;
  for (const KModule& m : ctx.corpus())
    c.guard("module of dim " + std::to_string(m.dim()), [&] {
      const KModule p = omega(m, 0);
      if (p.dim() > 0) {
        const QuiverData q = to_quiver(p);
        const auto v = pencil_kernel_min(q.rep);
        // Singular means psi1 + λ psi2 is not injective over k[λ]. On square
        // pencils that is det = 0; otherwise the generic rank decides.
        bool injective;
        if (q.rep.d1 == q.rep.d2) {
          injective = !pencil_determinant(q.rep).is_zero();
          ++square;
        } else {
          std::size_t generic_rank = 0;
          for (const Poly& d : invariant_factors(PolyMatrix::pencil(q.rep.psi1, q.rep.psi2)))
            if (!d.is_zero()) ++generic_rank;
          injective = generic_rank == q.rep.d1;
          ++non_square;
          // An injective non-square pencil must leave its singularity to the dual.
          if (injective)
            c.expect(pencil_kernel_min(to_quiver(dual(p)).rep).has_value(), "non-square pencil with regular dual");
        }
        c.expect(v.has_value() != injective, "kernel vector present = " + std::to_string(v.has_value()) +
                                                 " but injective = " + std::to_string(injective));
        if (v) {
          ++vectors;
          const Submodule s = syzygy_submodule_from_vector(p, q, *v);
          const std::size_t l = v->degree();
          c.expect(rank(s.inclusion) == 2 * l + 1 &&
                       s.module() == canonical(p.field(), Label::omega_of_trivial(static_cast<int>(l))),
                   "extracted submodule is not Omega^" + std::to_string(l) + "(k)");
        }
      }
      PipelineTrace trace;
      decompose(m, &trace);
      for (const auto& e : trace.extractions) {
        ++extractions;
        c.expect(e.independent, "dependent spanning vectors at degree " + std::to_string(e.degree));
      }
    });
  return c.result(4, "pencil singularity equivalence",
                  std::to_string(square) + " square, " + std::to_string(non_square) + " non-square pencils; " +
                      std::to_string(vectors) + " direct vectors, " + std::to_string(extractions) + " pipeline extractions");
}

CriterionResult splitting(const Context& ctx) {
  Check c;
  std::size_t extractions = 0;
  for (const KModule& m : ctx.corpus())
    c.guard("module of dim " + std::to_string(m.dim()), [&] {
      PipelineTrace trace;
      decompose(m, &trace);
      for (const auto& e : trace.extractions) {
        ++extractions;
        c.expect(e.split, std::string(e.dual ? "dual " : "") + "extraction of degree " + std::to_string(e.degree) +
                              " has no retraction");
      }
    });
  c.expect(extractions > 0, "no syzygy extractions exercised");
  return c.result(5, "syzygy summands split", std::to_string(extractions) + " extractions");
}

CriterionResult duality(const Context& ctx) {
  Check c;
  const Field f = Field::gf2();
  std::size_t count = 0;
  for (unsigned n = 1; n <= 6 && 2 * n + 1 <= ctx.opts.max_dim; ++n)
    c.guard("index " + std::to_string(n), [&] {
      const KModule pos = canonical(f, Label::syzygy_pos(n));
      c.expect(iso(dual(pos), canonical(f, Label::syzygy_neg(n))).has_value(), "dual SyzygyPos(" + std::to_string(n) + ")");
      c.expect(!iso(pos, dual(pos)).has_value(), "SyzygyPos(" + std::to_string(n) + ") is self-dual");
      count += 2;
    });
  for (const Label& l : family_grid(f, 6, 6, std::min<std::size_t>(12, ctx.opts.max_dim), false))
    if (even(l))
      c.guard(to_string(l), [&] {
        const KModule m = canonical(f, l);
        c.expect(iso(m, dual(m)).has_value(), to_string(l) + " is not self-dual");
        ++count;
      });
  return c.result(6, "duality", std::to_string(count) + " comparisons");
}

CriterionResult heller(const Context& ctx) {
  Check c;
  const Field f = Field::gf2();
  std::size_t count = 0;
  for (const Label& l : family_grid(f, 6, 6, std::min<std::size_t>(12, ctx.opts.max_dim), false))
    if (even(l))
      c.guard(to_string(l), [&] {
        const KModule m = canonical(f, l);
        c.expect(iso(omega(m, 1), m).has_value(), "Omega " + to_string(l) + " differs");
        ++count;
      });
  for (unsigned n = 1; n <= 6 && 2 * n + 1 <= ctx.opts.max_dim; ++n)
    c.guard("SyzygyPos(" + std::to_string(n) + ")", [&] {
      const KModule o = omega(canonical(f, Label::syzygy_pos(n)), 1);
      c.expect(o.dim() == 2 * n + 3 && iso(o, canonical(f, Label::syzygy_pos(n + 1))).has_value(),
               "Omega SyzygyPos(" + std::to_string(n) + ")");
      ++count;
    });
  return c.result(7, "Heller shift", std::to_string(count) + " modules");
}

// Every map left -> N that is not split injective factors through inject.
bool almost_split_against(const ShortExactSequence& s, const KModule& n, std::string& why) {
  const std::vector<Matrix> hom = hom_space(s.left, n);
  if (hom.empty()) return true;
  const Field& f = n.field();
  auto vec = [](const Matrix& x) { return Matrix(x.field(), x.rows() * x.cols(), 1, std::vector<Elem>(x.entries())); };
  std::vector<Matrix> through;
  for (const Matrix& psi : hom_space(s.middle, n)) through.push_back(vec(psi * s.inject));
  const Matrix span = through.empty() ? Matrix(f, n.dim() * s.left.dim(), 0) : hstack(through);
  auto factors = [&](const Matrix& phi) { return span.cols() > 0 && in_column_space(vec(phi), span); };
  if (n.dim() != s.left.dim()) {
    for (const Matrix& phi : hom)
      if (!factors(phi)) {
        why = "a map into a module of dim " + std::to_string(n.dim()) + " does not factor";
        return false;
      }
    return true;
  }
  // Same dimension: split injections are exactly the invertible maps.
  const std::uint32_t q = f.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < hom.size(); ++i)
    if ((total *= q) > (std::uint64_t{1} << 16)) {
      why = "hom space too large to enumerate";
      return false;
    }
  std::vector<std::uint32_t> digits(hom.size(), 0);
  Matrix phi(f, n.dim(), s.left.dim());
  for (;;) {
    std::size_t i = 0;
    while (i < hom.size()) {
      const std::uint32_t old = digits[i];
      digits[i] = (old + 1) % q;
      phi += static_cast<Elem>(old ^ digits[i]) * hom[i];
      if (digits[i] != 0) break;
      ++i;
    }
    if (i == hom.size()) return true;
    if (rank(phi) != phi.rows() && !factors(phi)) {
      why = "a non-invertible endomorphism does not factor";
      return false;
    }
  }
}

CriterionResult ar_sequences(const Context&) {
  Check c;
  const Field f = Field::gf2();
  std::size_t targets = 0;
  for (int l : {-1, 0, 1, 2})
    c.guard("l = " + std::to_string(l), [&] {
      const ShortExactSequence s = ar_sequence(f, l);
      const std::vector<Label> middle = labels_of(decompose(s.middle));
      c.expect(is_exact(s) && !is_split(s) && s.left == canonical(f, Label::omega_of_trivial(l + 2)) &&
                   s.right == canonical(f, Label::omega_of_trivial(l)) && middle == ar_middle_labels(l),
               "sequence ending in Omega^" + std::to_string(l) + "(k): middle " + labels_text(middle));
      if (l != 0) return;
      for (std::size_t d = 1; d <= 9; ++d)
        for (const Label& n : labels_of_dim(f, d)) {
          std::string why;
          c.expect(almost_split_against(s, canonical(f, n), why), to_string(n) + ": " + why);
          ++targets;
        }
    });
  return c.result(8, "almost split sequences", "l in {-1,0,1,2}; factorization against " + std::to_string(targets) + " targets");
}

CriterionResult radical_socle(const Context& ctx) {
  Check c;
  std::size_t count = 0;
  for (const Label& l : family_grid(Field::gf2(), 6, 6, ctx.opts.max_dim, false))
    c.guard(to_string(l), [&] {
      const KModule m = canonical(Field::gf2(), l);
      c.expect(column_space(radical(m).inclusion) == column_space(socle(m).inclusion), to_string(l));
      ++count;
    });
  return c.result(9, "radical equals socle", std::to_string(count) + " modules");
}

CriterionResult lambda0(const Context& ctx) {
  Check c;
  std::size_t count = 0;
  for (unsigned m : {2u, 4u}) {
    const Field big = Field::standard(m);
    for (const Label& l : ctx.grid)
      if (even(l))
        c.guard(to_string(l) + " over " + to_string(big), [&] {
          const KModule mod = extend_scalars(canonical(Field::gf2(), l), big);
          const std::vector<Label> smith = labels_of(decompose(mod));
          const auto via_point = regular_labels_lambda0(to_quiver(mod).rep);
          c.expect(via_point.has_value() && *via_point == smith,
                   to_string(l) + " over " + to_string(big) + ": " + labels_text(smith) + " vs " +
                       (via_point ? labels_text(*via_point) : "no point"));
          ++count;
        });
  }
  return c.result(10, "Smith form agrees with point evaluation", std::to_string(count) + " modules over GF(4), GF(16)");
}

}  // namespace

std::vector<Label> round_trip_grid(std::size_t max_dim) { return family_grid(Field::gf2(), 4, 6, max_dim, true); }

std::vector<RandomSum> random_sums(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RandomSum> out;
  for (std::size_t t = 0; t < count; ++t) {
    const Field f = t % 2 == 0 ? Field::gf2() : Field::standard(2);
    const std::vector<Label> pool = family_grid(f, 4, 6, 20, true);
    const std::size_t parts = 1 + rng() % 4;
    std::vector<Label> labels;
    std::size_t dim = 0;
    while (labels.size() < parts) {
      const Label& l = pool[rng() % pool.size()];
      if (dim + dim_of(l) > 20) {
        if (dim >= 19) break;
        continue;
      }
      dim += dim_of(l);
      labels.push_back(l);
    }
    std::vector<KModule> mods;
    for (const Label& l : labels) mods.push_back(canonical(f, l));
    Matrix p(f, dim, dim);
    do {
      for (auto& e : p.entries()) e = static_cast<Elem>(rng() % f.order());
    } while (!inverse(p));
    std::sort(labels.begin(), labels.end());
    out.push_back({std::move(labels), change_basis(direct_sum(f, mods), p)});
  }
  return out;
}

std::vector<CriterionResult> run_conformance(const ConformanceOptions& opts,
                                             const std::function<void(const CriterionResult&)>& report) {
  const Context ctx{opts, round_trip_grid(opts.max_dim), random_sums(opts.random_trials, opts.seed)};
  using Fn = CriterionResult (*)(const Context&);
  const Fn criteria[] = {round_trip, census,  krull_schmidt, pencil_equivalence, splitting,
                         duality,    heller,  ar_sequences,  radical_socle,      lambda0};
  std::vector<CriterionResult> out;
  for (Fn fn : criteria) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r = fn(ctx);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (report) report(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name << " (" << r.detail << ", "
    << static_cast<long>(r.seconds * 1000) << " ms)";
  return s.str();
}

}  // namespace kv4
