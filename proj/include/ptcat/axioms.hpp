// Executable checks for the six partial-trace axioms (plus the superposing
// variant of strength) under Kleene semantics, generic over the trace
// implementation. The provider is a small value-ops bundle so that the same
// check bodies run both in exact arithmetic and in the float heuristic mode.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptcat/report.hpp"
#include "ptcat/rng.hpp"
#include "ptcat/traces.hpp"

namespace ptcat {

// Exact provider: values are rational matrices, equality is exact.
struct ExactOps {
  TraceImpl impl;

  using Value = Matrix;
  Value lift(const Matrix& m) const { return m; }
  Value mul2(const Value& a, const Value& b) const { return mul(a, b); }
  Value dsum(const Value& a, const Value& b) const { return direct_sum(a, b); }
  Value id(int n) const { return Matrix::identity(n); }
  Value swap(int x, int y) const { return block_swap(x, y); }
  bool eq(const Value& a, const Value& b) const { return a == b; }
  Kleene<Value> trace(const Value& f, int da, int du, int db) const {
    return trace_exact(impl, f, da, du, db).value;
  }
  std::string show(const Value& v) const { return format_matrix(v); }
};

// Float provider: inputs are lifted to doubles, the trace is the heuristic
// sum trace, and equality is entrywise within cmp_tol.
struct FloatOps {
  FloatOpts opts{};
  double cmp_tol = 1e-6;

  using Value = FMatrix;
  Value lift(const Matrix& m) const { return to_float(m); }
  Value mul2(const Value& a, const Value& b) const { return fmul(a, b); }
  Value dsum(const Value& a, const Value& b) const { return fdirect_sum(a, b); }
  Value id(int n) const { return to_float(Matrix::identity(n)); }
  Value swap(int x, int y) const { return to_float(block_swap(x, y)); }
  bool eq(const Value& a, const Value& b) const { return approx_eq(a, b, cmp_tol); }
  Kleene<Value> trace(const Value& f, int da, int du, int db) const {
    return tr_sum_float(f, da, du, db, opts.horizon, opts.tol);
  }
  std::string show(const Value& v) const { return format_fmatrix(v); }
};

namespace detail {

template <class Ops>
std::string show_kleene(const Ops& ops, const Kleene<typename Ops::Value>& v) {
  return v.is_defined() ? ops.show(v.value()) : std::string("UNDEFINED");
}

template <class Ops>
AxiomReport make_report(const Ops& ops, std::string axiom, std::string instance,
                        std::string relation, bool pass,
                        const Kleene<typename Ops::Value>& l,
                        const Kleene<typename Ops::Value>& r) {
  AxiomReport rep;
  rep.axiom = std::move(axiom);
  rep.instance = std::move(instance);
  rep.relation = std::move(relation);
  rep.pass = pass;
  rep.left = show_kleene(ops, l);
  rep.right = show_kleene(ops, r);
  rep.signature = std::string(l.is_defined() ? "D" : "U") +
                  (r.is_defined() ? "D" : "U");
  return rep;
}

}  // namespace detail

// h ∘ Tr(f) ∘ g ⊑ Tr((h⊕1)∘f∘(g⊕1)); with invertible g,h the relation
// sharpens to ≃.
template <class Ops>
AxiomReport check_naturality(const Ops& ops, const Matrix& f, int da, int du,
                             int db, const Matrix& g, const Matrix& h,
                             bool gh_invertible, const std::string& inst) {
  auto vf = ops.lift(f);
  auto vg = ops.lift(g);
  auto vh = ops.lift(h);
  auto lhs = ops.trace(vf, da, du, db).map([&](const auto& t) {
    return ops.mul2(vh, ops.mul2(t, vg));
  });
  auto inner = ops.mul2(ops.dsum(vh, ops.id(du)), ops.mul2(vf, ops.dsum(vg, ops.id(du))));
  auto rhs = ops.trace(inner, g.cols(), du, h.rows());
  auto eq = [&](const auto& a, const auto& b) { return ops.eq(a, b); };
  bool pass = gh_invertible ? kleene_eq(lhs, rhs, eq) : kleene_leq(lhs, rhs, eq);
  return detail::make_report(ops, "naturality", inst, gh_invertible ? "≃" : "⊑",
                             pass, lhs, rhs);
}

// Tr^U((1⊗g)∘f) ≃ Tr^{U'}(f∘(1⊗g)) for f : A⊕U → B⊕U' and g : U' → U.
template <class Ops>
AxiomReport check_dinaturality(const Ops& ops, const Matrix& f, int da, int du,
                               int du2, int db, const Matrix& g,
                               const std::string& inst) {
  auto vf = ops.lift(f);
  auto vg = ops.lift(g);
  auto lhs = ops.trace(ops.mul2(ops.dsum(ops.id(db), vg), vf), da, du, db);
  auto rhs = ops.trace(ops.mul2(vf, ops.dsum(ops.id(da), vg)), da, du2, db);
  auto eq = [&](const auto& a, const auto& b) { return ops.eq(a, b); };
  return detail::make_report(ops, "dinaturality", inst, "≃",
                             kleene_eq(lhs, rhs, eq), lhs, rhs);
}

// g ⊗ Tr(f) ⊑ Tr(g⊗f).
template <class Ops>
AxiomReport check_strength(const Ops& ops, const Matrix& f, int da, int du,
                           int db, const Matrix& g, const std::string& inst) {
  auto vf = ops.lift(f);
  auto vg = ops.lift(g);
  auto lhs = ops.trace(vf, da, du, db).map([&](const auto& t) {
    return ops.dsum(vg, t);
  });
  auto rhs = ops.trace(ops.dsum(vg, vf), g.cols() + da, du, g.rows() + db);
  auto eq = [&](const auto& a, const auto& b) { return ops.eq(a, b); };
  return detail::make_report(ops, "strength", inst, "⊑",
                             kleene_leq(lhs, rhs, eq), lhs, rhs);
}

// Tr(f) ⊗ g ⊑ Tr((1_B⊕σ_{U,D}) ∘ (f⊕g) ∘ (1_A⊕σ_{C,U})).
template <class Ops>
AxiomReport check_superposing(const Ops& ops, const Matrix& f, int da, int du,
                              int db, const Matrix& g, const std::string& inst) {
  auto vf = ops.lift(f);
  auto vg = ops.lift(g);
  const int dc = g.cols(), dd = g.rows();
  auto lhs = ops.trace(vf, da, du, db).map([&](const auto& t) {
    return ops.dsum(t, vg);
  });
  auto mid = ops.dsum(vf, vg);
  auto pre = ops.dsum(ops.id(da), ops.swap(dc, du));
  auto post = ops.dsum(ops.id(db), ops.swap(du, dd));
  auto rhs = ops.trace(ops.mul2(post, ops.mul2(mid, pre)), da + dc, du, db + dd);
  auto eq = [&](const auto& a, const auto& b) { return ops.eq(a, b); };
  return detail::make_report(ops, "superposing", inst, "⊑",
                             kleene_leq(lhs, rhs, eq), lhs, rhs);
}

// f ≃ Tr^I(f): the trace over the unit must be defined and equal to f.
template <class Ops>
AxiomReport check_vanishing_i(const Ops& ops, const Matrix& f,
                              const std::string& inst) {
  auto vf = ops.lift(f);
  auto lhs = Kleene<typename Ops::Value>::defined(vf);
  auto rhs = ops.trace(vf, f.cols(), 0, f.rows());
  auto eq = [&](const auto& a, const auto& b) { return ops.eq(a, b); };
  return detail::make_report(ops, "vanishing-i", inst, "≃",
                             kleene_eq(lhs, rhs, eq), lhs, rhs);
}

// Tr^V(f)↓ implies Tr^U(Tr^V(f)) ≃ Tr^{U⊕V}(f); the left-to-right direction
// ⊑ holds without the precondition and is folded into the same verdict.
template <class Ops>
AxiomReport check_vanishing_ii(const Ops& ops, const Matrix& f, int da, int du,
                               int dv, int db, const std::string& inst) {
  auto vf = ops.lift(f);
  auto inner = ops.trace(vf, da + du, dv, db + du);
  auto full = ops.trace(vf, da, du + dv, db);
  auto eq = [&](const auto& a, const auto& b) { return ops.eq(a, b); };
  Kleene<typename Ops::Value> outer;
  std::string relation;
  bool pass;
  if (inner.is_defined()) {
    outer = ops.trace(inner.value(), da, du, db);
    pass = kleene_eq(outer, full, eq);
    relation = "≃";
  } else {
    pass = true;  // outer undefined, and Undefined ⊑ anything
    relation = "⊑";
  }
  AxiomReport rep = detail::make_report(ops, "vanishing-ii", inst, relation,
                                        pass, outer, full);
  rep.signature = std::string(inner.is_defined() ? "D" : "U") + rep.signature;
  return rep;
}

// Tr^A(σ_{A,A}) ≃ 1_A.
template <class Ops>
AxiomReport check_yanking(const Ops& ops, int da, const std::string& inst) {
  auto rhs = ops.trace(ops.swap(da, da), da, da, da);
  auto lhs = Kleene<typename Ops::Value>::defined(ops.id(da));
  auto eq = [&](const auto& a, const auto& b) { return ops.eq(a, b); };
  return detail::make_report(ops, "yanking", inst, "≃",
                             kleene_eq(lhs, rhs, eq), lhs, rhs);
}

// The fixed corpus of worked counterexample matrices, always prepended to
// the random stream.
const std::vector<Matrix>& worked_corpus();

// One generated bundle drives all seven checks. Dims are drawn from {0..4},
// entries from {-3,…,3} scaled by 1 or 1/2.
template <class Ops>
void run_instance(const Ops& ops, Rng& rng, const Matrix* corpus_f,
                  const std::string& tag, std::vector<AxiomReport>& out) {
  int da, du, db;
  Matrix f;
  if (corpus_f) {
    f = *corpus_f;
    da = db = 1;
    du = f.rows() - 1;
  } else {
    da = rng.uniform(0, 4);
    du = rng.uniform(0, 4);
    db = rng.uniform(0, 4);
    f = random_matrix(rng, db + du, da + du);
  }
  auto dims = [&](std::string extra = "") {
    return tag + " dims A=" + std::to_string(da) + " U=" + std::to_string(du) +
           " B=" + std::to_string(db) + extra;
  };

  {
    int da2 = rng.uniform(0, 4), db2 = rng.uniform(0, 4);
    Matrix g = random_matrix(rng, da, da2);
    Matrix h = random_matrix(rng, db2, db);
    out.push_back(check_naturality(ops, f, da, du, db, g, h, false, dims()));
    // Invertible conjugation: the ≃ sharpening of the same axiom.
    Matrix gi = random_matrix(rng, da, da), hi = random_matrix(rng, db, db);
    if (rank(gi) == da && rank(hi) == db)
      out.push_back(check_naturality(ops, f, da, du, db, gi, hi, true,
                                     dims(" iso-conjugation")));
  }
  {
    int du2 = rng.uniform(0, 4);
    Matrix fd = du2 == du ? f : random_matrix(rng, db + du2, da + du);
    Matrix g = random_matrix(rng, du, du2);
    out.push_back(check_dinaturality(ops, fd, da, du, du2, db, g,
                                     dims(" U'=" + std::to_string(du2))));
  }
  {
    Matrix g = random_matrix(rng, rng.uniform(0, 4), rng.uniform(0, 4));
    out.push_back(check_strength(ops, f, da, du, db, g, dims()));
    out.push_back(check_superposing(ops, f, da, du, db, g, dims()));
  }
  out.push_back(check_vanishing_i(ops, random_matrix(rng, db, da), dims()));
  {
    // Corpus matrices split their feedback space as U⊕V = (du−1)⊕1, which on
    // the 3×3 counterexample is exactly the worked instance.
    int duu, dv;
    Matrix fv;
    if (corpus_f && du >= 1) {
      duu = du - 1;
      dv = 1;
      fv = f;
    } else {
      duu = rng.uniform(0, 4);
      dv = rng.uniform(0, 4);
      fv = random_matrix(rng, db + duu + dv, da + duu + dv);
    }
    out.push_back(check_vanishing_ii(ops, fv, da, duu, dv, db,
                                     dims(" U=" + std::to_string(duu) +
                                          " V=" + std::to_string(dv))));
  }
  out.push_back(check_yanking(ops, rng.uniform(0, 4), tag));
}

template <class Ops>
std::vector<AxiomReport> run_suite(const Ops& ops, int cases, uint64_t seed) {
  std::vector<AxiomReport> out;
  Rng rng(seed);
  const auto& corpus = worked_corpus();
  for (int i = 0; i < cases; ++i) {
    bool from_corpus = i < static_cast<int>(corpus.size());
    std::string tag = (from_corpus ? "worked#" : "#") + std::to_string(i);
    run_instance(ops, rng, from_corpus ? &corpus[static_cast<size_t>(i)] : nullptr,
                 tag, out);
  }
  return out;
}

// Float suites assert only verdicts that are stable under halving the
// definedness tolerance; boundary flips are reported as skipped, not as
// violations.
std::vector<AxiomReport> run_suite_float(const FloatOps& ops, int cases,
                                         uint64_t seed);

// -- reproductions of the worked counterexamples ----------------------------

struct ReproResult {
  bool ok = false;
  std::string transcript;
};

ReproResult repro_trace_paradox();
ReproResult repro_vanishing2();
ReproResult repro_yanking();
ReproResult repro_hs_vs_ki();
ReproResult repro_sum_vs_ki();

}  // namespace ptcat
