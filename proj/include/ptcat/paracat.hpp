// Paracategory core: paths over a directed graph, a path-level partial
// composition [-], and machine checks for the paracategory and strict
// symmetric monoidal paracategory laws.
//
// The machinery is generic over an instance type I providing
//
//   using Obj;  using Arr;            // regular, equality-comparable
//   Obj dom(const Arr&) const;  Obj cod(const Arr&) const;
//   Kleene<Arr> compose(const Obj& start, const std::vector<Arr>&) const;
//   Obj unit() const;  Obj tensor_obj(Obj, Obj) const;
//   Arr tensor_arr(const Arr&, const Arr&) const;
//   Arr sym(Obj, Obj) const;
//   std::string show_obj(const Obj&) const;  std::string show_arr(const Arr&) const;
//
// Composition is taken path-level rather than binary because the partial
// Int-construction's composition is genuinely path-level. Identities are
// 1_A = [ε_A].
#pragma once

#include <string>
#include <vector>

#include "ptcat/kleene.hpp"
#include "ptcat/report.hpp"

namespace ptcat::paracat {

// Alternating object/arrow sequence (A₀, f₁, A₁, …, fₙ, Aₙ), stored as the
// start object plus the arrows; the inner objects are forced by the
// endpoint-matching invariant. Equality is literal sequence equality.
template <class I>
struct Path {
  typename I::Obj start{};
  std::vector<typename I::Arr> arrows;

  bool operator==(const Path&) const = default;
  size_t length() const { return arrows.size(); }
};

template <class I>
Path<I> eps(typename I::Obj a) {
  return Path<I>{std::move(a), {}};
}

template <class I>
Path<I> single(const I& inst, typename I::Arr f) {
  return Path<I>{inst.dom(f), {std::move(f)}};
}

template <class I>
typename I::Obj obj_at(const I& inst, const Path<I>& p, size_t i) {
  return i == 0 ? p.start : inst.cod(p.arrows[i - 1]);
}

template <class I>
typename I::Obj path_end(const I& inst, const Path<I>& p) {
  return obj_at(inst, p, p.arrows.size());
}

template <class I>
bool well_formed(const I& inst, const Path<I>& p) {
  for (size_t i = 0; i < p.arrows.size(); ++i)
    if (!(inst.dom(p.arrows[i]) == obj_at(inst, p, i))) return false;
  return true;
}

template <class I>
Path<I> concat(const I& inst, const Path<I>& p, const Path<I>& q) {
  if (!(path_end(inst, p) == q.start))
    throw std::invalid_argument("concat: cod(" + inst.show_obj(path_end(inst, p)) +
                                ") does not match dom(" + inst.show_obj(q.start) +
                                ")");
  Path<I> r = p;
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

template <class I>
Kleene<typename I::Arr> pcompose(const I& inst, const Path<I>& p) {
  return inst.compose(p.start, p.arrows);
}

// 1_A = [ε_A]; total by paracategory axiom (a).
template <class I>
typename I::Arr identity(const I& inst, const typename I::Obj& a) {
  return inst.compose(a, {}).value();
}

// 1_B ⊗ p, elementwise.
template <class I>
Path<I> whisker_left(const I& inst, const typename I::Obj& b, const Path<I>& p) {
  Path<I> r;
  r.start = inst.tensor_obj(b, p.start);
  auto one = identity(inst, b);
  for (const auto& f : p.arrows) r.arrows.push_back(inst.tensor_arr(one, f));
  return r;
}

// p ⊗ 1_B, elementwise.
template <class I>
Path<I> whisker_right(const I& inst, const Path<I>& p, const typename I::Obj& b) {
  Path<I> r;
  r.start = inst.tensor_obj(p.start, b);
  auto one = identity(inst, b);
  for (const auto& f : p.arrows) r.arrows.push_back(inst.tensor_arr(f, one));
  return r;
}

// p ⊗p q := (p ⊗ 1), (1 ⊗ q).
template <class I>
Path<I> path_tensor(const I& inst, const Path<I>& p, const Path<I>& q) {
  return concat(inst, whisker_right(inst, p, q.start),
                whisker_left(inst, path_end(inst, p), q));
}

namespace detail {

template <class I>
std::string show_kleene_arr(const I& inst, const Kleene<typename I::Arr>& v) {
  return v.is_defined() ? inst.show_arr(v.value()) : std::string("UNDEFINED");
}

template <class I>
AxiomReport law_report(const I& inst, std::string law, std::string instance,
                       std::string relation, bool pass,
                       const Kleene<typename I::Arr>& l,
                       const Kleene<typename I::Arr>& r) {
  AxiomReport rep;
  rep.axiom = std::move(law);
  rep.instance = std::move(instance);
  rep.relation = std::move(relation);
  rep.pass = pass;
  rep.left = show_kleene_arr(inst, l);
  rep.right = show_kleene_arr(inst, r);
  rep.signature = std::string(l.is_defined() ? "D" : "U") +
                  (r.is_defined() ? "D" : "U");
  return rep;
}

}  // namespace detail

// Paracategory axioms on sampled paths:
//   (a) [ε_A] defined, for every object met in the samples;
//   (b) [f] defined and equal to f, for every sampled arrow;
//   (c) [f⃗]↓ implies [r, [f⃗], s] ≃ [r, f⃗, s], over every subpath span;
//   plus the identity consequence [r, 1_A, s] ≃ [r, s].
template <class I>
std::vector<AxiomReport> check_paracat(const I& inst,
                                       const std::vector<Path<I>>& samples) {
  std::vector<AxiomReport> out;
  using K = Kleene<typename I::Arr>;

  size_t idx = 0;
  for (const auto& p : samples) {
    std::string tag = "path#" + std::to_string(idx++) + " len " +
                      std::to_string(p.arrows.size());
    {  // (a) on every object of the path
      for (size_t i = 0; i <= p.arrows.size(); ++i) {
        auto e = inst.compose(obj_at(inst, p, i), {});
        if (!e.is_defined() || i == p.arrows.size())
          out.push_back(detail::law_report(inst, "paracat-(a)", tag, "defined",
                                           e.is_defined(), e, e));
        if (!e.is_defined()) break;
      }
    }
    for (const auto& f : p.arrows) {  // (b)
      auto c = inst.compose(inst.dom(f), {f});
      bool pass = c.is_defined() && c.value() == f;
      out.push_back(detail::law_report(inst, "paracat-(b)", tag, "≃", pass, c,
                                       K::defined(f)));
    }
    auto whole = pcompose(inst, p);
    for (size_t i = 0; i <= p.arrows.size(); ++i) {  // (c), all spans
      for (size_t j = i; j <= p.arrows.size(); ++j) {
        Path<I> sub{obj_at(inst, p, i),
                    {p.arrows.begin() + static_cast<long>(i),
                     p.arrows.begin() + static_cast<long>(j)}};
        auto mid = pcompose(inst, sub);
        if (!mid.is_defined()) continue;
        Path<I> spliced{p.start, {}};
        spliced.arrows.assign(p.arrows.begin(), p.arrows.begin() + static_cast<long>(i));
        spliced.arrows.push_back(mid.value());
        spliced.arrows.insert(spliced.arrows.end(),
                              p.arrows.begin() + static_cast<long>(j), p.arrows.end());
        auto collapsed = pcompose(inst, spliced);
        bool pass = kleene_eq(collapsed, whole);
        out.push_back(detail::law_report(
            inst, "paracat-(c)",
            tag + " span [" + std::to_string(i) + "," + std::to_string(j) + ")",
            "≃", pass, collapsed, whole));
      }
    }
    {  // identity remark at the middle position
      size_t i = p.arrows.size() / 2;
      Path<I> with_id{p.start, {}};
      with_id.arrows.assign(p.arrows.begin(), p.arrows.begin() + static_cast<long>(i));
      with_id.arrows.push_back(identity(inst, obj_at(inst, p, i)));
      with_id.arrows.insert(with_id.arrows.end(),
                            p.arrows.begin() + static_cast<long>(i), p.arrows.end());
      out.push_back(detail::law_report(inst, "paracat-identity", tag, "≃",
                                       kleene_eq(pcompose(inst, with_id), whole),
                                       pcompose(inst, with_id), whole));
    }
  }
  return out;
}

// Inverse remark: given [b, b⁻¹] = 1 and [b⁻¹, b] = 1, then [f, b] = g
// implies f = [g, b⁻¹], for sampled f composable with b.
template <class I>
std::vector<AxiomReport> check_inverses(
    const I& inst,
    const std::vector<std::pair<typename I::Arr, typename I::Arr>>& inv_pairs,
    const std::vector<typename I::Arr>& arrows) {
  std::vector<AxiomReport> out;
  using K = Kleene<typename I::Arr>;
  size_t idx = 0;
  for (const auto& [b, binv] : inv_pairs) {
    std::string tag = "pair#" + std::to_string(idx++);
    auto i1 = inst.compose(inst.dom(b), {b, binv});
    auto i2 = inst.compose(inst.dom(binv), {binv, b});
    bool is_inv = i1.is_defined() && i1.value() == identity(inst, inst.dom(b)) &&
                  i2.is_defined() && i2.value() == identity(inst, inst.dom(binv));
    out.push_back(detail::law_report(inst, "inverse-pair", tag, "≃", is_inv, i1, i2));
    if (!is_inv) continue;
    for (const auto& f : arrows) {
      if (!(inst.cod(f) == inst.dom(b))) continue;
      auto g = inst.compose(inst.dom(f), {f, b});
      if (!g.is_defined()) continue;
      auto back = inst.compose(inst.dom(f), {g.value(), binv});
      bool pass = back.is_defined() && back.value() == f;
      out.push_back(detail::law_report(inst, "inverse-remark", tag, "≃", pass,
                                       back, K::defined(f)));
    }
  }
  return out;
}

// Sample bundle for the strict symmetric monoidal checks.
template <class I>
struct SsmpSamples {
  // (f, f') with cod f = dom f', and (g, g') likewise, for functoriality.
  std::vector<std::pair<typename I::Arr, typename I::Arr>> composable{};
  std::vector<Path<I>> paths{};
  std::vector<typename I::Obj> objects{};
  std::vector<typename I::Arr> arrows{};  // for σ naturality
  // (X, A, B, f) with dom f = X⊗B⊗A, and (X, A, B, g) with cod g = X⊗A⊗B.
  std::vector<std::tuple<typename I::Obj, typename I::Obj, typename I::Obj,
                         typename I::Arr>> sym_post{};
  std::vector<std::tuple<typename I::Obj, typename I::Obj, typename I::Obj,
                         typename I::Arr>> sym_pre{};
};

// Splitting-functoriality lemma, interchange, and the symmetry clauses
// (totality, naturality, symmetry, hexagon) of the strict symmetric monoidal
// paracategory definition, on sampled data.
template <class I>
std::vector<AxiomReport> check_ssmp(const I& inst, const SsmpSamples<I>& s) {
  std::vector<AxiomReport> out;
  using Arr = typename I::Arr;
  using K = Kleene<Arr>;

  // (a) [f,f'] ⊗ [g,g'] ⊑ [f⊗g, f'⊗g'].
  for (size_t a = 0; a < s.composable.size(); ++a)
    for (size_t b = 0; b < s.composable.size(); ++b) {
      const auto& [f, f2] = s.composable[a];
      const auto& [g, g2] = s.composable[b];
      auto cf = inst.compose(inst.dom(f), {f, f2});
      auto cg = inst.compose(inst.dom(g), {g, g2});
      K lhs = cf.is_defined() && cg.is_defined()
                  ? K::defined(inst.tensor_arr(cf.value(), cg.value()))
                  : K::undefined();
      auto rhs = inst.compose(inst.tensor_obj(inst.dom(f), inst.dom(g)),
                              {inst.tensor_arr(f, g), inst.tensor_arr(f2, g2)});
      out.push_back(detail::law_report(
          inst, "tensor-functorial",
          "pairs#" + std::to_string(a) + "," + std::to_string(b), "⊑",
          kleene_leq(lhs, rhs), lhs, rhs));
    }

  // Interchange on arrows: [p⊗1, 1⊗q] = p⊗q = [1⊗q, p⊗1].
  for (size_t a = 0; a < s.composable.size(); ++a) {
    const Arr& p = s.composable[a].first;
    const Arr& q = s.composable[a].second;
    Arr pq = inst.tensor_arr(p, q);
    auto one = [&](const typename I::Obj& o) { return identity(inst, o); };
    auto lhs = inst.compose(inst.tensor_obj(inst.dom(p), inst.dom(q)),
                            {inst.tensor_arr(p, one(inst.dom(q))),
                             inst.tensor_arr(one(inst.cod(p)), q)});
    auto rhs = inst.compose(inst.tensor_obj(inst.dom(p), inst.dom(q)),
                            {inst.tensor_arr(one(inst.dom(p)), q),
                             inst.tensor_arr(p, one(inst.cod(q)))});
    bool pass = lhs.is_defined() && lhs.value() == pq && rhs.is_defined() &&
                rhs.value() == pq;
    out.push_back(detail::law_report(inst, "interchange",
                                     "pair#" + std::to_string(a), "≃", pass, lhs,
                                     rhs));
  }

  // (b) 1⊗[p] ⊑ [1⊗p] and [p]⊗1 ⊑ [p⊗1].
  for (size_t a = 0; a < s.paths.size(); ++a)
    for (const auto& x : s.objects) {
      const auto& p = s.paths[a];
      auto cp = pcompose(inst, p);
      std::string tag = "path#" + std::to_string(a) + " X=" + inst.show_obj(x);
      {
        K lhs = cp.map([&](const Arr& v) {
          return inst.tensor_arr(identity(inst, x), v);
        });
        auto rhs = pcompose(inst, whisker_left(inst, x, p));
        out.push_back(detail::law_report(inst, "whisker-left-leq", tag, "⊑",
                                         kleene_leq(lhs, rhs), lhs, rhs));
      }
      {
        K lhs = cp.map([&](const Arr& v) {
          return inst.tensor_arr(v, identity(inst, x));
        });
        auto rhs = pcompose(inst, whisker_right(inst, p, x));
        out.push_back(detail::law_report(inst, "whisker-right-leq", tag, "⊑",
                                         kleene_leq(lhs, rhs), lhs, rhs));
      }
    }

  // (c) totality: [1_X⊗σ_{A,B}, f] and [g, 1_X⊗σ_{A,B}] defined.
  for (size_t a = 0; a < s.sym_post.size(); ++a) {
    const auto& [x, aa, bb, f] = s.sym_post[a];
    Arr w = inst.tensor_arr(identity(inst, x), inst.sym(aa, bb));
    auto c = inst.compose(inst.dom(w), {w, f});
    out.push_back(detail::law_report(inst, "sym-totality-post",
                                     "#" + std::to_string(a), "defined",
                                     c.is_defined(), c, c));
  }
  for (size_t a = 0; a < s.sym_pre.size(); ++a) {
    const auto& [x, aa, bb, g] = s.sym_pre[a];
    Arr w = inst.tensor_arr(identity(inst, x), inst.sym(aa, bb));
    auto c = inst.compose(inst.dom(g), {g, w});
    out.push_back(detail::law_report(inst, "sym-totality-pre",
                                     "#" + std::to_string(a), "defined",
                                     c.is_defined(), c, c));
  }

  // (c) naturality: [f⊗1_B, σ] = [σ, 1_B⊗f] and [1_A⊗g, σ] = [σ, g⊗1_A].
  for (size_t a = 0; a < s.arrows.size(); ++a)
    for (const auto& b : s.objects) {
      const Arr& f = s.arrows[a];
      auto one = identity(inst, b);
      std::string tag = "arr#" + std::to_string(a) + " B=" + inst.show_obj(b);
      {
        auto lhs = inst.compose(inst.tensor_obj(inst.dom(f), b),
                                {inst.tensor_arr(f, one), inst.sym(inst.cod(f), b)});
        auto rhs = inst.compose(inst.tensor_obj(inst.dom(f), b),
                                {inst.sym(inst.dom(f), b), inst.tensor_arr(one, f)});
        out.push_back(detail::law_report(inst, "sym-naturality-left", tag, "≃",
                                         kleene_eq(lhs, rhs) && lhs.is_defined(),
                                         lhs, rhs));
      }
      {
        auto lhs = inst.compose(inst.tensor_obj(b, inst.dom(f)),
                                {inst.tensor_arr(one, f), inst.sym(b, inst.cod(f))});
        auto rhs = inst.compose(inst.tensor_obj(b, inst.dom(f)),
                                {inst.sym(b, inst.dom(f)), inst.tensor_arr(f, one)});
        out.push_back(detail::law_report(inst, "sym-naturality-right", tag, "≃",
                                         kleene_eq(lhs, rhs) && lhs.is_defined(),
                                         lhs, rhs));
      }
    }

  // (c) symmetry: [σ_{A,B}, σ_{B,A}] = 1.
  for (const auto& a : s.objects)
    for (const auto& b : s.objects) {
      auto c = inst.compose(inst.tensor_obj(a, b), {inst.sym(a, b), inst.sym(b, a)});
      bool pass =
          c.is_defined() && c.value() == identity(inst, inst.tensor_obj(a, b));
      out.push_back(detail::law_report(
          inst, "sym-symmetry", inst.show_obj(a) + "," + inst.show_obj(b), "≃",
          pass, c, K::defined(identity(inst, inst.tensor_obj(a, b)))));
    }

  // (c) hexagon: σ_{A,B⊗C} = [σ_{A,B}⊗1_C, 1_B⊗σ_{A,C}].
  for (const auto& a : s.objects)
    for (const auto& b : s.objects)
      for (const auto& c : s.objects) {
        auto rhs = inst.compose(
            inst.tensor_obj(a, inst.tensor_obj(b, c)),
            {inst.tensor_arr(inst.sym(a, b), identity(inst, c)),
             inst.tensor_arr(identity(inst, b), inst.sym(a, c))});
        K lhs = K::defined(inst.sym(a, inst.tensor_obj(b, c)));
        out.push_back(detail::law_report(
            inst, "sym-hexagon",
            inst.show_obj(a) + "," + inst.show_obj(b) + "," + inst.show_obj(c),
            "≃", kleene_eq(lhs, rhs), lhs, rhs));
      }

  return out;
}

// Categorical product: componentwise composition with Kleene pairing.
template <class I1, class I2>
struct ProductInstance {
  const I1& c1;
  const I2& c2;

  using Obj = std::pair<typename I1::Obj, typename I2::Obj>;
  using Arr = std::pair<typename I1::Arr, typename I2::Arr>;

  Obj dom(const Arr& f) const { return {c1.dom(f.first), c2.dom(f.second)}; }
  Obj cod(const Arr& f) const { return {c1.cod(f.first), c2.cod(f.second)}; }

  Kleene<Arr> compose(const Obj& start, const std::vector<Arr>& path) const {
    std::vector<typename I1::Arr> left;
    std::vector<typename I2::Arr> right;
    for (const auto& [a, b] : path) {
      left.push_back(a);
      right.push_back(b);
    }
    auto r1 = c1.compose(start.first, left);
    auto r2 = c2.compose(start.second, right);
    if (!r1.is_defined() || !r2.is_defined()) return Kleene<Arr>::undefined();
    return Kleene<Arr>::defined({r1.value(), r2.value()});
  }

  Obj unit() const { return {c1.unit(), c2.unit()}; }
  Obj tensor_obj(const Obj& a, const Obj& b) const {
    return {c1.tensor_obj(a.first, b.first), c2.tensor_obj(a.second, b.second)};
  }
  Arr tensor_arr(const Arr& f, const Arr& g) const {
    return {c1.tensor_arr(f.first, g.first), c2.tensor_arr(f.second, g.second)};
  }
  Arr sym(const Obj& a, const Obj& b) const {
    return {c1.sym(a.first, b.first), c2.sym(a.second, b.second)};
  }
  std::string show_obj(const Obj& a) const {
    return "(" + c1.show_obj(a.first) + "," + c2.show_obj(a.second) + ")";
  }
  std::string show_arr(const Arr& f) const {
    return "(" + c1.show_arr(f.first) + "," + c2.show_arr(f.second) + ")";
  }
};

}  // namespace ptcat::paracat
