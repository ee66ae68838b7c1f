// The completion of a strict symmetric monoidal paracategory: the path
// category modulo the smallest congruence ∼ generated by
//
//   (1) concatenation compatibility,
//   (2) collapse: [p]↓ implies p ∼ [p],
//   (3) whiskering by 1⊗(−) and (−)⊗1,
//
// together with symmetry and transitivity. ∼ is not assumed decidable; the
// artifact provides machine-checkable rewrite certificates (finite witnesses
// for membership in ∼), the exact singleton decision [p]↓ ∧ [p] = q, and a
// sound bounded bidirectional search. A search miss carries no semantic
// claim.
#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "ptcat/paracat.hpp"

namespace ptcat::pathcomp {

using paracat::Path;

enum class Rule {
  collapse,       // clause (2) in context: subpath ↔ its defined composite
  paracat_law,    // identity removal/insertion, [r,1_A,s] ≃ [r,s]
  concat_compat,  // clause (1): rewrite two concatenated segments by sub-certificates
  whisker_left,   // clause (3): 1_B ⊗ (sub-certificate)
  whisker_right,  // clause (3): (sub-certificate) ⊗ 1_B
};

inline const char* rule_name(Rule r) {
  switch (r) {
    case Rule::collapse: return "collapse";
    case Rule::paracat_law: return "paracat-law";
    case Rule::concat_compat: return "concat-compat";
    case Rule::whisker_left: return "whisker-left";
    case Rule::whisker_right: return "whisker-right";
  }
  return "?";
}

template <class I>
struct Certificate;

// One rewrite step; `result` is the full path after the step. For collapse,
// [begin,end) is the span replaced by its composite; reversed expands the
// single arrow at `begin` into the recorded subpath. For paracat_law, the
// identity arrow at `begin` is removed (or inserted, when reversed). The
// nested rules carry sub-certificates in `inner`.
template <class I>
struct Step {
  Rule rule = Rule::collapse;
  bool reversed = false;
  size_t begin = 0;
  size_t end = 0;
  typename I::Obj object{};  // whisker object
  std::vector<Certificate<I>> inner;
  Path<I> result;
};

template <class I>
struct Certificate {
  Path<I> start;
  std::vector<Step<I>> steps;

  const Path<I>& final_path() const {
    return steps.empty() ? start : steps.back().result;
  }
};

// Appends `tail` to `head`; their endpoints must chain literally.
template <class I>
Certificate<I> compose_certificates(const Certificate<I>& head,
                                    const Certificate<I>& tail) {
  if (!(head.final_path() == tail.start))
    throw std::invalid_argument("certificates do not chain");
  Certificate<I> out = head;
  out.steps.insert(out.steps.end(), tail.steps.begin(), tail.steps.end());
  return out;
}

namespace detail {

template <class I>
bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

template <class I>
Path<I> splice(const Path<I>& p, size_t begin, size_t end,
               const std::vector<typename I::Arr>& replacement) {
  Path<I> out{p.start, {}};
  out.arrows.assign(p.arrows.begin(), p.arrows.begin() + static_cast<long>(begin));
  out.arrows.insert(out.arrows.end(), replacement.begin(), replacement.end());
  out.arrows.insert(out.arrows.end(), p.arrows.begin() + static_cast<long>(end),
                    p.arrows.end());
  return out;
}

}  // namespace detail

template <class I>
bool check_certificate(const I& inst, const Certificate<I>& cert,
                       std::string* why = nullptr);

namespace detail {

template <class I>
bool check_step(const I& inst, const Path<I>& prev, const Step<I>& step,
                std::string* why) {
  const Path<I>& next = step.result;
  switch (step.rule) {
    case Rule::collapse: {
      if (!step.reversed) {
        if (step.begin > step.end || step.end > prev.arrows.size())
          return fail<I>(why, "collapse span out of range");
        Path<I> sub{paracat::obj_at(inst, prev, step.begin),
                    {prev.arrows.begin() + static_cast<long>(step.begin),
                     prev.arrows.begin() + static_cast<long>(step.end)}};
        auto c = paracat::pcompose(inst, sub);
        if (!c.is_defined())
          return fail<I>(why, "collapse of a subpath whose composite is undefined");
        if (!(next == splice(prev, step.begin, step.end, {c.value()})))
          return fail<I>(why, "collapse result does not match the recorded path");
        return true;
      }
      // Reversed: expand the single arrow at `begin` into the recorded
      // replacement; its composite must be defined and equal to that arrow.
      if (step.begin >= prev.arrows.size())
        return fail<I>(why, "expansion position out of range");
      if (next.arrows.size() + 1 < prev.arrows.size())
        return fail<I>(why, "expansion shrinks the path");
      size_t len = next.arrows.size() - prev.arrows.size() + 1;
      if (step.begin + len > next.arrows.size() + 1)
        return fail<I>(why, "expansion span out of range");
      Path<I> sub{paracat::obj_at(inst, prev, step.begin),
                  {next.arrows.begin() + static_cast<long>(step.begin),
                   next.arrows.begin() + static_cast<long>(step.begin + len)}};
      auto c = paracat::pcompose(inst, sub);
      if (!c.is_defined())
        return fail<I>(why, "expansion target has undefined composite");
      if (!(c.value() == prev.arrows[step.begin]))
        return fail<I>(why, "expansion target does not compose to the original arrow");
      if (!(next == splice(prev, step.begin, step.begin + 1, sub.arrows)))
        return fail<I>(why, "expansion result does not match the recorded path");
      return true;
    }
    case Rule::paracat_law: {
      if (!step.reversed) {  // remove the identity arrow at begin
        if (step.begin >= prev.arrows.size())
          return fail<I>(why, "identity removal position out of range");
        auto one = paracat::identity(inst, paracat::obj_at(inst, prev, step.begin));
        if (!(prev.arrows[step.begin] == one))
          return fail<I>(why, "arrow being removed is not the identity");
        if (!(next == splice(prev, step.begin, step.begin + 1, {})))
          return fail<I>(why, "identity removal result mismatch");
        return true;
      }
      if (step.begin > prev.arrows.size())
        return fail<I>(why, "identity insertion position out of range");
      auto one = paracat::identity(inst, paracat::obj_at(inst, prev, step.begin));
      if (!(next == splice(prev, step.begin, step.begin, {one})))
        return fail<I>(why, "identity insertion result mismatch");
      return true;
    }
    case Rule::concat_compat: {
      if (step.inner.size() != 2)
        return fail<I>(why, "concat-compat needs exactly two sub-certificates");
      const auto& l = step.inner[0];
      const auto& r = step.inner[1];
      if (!check_certificate(inst, l, why) || !check_certificate(inst, r, why))
        return false;
      if (!(prev == paracat::concat(inst, l.start, r.start)))
        return fail<I>(why, "concat-compat does not split the previous path");
      if (!(next == paracat::concat(inst, l.final_path(), r.final_path())))
        return fail<I>(why, "concat-compat result mismatch");
      return true;
    }
    case Rule::whisker_left:
    case Rule::whisker_right: {
      if (step.inner.size() != 1)
        return fail<I>(why, "whisker needs exactly one sub-certificate");
      const auto& c = step.inner[0];
      if (!check_certificate(inst, c, why)) return false;
      bool left = step.rule == Rule::whisker_left;
      Path<I> from = left ? paracat::whisker_left(inst, step.object, c.start)
                          : paracat::whisker_right(inst, c.start, step.object);
      Path<I> to = left ? paracat::whisker_left(inst, step.object, c.final_path())
                        : paracat::whisker_right(inst, c.final_path(), step.object);
      if (!(prev == from))
        return fail<I>(why, "whisker does not match the previous path");
      if (!(next == to)) return fail<I>(why, "whisker result mismatch");
      return true;
    }
  }
  return fail<I>(why, "unknown rule");
}

}  // namespace detail

template <class I>
bool check_certificate(const I& inst, const Certificate<I>& cert, std::string* why) {
  if (!paracat::well_formed(inst, cert.start))
    return detail::fail<I>(why, "start path is ill-formed");
  const Path<I>* cur = &cert.start;
  for (size_t i = 0; i < cert.steps.size(); ++i) {
    if (!paracat::well_formed(inst, cert.steps[i].result))
      return detail::fail<I>(why, "step " + std::to_string(i) + " result ill-formed");
    std::string inner_why;
    if (!detail::check_step(inst, *cur, cert.steps[i], &inner_why))
      return detail::fail<I>(why, "step " + std::to_string(i) + ": " + inner_why);
    cur = &cert.steps[i].result;
  }
  return true;
}

// p ∼ q for length-1 q, decided exactly: [p]↓ and [p] = q. No search.
template <class I>
bool decide_singleton(const I& inst, const Path<I>& p, const typename I::Arr& q) {
  auto c = paracat::pcompose(inst, p);
  return c.is_defined() && c.value() == q;
}

namespace detail {

template <class I>
std::string path_key(const I& inst, const Path<I>& p) {
  std::string k = inst.show_obj(p.start);
  for (const auto& f : p.arrows) {
    k += '|';
    k += inst.show_arr(f);
  }
  return k;
}

// Contraction-style moves: collapse of a defined span, identity removal,
// identity insertion (capped). Expansions are reached from the other
// frontier of the bidirectional search.
template <class I>
std::vector<Step<I>> search_moves(const I& inst, const Path<I>& u, size_t maxlen) {
  std::vector<Step<I>> out;
  const size_t n = u.arrows.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 2; j <= n; ++j) {
      Path<I> sub{paracat::obj_at(inst, u, i),
                  {u.arrows.begin() + static_cast<long>(i),
                   u.arrows.begin() + static_cast<long>(j)}};
      auto c = paracat::pcompose(inst, sub);
      if (!c.is_defined()) continue;
      Step<I> s;
      s.rule = Rule::collapse;
      s.begin = i;
      s.end = j;
      s.result = splice(u, i, j, {c.value()});
      out.push_back(std::move(s));
    }
  for (size_t i = 0; i < n; ++i) {
    auto one = paracat::identity(inst, paracat::obj_at(inst, u, i));
    if (u.arrows[i] == one) {
      Step<I> s;
      s.rule = Rule::paracat_law;
      s.begin = i;
      s.result = splice(u, i, i + 1, {});
      out.push_back(std::move(s));
    }
  }
  if (n + 1 <= maxlen)
    for (size_t i = 0; i <= n; ++i) {
      auto one = paracat::identity(inst, paracat::obj_at(inst, u, i));
      Step<I> s;
      s.rule = Rule::paracat_law;
      s.reversed = true;
      s.begin = i;
      s.result = splice(u, i, i, {one});
      out.push_back(std::move(s));
    }
  return out;
}

// A step u → v, replayed against v to land back on u.
template <class I>
Step<I> reverse_step(const Step<I>& s, const Path<I>& u) {
  Step<I> r = s;
  r.reversed = !s.reversed;
  r.result = u;
  if (s.rule == Rule::collapse && !s.reversed) r.end = s.begin + 1;
  return r;
}

}  // namespace detail

// Bounded bidirectional search for a rewrite chain of at most `depth` steps
// connecting p and q. Defined(certificate) on success; Undefined means "not
// found within depth", never "provably inequivalent".
template <class I>
Kleene<Certificate<I>> search_equiv(const I& inst, const Path<I>& p,
                                    const Path<I>& q, int depth) {
  using K = Kleene<Certificate<I>>;
  if (depth < 1) throw std::invalid_argument("search depth must be >= 1");
  if (!paracat::well_formed(inst, p) || !paracat::well_formed(inst, q) ||
      !(p.start == q.start) ||
      !(paracat::path_end(inst, p) == paracat::path_end(inst, q)))
    return K::undefined();

  struct Node {
    Path<I> path;
    std::string parent;  // empty for roots
    Step<I> via;         // step from parent to this node
    int dist = 0;
  };
  using Map = std::unordered_map<std::string, Node>;
  Map fwd, bwd;
  const size_t maxlen = std::max(p.arrows.size(), q.arrows.size()) + 2;
  const std::string pk = detail::path_key(inst, p);
  const std::string qk = detail::path_key(inst, q);

  auto build_chain = [&](const Map& map, std::string key) {
    // Steps from the root to `key`, in order.
    std::vector<Step<I>> steps;
    while (!map.at(key).parent.empty()) {
      steps.push_back(map.at(key).via);
      key = map.at(key).parent;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
  };
  auto stitch = [&](const std::string& meet) {
    Certificate<I> cert;
    cert.start = p;
    cert.steps = build_chain(fwd, meet);
    // Replay the backward chain in reverse, flipping each step.
    std::vector<Step<I>> back = build_chain(bwd, meet);
    std::vector<Path<I>> states{q};
    {
      const Path<I>* cur = &q;
      for (const auto& s : back) {
        states.push_back(s.result);
        cur = &s.result;
      }
      (void)cur;
    }
    for (size_t i = back.size(); i-- > 0;)
      cert.steps.push_back(detail::reverse_step(back[i], states[i]));
    return cert;
  };

  fwd.emplace(pk, Node{p, "", {}, 0});
  bwd.emplace(qk, Node{q, "", {}, 0});
  if (pk == qk) return K::defined(Certificate<I>{p, {}});

  std::vector<std::string> fwd_frontier{pk}, bwd_frontier{qk};
  int fwd_depth = 0, bwd_depth = 0;
  while (fwd_depth + bwd_depth < depth &&
         (!fwd_frontier.empty() || !bwd_frontier.empty())) {
    bool expand_fwd;
    if (fwd_frontier.empty())
      expand_fwd = false;
    else if (bwd_frontier.empty())
      expand_fwd = true;
    else
      expand_fwd = fwd_frontier.size() <= bwd_frontier.size();
    Map& mine = expand_fwd ? fwd : bwd;
    Map& other = expand_fwd ? bwd : fwd;
    std::vector<std::string>& frontier = expand_fwd ? fwd_frontier : bwd_frontier;
    (expand_fwd ? fwd_depth : bwd_depth)++;

    std::vector<std::string> next_frontier;
    for (const auto& key : frontier) {
      const Path<I> u = mine.at(key).path;
      for (auto& s : detail::search_moves(inst, u, maxlen)) {
        std::string vk = detail::path_key(inst, s.result);
        if (mine.count(vk)) continue;
        mine.emplace(vk, Node{s.result, key, s, mine.at(key).dist + 1});
        if (other.count(vk)) return K::defined(stitch(vk));
        next_frontier.push_back(vk);
      }
    }
    frontier = std::move(next_frontier);
  }
  return K::undefined();
}

// Constructive witness that p ⊗p q = (p⊗1),(1⊗q) is congruent to its flip
// (1⊗q),(p⊗1): each of the n·m transpositions is one collapse to the plain
// tensor arrow followed by one expansion into the swapped pair, both of which
// are defined arrows in any strict symmetric monoidal paracategory.
template <class I>
Certificate<I> tensor_flip_certificate(const I& inst, const Path<I>& p,
                                       const Path<I>& q) {
  using paracat::identity;
  const size_t n = p.arrows.size(), m = q.arrows.size();
  Certificate<I> cert;
  cert.start = paracat::path_tensor(inst, p, q);
  Path<I> cur = cert.start;
  // Objects of q along the way: Q₀ = dom q₁, …, Qₘ.
  auto qobj = [&](size_t j) { return paracat::obj_at(inst, q, j); };
  for (size_t j = 0; j < m; ++j) {
    // The arrow 1⊗q_{j+1} sits at index j+n and migrates to index j.
    for (size_t t = 0; t < n; ++t) {
      size_t k = j + n - 1 - t;  // position of the p-arrow being crossed
      const auto& p_arrow = p.arrows[n - 1 - t];
      const auto& q_arrow = q.arrows[j];
      Step<I> collapse;
      collapse.rule = Rule::collapse;
      collapse.begin = k;
      collapse.end = k + 2;
      collapse.result = detail::splice(
          cur, k, k + 2, {inst.tensor_arr(p_arrow, q_arrow)});
      cert.steps.push_back(collapse);
      Step<I> expand;
      expand.rule = Rule::collapse;
      expand.reversed = true;
      expand.begin = k;
      expand.end = k + 1;
      expand.result = detail::splice(
          collapse.result, k, k + 1,
          {inst.tensor_arr(identity(inst, inst.dom(p_arrow)), q_arrow),
           inst.tensor_arr(p_arrow, identity(inst, qobj(j + 1)))});
      cur = expand.result;
      cert.steps.push_back(expand);
    }
  }
  return cert;
}

// -- the quotient category PC/∼, at representative level --------------------

template <class I>
struct QuotMor {
  Path<I> rep;
};

template <class I>
QuotMor<I> functor_f(const I& inst, const typename I::Arr& f) {
  return {paracat::single(inst, f)};
}

template <class I>
QuotMor<I> quot_id(typename I::Obj a) {
  return {paracat::eps<I>(std::move(a))};
}

template <class I>
QuotMor<I> quot_compose(const I& inst, const QuotMor<I>& a, const QuotMor<I>& b) {
  return {paracat::concat(inst, a.rep, b.rep)};
}

template <class I>
QuotMor<I> quot_tensor(const I& inst, const QuotMor<I>& a, const QuotMor<I>& b) {
  return {paracat::path_tensor(inst, a.rep, b.rep)};
}

// Canonical trace of the compact closed quotient: the representative
// (1_A⊗η_U), (1_A⊗σ_{U*,U}), (f⊗1_{U*}), (1_B⊗ε_U). Total. The instance
// must carry the compact closed structure (dual/eta/eps).
template <class I>
QuotMor<I> quot_trace(const I& inst, const QuotMor<I>& f, typename I::Obj u,
                      typename I::Obj a, typename I::Obj b) {
  using paracat::eps;
  using paracat::path_tensor;
  using paracat::single;
  if (!(f.rep.start == inst.tensor_obj(a, u)) ||
      !(paracat::path_end(inst, f.rep) == inst.tensor_obj(b, u)))
    throw std::invalid_argument("quot_trace: representative is not typed A⊗U → B⊗U");
  auto udual = inst.dual(u);
  auto t1 = path_tensor(inst, eps<I>(a), single(inst, inst.eta(u)));
  auto t2 = path_tensor(inst, eps<I>(a), single(inst, inst.sym(udual, u)));
  auto t3 = path_tensor(inst, f.rep, eps<I>(udual));
  auto t4 = path_tensor(inst, eps<I>(b), single(inst, inst.eps(u)));
  return {paracat::concat(inst, paracat::concat(inst, t1, t2),
                          paracat::concat(inst, t3, t4))};
}

// L(p̄) = G(p₁);…;G(pₙ): the fold of a strict symmetric monoidal functor G
// over the representative. Well-definedness across certified-equivalent
// representatives is the freeness theorem, asserted by tests.
template <class I, class G>
typename G::Value induced_l(const I& inst, const G& g, const QuotMor<I>& m) {
  typename G::Value acc = g.identity(m.rep.start);
  for (const auto& f : m.rep.arrows) acc = g.compose(acc, g.map(f));
  (void)inst;
  return acc;
}

}  // namespace ptcat::pathcomp
