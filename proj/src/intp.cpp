#include "ptcat/intp.hpp"

namespace ptcat::intp {

std::string show_iobj(const IObj& a) {
  return "(" + std::to_string(a.plus) + "," + std::to_string(a.minus) + ")";
}

IMor make_imor(IObj dom, IObj cod, Matrix under) {
  if (under.rows() != cod.plus + dom.minus || under.cols() != dom.plus + cod.minus)
    throw shape_error("arrow " + show_iobj(dom) + " -> " + show_iobj(cod) +
                      " needs a " + std::to_string(cod.plus + dom.minus) + "x" +
                      std::to_string(dom.plus + cod.minus) +
                      " underlying matrix, got " + under.describe());
  return IMor{dom, cod, std::move(under)};
}

IMor iid(IObj a) {
  return IMor{a, a, Matrix::identity(a.plus + a.minus)};
}

IObj embed_n(VObj a) { return {a.dim, 0}; }

IMor embed_n(const Matrix& f) {
  return IMor{{f.cols(), 0}, {f.rows(), 0}, f};
}

IMor isym(IObj a, IObj b) {
  // σ_{A⁺,B⁺} ⊕ σ_{A⁻,B⁻} : (A⁺⊕B⁺)⊕(A⁻⊕B⁻) → (B⁺⊕A⁺)⊕(B⁻⊕A⁻).
  return IMor{itensor(a, b), itensor(b, a),
              direct_sum(block_swap(a.plus, b.plus), block_swap(a.minus, b.minus))};
}

IMor ieta(IObj a) {
  return IMor{iunit(), itensor(idual(a), a), Matrix::identity(a.minus + a.plus)};
}

IMor ieps(IObj a) {
  return IMor{itensor(a, idual(a)), iunit(), Matrix::identity(a.plus + a.minus)};
}

IMor imor_tensor(const IMor& f, const IMor& g) {
  const IObj& a = f.src;
  const IObj& c = f.dst;
  const IObj& b = g.src;
  const IObj& d = g.dst;
  Layout dom_layout{{"A+", a.plus}, {"B+", b.plus}, {"D-", d.minus}, {"C-", c.minus}};
  Layout cod_layout{{"C+", c.plus}, {"A-", a.minus}, {"D+", d.plus}, {"B-", b.minus}};
  Matrix pre = dom_layout.perm_to({"A+", "C-", "B+", "D-"});
  Matrix post = cod_layout.perm_to({"C+", "D+", "B-", "A-"});
  return IMor{itensor(a, b), itensor(c, d),
              mul(post, mul(direct_sum(f.under, g.under), pre))};
}

Matrix precompose(IObj start, const std::vector<IMor>& path) {
  // Invariant: acc is ⟦p₁,…,p_k⟧ : A₀⁺ ⊕ V ⊕ A_k⁻ → A_k⁺ ⊕ A₀⁻ ⊕ V with
  // V = A₀⁻⊕…⊕A_{k−1}⁻ of dimension vdim.
  Matrix acc = Matrix::identity(start.plus + start.minus);
  int vdim = 0;
  IObj cur = start;
  for (const auto& p : path) {
    if (!(p.src == cur))
      throw shape_error("ill-typed path: expected an arrow out of " +
                        show_iobj(cur) + ", got one out of " + show_iobj(p.src));
    const IObj& nxt = p.dst;
    const int tail = start.minus + vdim;  // A₀⁻ ⊕ V as one block
    Matrix s1 = direct_sum(acc, Matrix::identity(nxt.minus));
    Matrix s2 = direct_sum(Matrix::identity(cur.plus), block_swap(tail, nxt.minus));
    Matrix s3 = direct_sum(p.under, Matrix::identity(tail));
    Matrix s4 = direct_sum(Matrix::identity(nxt.plus), block_swap(cur.minus, tail));
    acc = mul(s4, mul(s3, mul(s2, s1)));
    vdim += cur.minus;
    cur = nxt;
  }
  return acc;
}

Kleene<IMor> pcompose_path(TraceImpl base, IObj start, const std::vector<IMor>& path,
                           UndefReason* reason) {
  Matrix pre = precompose(start, path);
  IObj end = path.empty() ? start : path.back().dst;
  int vdim = 0;
  {
    IObj cur = start;
    for (const auto& p : path) {
      vdim += cur.minus;
      cur = p.dst;
    }
  }
  // ⟦p⟧ ∘ (A₀⁺ ⊕ σ_{Aₙ⁻,V}) : A₀⁺ ⊕ Aₙ⁻ ⊕ V → Aₙ⁺ ⊕ A₀⁻ ⊕ V, traced over V.
  Matrix wire = direct_sum(Matrix::identity(start.plus), block_swap(end.minus, vdim));
  Matrix composite = mul(pre, wire);
  TraceResult r = trace_exact(base, composite, start.plus + end.minus, vdim,
                              end.plus + start.minus);
  if (reason) *reason = r.reason;
  if (!r.value.is_defined()) return Kleene<IMor>::undefined();
  return Kleene<IMor>::defined(IMor{start, end, r.value.value()});
}

std::vector<IMor> itrace_path(const IMor& f, IObj a, IObj u, IObj b) {
  if (!(f.src == itensor(a, u)) || !(f.dst == itensor(b, u)))
    throw shape_error("itrace: arrow is not typed A⊗U → B⊗U");
  return {imor_tensor(iid(a), ieta(u)), imor_tensor(iid(a), isym(idual(u), u)),
          imor_tensor(f, iid(idual(u))), imor_tensor(iid(b), ieps(u))};
}

Kleene<IMor> itrace(TraceImpl base, const IMor& f, IObj a, IObj u, IObj b) {
  return pcompose_path(base, a, itrace_path(f, a, u, b));
}

std::string IntpInstance::show_arr(const Arr& f) const {
  return show_iobj(f.src) + "->" + show_iobj(f.dst) + ":" + format_matrix(f.under);
}

}  // namespace ptcat::intp
