// The partial Int-construction over the partially traced base (Vect, ⊕).
//
// An object is a pair (A⁺, A⁻) of base objects; an arrow (A⁺,A⁻) → (B⁺,B⁻)
// is a base morphism A⁺⊕B⁻ → B⁺⊕A⁻. Composition of a path is the base trace
// of a wired-up precomposition; with a partial base trace the result is a
// compact closed paracategory. The base tensor ⊕ is written additively on
// dimensions throughout.
#pragma once

#include <string>
#include <vector>

#include "ptcat/paracat.hpp"
#include "ptcat/traces.hpp"

namespace ptcat::intp {

struct IObj {
  int plus = 0;
  int minus = 0;
  bool operator==(const IObj&) const = default;
};

// (A⁺,A⁻) ⊗ (B⁺,B⁻) = (A⁺⊕B⁺, B⁻⊕A⁻); unit (0,0); dual (A,B)* = (B,A).
inline IObj itensor(IObj a, IObj b) { return {a.plus + b.plus, b.minus + a.minus}; }
inline IObj iunit() { return {0, 0}; }
inline IObj idual(IObj a) { return {a.minus, a.plus}; }

std::string show_iobj(const IObj& a);

struct IMor {
  IObj src, dst;
  Matrix under;  // src.plus ⊕ dst.minus → dst.plus ⊕ src.minus
  bool operator==(const IMor&) const = default;
};

// Validates the typing rule; throws shape_error otherwise.
IMor make_imor(IObj dom, IObj cod, Matrix under);

IMor iid(IObj a);

// N : (Vect,⊕) → Intp, full and faithful: N(A) = (A, 0), N(f) = f.
IObj embed_n(VObj a);
IMor embed_n(const Matrix& f);

// σ, the duality unit/counit. All three are wrapped base identities or block
// permutations.
IMor isym(IObj a, IObj b);
IMor ieta(IObj a);  // (I,I) → A*⊗A, underlying id
IMor ieps(IObj a);  // A⊗A* → (I,I), underlying id

// Tensor on arrows: conjugate f.under ⊕ g.under by the block permutations
// that regroup (A⁺⊕B⁺)⊕(D⁻⊕C⁻) as (A⁺⊕C⁻)⊕(B⁺⊕D⁻) and back.
IMor imor_tensor(const IMor& f, const IMor& g);

// Precomposition ⟦p⟧ : A₀⁺ ⊕ V ⊕ Aₙ⁻ → Aₙ⁺ ⊕ A₀⁻ ⊕ V with
// V = A₀⁻⊕…⊕A_{n−1}⁻. Total, defined by recursion on the path.
Matrix precompose(IObj start, const std::vector<IMor>& path);

// [p] = Tr^V(⟦p⟧ ∘ (A₀⁺ ⊕ σ_{Aₙ⁻,V})), over the given exact base trace.
// When undefined and `reason` is non-null, the base trace's reason code is
// written there.
Kleene<IMor> pcompose_path(TraceImpl base, IObj start, const std::vector<IMor>& path,
                           UndefReason* reason = nullptr);

// Trace in the compact closed paracategory:
// [1_A⊗η_U, 1_A⊗σ_{U*,U}, f⊗1_{U*}, 1_B⊗ε_U] for f : A⊗U → B⊗U.
Kleene<IMor> itrace(TraceImpl base, const IMor& f, IObj a, IObj u, IObj b);

// The same four-arrow path as an Intp path (for the completion's quotient
// trace and for rendering).
std::vector<IMor> itrace_path(const IMor& f, IObj a, IObj u, IObj b);

// Not implemented: the non-strict functor out of Intp induced by a
// trace-preserving G into a compact closed paracategory D. It acts as
// K(A⁺,A⁻) = G(A⁺)⊗G(A⁻)* on objects and sends f : (A⁺,A⁻) → (C⁺,C⁻) to
//   [ 1⊗η_{G C⁻}⊗1, 1⊗σ⊗1, G(f)⊗σ, 1⊗ε_{G A⁻}⊗1 ]
// in D. Making that precise requires non-strict coherence isomorphisms
// (objects in the image of the embedding satisfy equations like
// A⊗B* = B*⊗A that a general D does not), which is orthogonal to the
// pipeline built here.

// Intp as a paracategory instance, parameterized by the base trace.
struct IntpInstance {
  TraceImpl base = TraceImpl::ki;

  using Obj = IObj;
  using Arr = IMor;

  Obj dom(const Arr& f) const { return f.src; }
  Obj cod(const Arr& f) const { return f.dst; }
  Kleene<Arr> compose(const Obj& start, const std::vector<Arr>& path) const {
    return pcompose_path(base, start, path);
  }
  Obj unit() const { return iunit(); }
  Obj tensor_obj(Obj a, Obj b) const { return itensor(a, b); }
  Arr tensor_arr(const Arr& f, const Arr& g) const { return imor_tensor(f, g); }
  Arr sym(Obj a, Obj b) const { return isym(a, b); }

  // Compact closed structure, used by the completion's canonical trace.
  Obj dual(Obj a) const { return idual(a); }
  Arr eta(Obj a) const { return ieta(a); }
  Arr eps(Obj a) const { return ieps(a); }

  std::string show_obj(const Obj& a) const { return show_iobj(a); }
  std::string show_arr(const Arr& f) const;
};

}  // namespace ptcat::intp
