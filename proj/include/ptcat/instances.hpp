// Concrete paracategory instances: the total category (Vect, ⊕) with
// composition as the fold of matrix products, a deliberately broken variant
// used as a negative control, and the free paracategory on a named graph
// (composition defined only where a path reduces to at most one generator).
#pragma once

#include <string>
#include <vector>

#include "ptcat/matrix.hpp"
#include "ptcat/paracat.hpp"
#include "ptcat/vect.hpp"

namespace ptcat::paracat {

// (Vect, ⊕) as a total paracategory: [f₁,…,fₙ] = fₙ ∘ … ∘ f₁.
struct VectInstance {
  using Obj = VObj;
  using Arr = Matrix;

  Obj dom(const Arr& f) const { return {f.cols()}; }
  Obj cod(const Arr& f) const { return {f.rows()}; }

  Kleene<Arr> compose(const Obj& start, const std::vector<Arr>& path) const {
    Matrix acc = Matrix::identity(start.dim);
    for (const auto& f : path) acc = mul(f, acc);
    return Kleene<Arr>::defined(std::move(acc));
  }

  Obj unit() const { return {0}; }
  Obj tensor_obj(Obj a, Obj b) const { return {a.dim + b.dim}; }
  Arr tensor_arr(const Arr& f, const Arr& g) const { return direct_sum(f, g); }
  Arr sym(Obj a, Obj b) const { return block_swap(a.dim, b.dim); }

  std::string show_obj(const Obj& a) const { return std::to_string(a.dim); }
  std::string show_arr(const Arr& f) const { return format_matrix(f); }
};

// Negative control: drops paracategory axiom (b) by doubling singletons.
struct BrokenVectInstance : VectInstance {
  Kleene<Arr> compose(const Obj& start, const std::vector<Arr>& path) const {
    if (path.size() == 1)
      return Kleene<Arr>::defined(scale(rat(2), path[0]));
    return VectInstance::compose(start, path);
  }
};

// Free paracategory on a graph of named generators: [p] is defined iff p
// contains at most one non-identity arrow after deleting identities.
struct FreeObj {
  std::string name;
  bool operator==(const FreeObj&) const = default;
};

struct FreeArr {
  std::string name;
  FreeObj src, dst;
  bool is_id = false;
  bool operator==(const FreeArr&) const = default;
};

struct FreeInstance {
  using Obj = FreeObj;
  using Arr = FreeArr;

  Obj dom(const Arr& f) const { return f.src; }
  Obj cod(const Arr& f) const { return f.dst; }

  Kleene<Arr> compose(const Obj& start, const std::vector<Arr>& path) const {
    const Arr* generator = nullptr;
    for (const auto& f : path) {
      if (f.is_id) continue;
      if (generator) return Kleene<Arr>::undefined();
      generator = &f;
    }
    if (!generator)
      return Kleene<Arr>::defined(Arr{"1_" + start.name, start, start, true});
    return Kleene<Arr>::defined(*generator);
  }

  // Name-mangling tensor, strict in the unit. Enough to type-check whisker
  // operations on free paths; no monoidal laws are claimed for it.
  Obj unit() const { return {"I"}; }
  Obj tensor_obj(const Obj& a, const Obj& b) const {
    if (a.name == "I") return b;
    if (b.name == "I") return a;
    return {"(" + a.name + "*" + b.name + ")"};
  }
  Arr tensor_arr(const Arr& f, const Arr& g) const {
    Obj s = tensor_obj(f.src, g.src), d = tensor_obj(f.dst, g.dst);
    if (f.is_id && g.is_id) return {"1_" + s.name, s, d, true};
    if (f.is_id && f.src.name == "I") return g;
    if (g.is_id && g.src.name == "I") return f;
    return {"(" + f.name + "*" + g.name + ")", s, d, false};
  }
  Arr sym(const Obj& a, const Obj& b) const {
    Obj s = tensor_obj(a, b), d = tensor_obj(b, a);
    if (a.name == "I" || b.name == "I") return {"1_" + s.name, s, d, true};
    return {"sym(" + a.name + "," + b.name + ")", s, d, false};
  }

  std::string show_obj(const Obj& a) const { return a.name; }
  std::string show_arr(const Arr& f) const { return f.name; }
};

}  // namespace ptcat::paracat
