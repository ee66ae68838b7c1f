#include <doctest.h>

#include "ptcat/intp.hpp"
#include "ptcat/rng.hpp"

using namespace ptcat;
using namespace ptcat::intp;

namespace {

IObj robj(Rng& rng, int max_dim) {
  return {rng.uniform(0, max_dim), rng.uniform(0, max_dim)};
}

IMor rmor(Rng& rng, IObj dom, IObj cod) {
  return make_imor(dom, cod,
                   random_matrix(rng, cod.plus + dom.minus, dom.plus + cod.minus));
}

// Independent oracle for paths of length 2: the binary Int composite, wired
// directly and traced once over the junction object B⁻.
Kleene<IMor> binary_compose_oracle(TraceImpl base, const IMor& f, const IMor& g) {
  REQUIRE(f.dst == g.src);
  const IObj a = f.src, b = f.dst, c = g.dst;
  Layout in{{"A+", a.plus}, {"C-", c.minus}, {"B-", b.minus}};
  Matrix w1 = in.perm_to({"A+", "B-", "C-"});
  Layout mid1{{"B+", b.plus}, {"A-", a.minus}, {"C-", c.minus}};
  Matrix w2 = mid1.perm_to({"B+", "C-", "A-"});
  Layout mid2{{"C+", c.plus}, {"B-", b.minus}, {"A-", a.minus}};
  Matrix w3 = mid2.perm_to({"C+", "A-", "B-"});
  Matrix comp =
      mul(w3, mul(direct_sum(g.under, Matrix::identity(a.minus)),
                  mul(w2, mul(direct_sum(f.under, Matrix::identity(c.minus)), w1))));
  auto traced = trace_exact(base, comp, a.plus + c.minus, b.minus,
                            c.plus + a.minus).value;
  if (!traced.is_defined()) return Kleene<IMor>::undefined();
  return Kleene<IMor>::defined(IMor{a, c, traced.value()});
}

}  // namespace

TEST_SUITE_BEGIN("intp");

TEST_CASE("object structure and typing") {
  IObj a{1, 2}, b{3, 1};
  CHECK(itensor(a, b) == IObj{4, 3});
  CHECK(itensor(a, iunit()) == a);
  CHECK(itensor(iunit(), a) == a);
  CHECK(idual(a) == IObj{2, 1});
  CHECK(idual(idual(a)) == a);

  CHECK_THROWS_AS(make_imor(a, b, Matrix(2, 2)), shape_error);
  auto f = make_imor(a, b, Matrix(5, 2));  // (3+2) × (1+1)
  CHECK(f.src == a);
}

TEST_CASE("precomposition: base case and the n=3 shape check") {
  Rng rng(51);
  IObj a = robj(rng, 3);
  CHECK(precompose(a, {}) == Matrix::identity(a.plus + a.minus));

  std::vector<IObj> objs;
  for (int i = 0; i < 4; ++i) objs.push_back(robj(rng, 3));
  std::vector<IMor> path;
  for (int i = 0; i < 3; ++i)
    path.push_back(rmor(rng, objs[static_cast<size_t>(i)], objs[static_cast<size_t>(i + 1)]));
  Matrix pre = precompose(objs[0], path);
  // A₀⁺ ⊕ (A₀⁻⊕A₁⁻⊕A₂⁻) ⊕ A₃⁻ → A₃⁺ ⊕ A₀⁻ ⊕ (A₀⁻⊕A₁⁻⊕A₂⁻)
  int v = objs[0].minus + objs[1].minus + objs[2].minus;
  CHECK(pre.cols() == objs[0].plus + v + objs[3].minus);
  CHECK(pre.rows() == objs[3].plus + objs[0].minus + v);

  IMor wrong = rmor(rng, robj(rng, 3), robj(rng, 3));
  if (!(wrong.src == objs[3]))
    CHECK_THROWS_AS(precompose(objs[0], {path[0], wrong}), shape_error);
}

TEST_CASE("empty and singleton compositions") {
  Rng rng(52);
  for (TraceImpl base : {TraceImpl::ki, TraceImpl::hs, TraceImpl::sum_exact,
                         TraceImpl::kleene}) {
    for (int t = 0; t < 25; ++t) {
      IObj a = robj(rng, 3);
      auto e = pcompose_path(base, a, {});
      REQUIRE(e.is_defined());
      CHECK(e.value() == iid(a));

      IMor f = rmor(rng, a, robj(rng, 3));
      auto s = pcompose_path(base, a, {f});
      REQUIRE(s.is_defined());
      CHECK(s.value() == f);
    }
  }
}

TEST_CASE("length-2 composition agrees with the binary Int composite") {
  Rng rng(53);
  int defined = 0, undefined = 0;
  for (int t = 0; t < 200; ++t) {
    IObj a = robj(rng, 2), b = robj(rng, 2), c = robj(rng, 2);
    IMor f = rmor(rng, a, b), g = rmor(rng, b, c);
    auto via_path = pcompose_path(TraceImpl::ki, a, {f, g});
    auto via_oracle = binary_compose_oracle(TraceImpl::ki, f, g);
    CHECK(kleene_eq(via_path, via_oracle));
    (via_path.is_defined() ? defined : undefined)++;
  }
  CHECK(defined > 0);
  CHECK(undefined > 0);
}

TEST_CASE("a concrete undefined composite") {
  // f : (1,0) → (1,1) and g : (1,1) → (1,0) with all-ones matrices; the
  // feedback block has I−f22 = 0 with nonzero obstruction.
  IMor f = make_imor({1, 0}, {1, 1}, Matrix{{1, 1}});
  IMor g = make_imor({1, 1}, {1, 0}, Matrix{{1}, {1}});
  CHECK_FALSE(pcompose_path(TraceImpl::ki, {1, 0}, {f, g}).is_defined());
  CHECK_FALSE(pcompose_path(TraceImpl::hs, {1, 0}, {f, g}).is_defined());
}

TEST_CASE("tensor on arrows: unit, identities, associativity") {
  Rng rng(54);
  for (int t = 0; t < 30; ++t) {
    IObj a = robj(rng, 2), b = robj(rng, 2), c = robj(rng, 2);
    IMor f = rmor(rng, a, robj(rng, 2));
    IMor g = rmor(rng, b, robj(rng, 2));
    IMor h = rmor(rng, c, robj(rng, 2));

    CHECK(imor_tensor(f, iid(iunit())) == f);
    CHECK(imor_tensor(iid(iunit()), f) == f);
    CHECK(imor_tensor(iid(a), iid(b)) == iid(itensor(a, b)));
    CHECK(imor_tensor(imor_tensor(f, g), h) == imor_tensor(f, imor_tensor(g, h)));
  }
}

TEST_CASE("[σ,σ] = id and the symmetry is its own inverse family") {
  Rng rng(55);
  for (int t = 0; t < 20; ++t) {
    IObj a = robj(rng, 3), b = robj(rng, 3);
    auto c = pcompose_path(TraceImpl::ki, itensor(a, b), {isym(a, b), isym(b, a)});
    REQUIRE(c.is_defined());
    CHECK(c.value() == iid(itensor(a, b)));
  }
}

TEST_CASE("snake equations") {
  for (int p = 0; p <= 3; ++p)
    for (int m = 0; m <= 3; ++m) {
      IObj a{p, m};
      // [1_A⊗η_A, ε_A⊗1_A] = 1_A
      auto lhs = pcompose_path(TraceImpl::ki, a,
                               {imor_tensor(iid(a), ieta(a)),
                                imor_tensor(ieps(a), iid(a))});
      REQUIRE(lhs.is_defined());
      CHECK(lhs.value() == iid(a));
      // [η_A⊗1_{A*}, 1_{A*}⊗ε_A] = 1_{A*}
      IObj ad = idual(a);
      auto rhs = pcompose_path(TraceImpl::ki, ad,
                               {imor_tensor(ieta(a), iid(ad)),
                                imor_tensor(iid(ad), ieps(a))});
      REQUIRE(rhs.is_defined());
      CHECK(rhs.value() == iid(ad));
    }
}

TEST_CASE("N is a functor preserving tensor and symmetry") {
  Rng rng(56);
  CHECK(embed_n(VObj{3}) == IObj{3, 0});
  CHECK(embed_n(Matrix::identity(2)) == iid(IObj{2, 0}));

  for (int t = 0; t < 50; ++t) {
    int da = rng.uniform(0, 3), db = rng.uniform(0, 3), dc = rng.uniform(0, 3);
    Matrix f = random_matrix(rng, db, da), g = random_matrix(rng, dc, db);
    auto c = pcompose_path(TraceImpl::ki, {da, 0}, {embed_n(f), embed_n(g)});
    REQUIRE(c.is_defined());
    CHECK(c.value() == embed_n(mul(g, f)));

    Matrix h = random_matrix(rng, rng.uniform(0, 3), rng.uniform(0, 3));
    CHECK(imor_tensor(embed_n(f), embed_n(h)) == embed_n(direct_sum(f, h)));
  }
  CHECK(isym(embed_n(VObj{2}), embed_n(VObj{3})) == embed_n(block_swap(2, 3)));
}

TEST_CASE("the Intp trace preserves and reflects the base trace through N") {
  Rng rng(57);
  int defined = 0, undefined = 0;
  for (int t = 0; t < 60; ++t) {
    int da, du, db;
    Matrix f;
    if (t == 0) {
      da = du = db = 1;
      f = Matrix{{0, 1}, {0, 1}};  // ki-undefined
    } else {
      da = rng.uniform(0, 3);
      du = rng.uniform(0, 3);
      db = rng.uniform(0, 3);
      f = random_matrix(rng, db + du, da + du);
    }
    auto base = trace_exact(TraceImpl::ki, f, da, du, db).value;
    auto lifted = itrace(TraceImpl::ki, embed_n(f), {da, 0}, {du, 0}, {db, 0});
    if (base.is_defined()) {
      REQUIRE(lifted.is_defined());
      CHECK(lifted.value() == embed_n(base.value()));
      ++defined;
    } else {
      CHECK_FALSE(lifted.is_defined());
      ++undefined;
    }
  }
  CHECK(defined > 0);
  CHECK(undefined > 0);
}

TEST_CASE("yanking inside Intp: itrace of the symmetry is the identity") {
  for (int p = 0; p <= 2; ++p)
    for (int m = 0; m <= 2; ++m) {
      IObj a{p, m};
      auto r = itrace(TraceImpl::ki, isym(a, a), a, a, a);
      REQUIRE(r.is_defined());
      CHECK(r.value() == iid(a));
    }
}

TEST_CASE("itrace rejects ill-typed arrows") {
  IMor f = iid(IObj{1, 1});
  CHECK_THROWS_AS(itrace(TraceImpl::ki, f, {1, 0}, {1, 0}, {1, 0}), shape_error);
}

TEST_CASE("compact closed totality clauses") {
  // [1_A⊗η_C, f⊗1_C], [g⊗1_{C*}, 1_B⊗ε_C], [η_A⊗1_B, 1_{A*}⊗h] and
  // [1_A⊗k, ε_A⊗1_C] must be defined for arrows of the matching types.
  Rng rng(58);
  for (int t = 0; t < 25; ++t) {
    IObj a = robj(rng, 2), b = robj(rng, 2), c = robj(rng, 2);
    {
      IMor f = rmor(rng, itensor(a, idual(c)), b);
      auto r = pcompose_path(TraceImpl::ki, a,
                             {imor_tensor(iid(a), ieta(c)),
                              imor_tensor(f, iid(c))});
      CHECK(r.is_defined());
    }
    {
      IMor g = rmor(rng, a, itensor(b, c));
      auto r = pcompose_path(TraceImpl::ki, itensor(a, idual(c)),
                             {imor_tensor(g, iid(idual(c))),
                              imor_tensor(iid(b), ieps(c))});
      CHECK(r.is_defined());
    }
    {
      IMor h = rmor(rng, itensor(a, b), c);
      auto r = pcompose_path(TraceImpl::ki, b,
                             {imor_tensor(ieta(a), iid(b)),
                              imor_tensor(iid(idual(a)), h)});
      CHECK(r.is_defined());
    }
    {
      IMor k = rmor(rng, b, itensor(idual(a), c));
      auto r = pcompose_path(TraceImpl::ki, itensor(a, b),
                             {imor_tensor(iid(a), k),
                              imor_tensor(ieps(a), iid(c))});
      CHECK(r.is_defined());
    }
  }
}

TEST_SUITE_END();
