#include "ptcat/traces.hpp"

#include <cmath>

namespace ptcat {

namespace {

BlockView split(const Matrix& f, int dim_a, int dim_u, int dim_b) {
  return blocks(f, dim_a, dim_u, dim_b, dim_u);
}

Matrix id_minus(const Matrix& f22) {
  return sub(Matrix::identity(f22.rows()), f22);
}

}  // namespace

const char* reason_code(UndefReason r) {
  switch (r) {
    case UndefReason::none: return "none";
    case UndefReason::not_invertible: return "not-invertible";
    case UndefReason::image_obstruction: return "image-obstruction";
    case UndefReason::kernel_obstruction: return "kernel-obstruction";
    case UndefReason::diverges: return "diverges";
    case UndefReason::not_substochastic: return "not-substochastic";
  }
  return "none";
}

Kleene<Matrix> tr_hs(const Matrix& f, int dim_a, int dim_u, int dim_b) {
  BlockView v = split(f, dim_a, dim_u, dim_b);
  Kleene<Matrix> inv = inverse(id_minus(v.f22));
  if (!inv.is_defined()) return Kleene<Matrix>::undefined();
  return Kleene<Matrix>::defined(add(v.f11, mul(mul(v.f12, inv.value()), v.f21)));
}

Kleene<std::pair<Matrix, TraceWitness>> tr_ki(const Matrix& f, int dim_a,
                                              int dim_u, int dim_b) {
  using R = Kleene<std::pair<Matrix, TraceWitness>>;
  BlockView v = split(f, dim_a, dim_u, dim_b);
  Matrix m = id_minus(v.f22);
  Kleene<Matrix> i = solve_right(m, v.f21);  // (I−f22)·i = f21
  if (!i.is_defined()) return R::undefined();
  Kleene<Matrix> k = solve_left(m, v.f12);   // k·(I−f22) = f12
  if (!k.is_defined()) return R::undefined();
  Matrix via_i = add(v.f11, mul(v.f12, i.value()));
  Matrix via_k = add(v.f11, mul(k.value(), v.f21));
  // Witness-independence of the value, as an internal check.
  if (!(via_i == via_k))
    throw std::logic_error("kernel-image trace: f11 + f12·i != f11 + k·f21");
  return R::defined({via_i, TraceWitness{i.value(), k.value()}});
}

Kleene<Matrix> tr_sum_exact(const Matrix& f, int dim_a, int dim_u, int dim_b) {
  BlockView v = split(f, dim_a, dim_u, dim_b);
  // The terms tₙ = f12·f22ⁿ·f21 satisfy the order-dim_u linear recurrence of
  // f22's characteristic polynomial, so once dim_u consecutive terms vanish,
  // all later ones do. Scanning the first dim_u² + 2·dim_u terms therefore
  // covers every stabilization point N ≤ dim_u² + dim_u.
  const int n_max = dim_u * dim_u + dim_u;
  const int scan = n_max + std::max(dim_u, 1);
  Matrix sum(dim_b, dim_a);
  Matrix power_f21 = v.f21;  // f22ⁿ·f21
  std::vector<Matrix> terms;
  terms.reserve(static_cast<size_t>(scan));
  for (int n = 0; n < scan; ++n) {
    terms.push_back(mul(v.f12, power_f21));
    power_f21 = mul(v.f22, power_f21);
  }
  int stable_from = scan;
  for (int n = scan; n-- > 0;) {
    if (!terms[static_cast<size_t>(n)].is_zero()) break;
    stable_from = n;
  }
  if (stable_from > n_max) return Kleene<Matrix>::undefined();
  for (int n = 0; n < stable_from; ++n) sum = add(sum, terms[static_cast<size_t>(n)]);
  return Kleene<Matrix>::defined(add(v.f11, sum));
}

Kleene<Matrix> tr_kleene_exact(const Matrix& f, int dim_a, int dim_u, int dim_b) {
  BlockView v = split(f, dim_a, dim_u, dim_b);
  // Σₙ f22ⁿ stabilizes exactly iff f22 is nilpotent, iff f22^dim_u = 0.
  Matrix power = Matrix::identity(dim_u);
  Matrix geom(dim_u, dim_u);
  for (int n = 0; n < dim_u; ++n) {
    geom = add(geom, power);
    power = mul(v.f22, power);
  }
  if (!power.is_zero()) return Kleene<Matrix>::undefined();
  return Kleene<Matrix>::defined(add(v.f11, mul(mul(v.f12, geom), v.f21)));
}

Kleene<FMatrix> tr_sum_float(const FMatrix& f, int dim_a, int dim_u, int dim_b,
                             int horizon, double tol) {
  if (f.cols != dim_a + dim_u || f.rows != dim_b + dim_u)
    throw shape_error("tr_sum_float: split does not partition the matrix");
  if (horizon < 1) throw std::invalid_argument("tr_sum_float: horizon must be >= 1");
  FMatrix f11(dim_b, dim_a), f12(dim_b, dim_u), f21(dim_u, dim_a), f22(dim_u, dim_u);
  for (int i = 0; i < dim_b; ++i) {
    for (int j = 0; j < dim_a; ++j) f11.at(i, j) = f.at(i, j);
    for (int j = 0; j < dim_u; ++j) f12.at(i, j) = f.at(i, dim_a + j);
  }
  for (int i = 0; i < dim_u; ++i) {
    for (int j = 0; j < dim_a; ++j) f21.at(i, j) = f.at(dim_b + i, j);
    for (int j = 0; j < dim_u; ++j) f22.at(i, j) = f.at(dim_b + i, dim_a + j);
  }
  const double limit = 1.0 / tol;
  FMatrix sum = f11;
  FMatrix power_f21 = f21;
  double worst_delta = 0.0;
  const int cauchy_from = horizon - horizon / 4;
  for (int n = 0; n < horizon; ++n) {
    FMatrix term = fmul(f12, power_f21);
    sum = fadd(sum, term);
    for (double x : sum.a)
      if (!std::isfinite(x) || std::abs(x) > limit)
        return Kleene<FMatrix>::undefined();
    if (n >= cauchy_from)
      for (double x : term.a) worst_delta = std::max(worst_delta, std::abs(x));
    power_f21 = fmul(f22, power_f21);
  }
  if (worst_delta > tol) return Kleene<FMatrix>::undefined();
  return Kleene<FMatrix>::defined(std::move(sum));
}

Matrix kron_total_trace(const Matrix& f, int dim_a, int dim_u, int dim_b) {
  if (dim_u < 0 || f.cols() != dim_a * dim_u || f.rows() != dim_b * dim_u)
    throw shape_error("kron trace: split " + std::to_string(dim_a) + "*" +
                      std::to_string(dim_u) + " -> " + std::to_string(dim_b) + "*" +
                      std::to_string(dim_u) + " does not match " + f.describe());
  Matrix t(dim_b, dim_a);
  for (int b = 0; b < dim_b; ++b)
    for (int a = 0; a < dim_a; ++a)
      for (int u = 0; u < dim_u; ++u)
        t.at(b, a) += f.at(b * dim_u + u, a * dim_u + u);
  return t;
}

bool is_substochastic(const Matrix& m) {
  for (int j = 0; j < m.cols(); ++j) {
    Rat colsum(0);
    for (int i = 0; i < m.rows(); ++i) {
      const Rat& e = m.at(i, j);
      if (e < 0 || e > 1) return false;
      colsum += e;
    }
    if (colsum > 1) return false;
  }
  return true;
}

Kleene<Matrix> induced_trace_substochastic(const Matrix& f, int dim_a, int dim_u,
                                           int dim_b) {
  if (!is_substochastic(f)) throw not_substochastic_error{};
  Matrix t = kron_total_trace(f, dim_a, dim_u, dim_b);
  if (!is_substochastic(t)) return Kleene<Matrix>::undefined();
  return Kleene<Matrix>::defined(std::move(t));
}

std::optional<TraceImpl> parse_impl(const std::string& name) {
  if (name == "hs") return TraceImpl::hs;
  if (name == "ki") return TraceImpl::ki;
  if (name == "sum-exact") return TraceImpl::sum_exact;
  if (name == "sum-float") return TraceImpl::sum_float;
  if (name == "kleene") return TraceImpl::kleene;
  if (name == "kron") return TraceImpl::kron;
  if (name == "substoch") return TraceImpl::substoch;
  return std::nullopt;
}

const char* impl_name(TraceImpl impl) {
  switch (impl) {
    case TraceImpl::hs: return "hs";
    case TraceImpl::ki: return "ki";
    case TraceImpl::sum_exact: return "sum-exact";
    case TraceImpl::sum_float: return "sum-float";
    case TraceImpl::kleene: return "kleene";
    case TraceImpl::kron: return "kron";
    case TraceImpl::substoch: return "substoch";
  }
  return "?";
}

TraceResult trace_exact(TraceImpl impl, const Matrix& f, int dim_a, int dim_u,
                        int dim_b) {
  TraceResult r;
  switch (impl) {
    case TraceImpl::hs:
      r.value = tr_hs(f, dim_a, dim_u, dim_b);
      if (!r.value.is_defined()) r.reason = UndefReason::not_invertible;
      return r;
    case TraceImpl::ki: {
      BlockView v = blocks(f, dim_a, dim_u, dim_b);
      Matrix m = sub(Matrix::identity(dim_u), v.f22);
      if (!solve_right(m, v.f21).is_defined()) {
        r.reason = UndefReason::image_obstruction;
        return r;
      }
      auto ki = tr_ki(f, dim_a, dim_u, dim_b);
      if (!ki.is_defined()) {
        r.reason = UndefReason::kernel_obstruction;
        return r;
      }
      r.value = Kleene<Matrix>::defined(ki.value().first);
      r.witness = ki.value().second;
      return r;
    }
    case TraceImpl::sum_exact:
      r.value = tr_sum_exact(f, dim_a, dim_u, dim_b);
      if (!r.value.is_defined()) r.reason = UndefReason::diverges;
      return r;
    case TraceImpl::kleene:
      r.value = tr_kleene_exact(f, dim_a, dim_u, dim_b);
      if (!r.value.is_defined()) r.reason = UndefReason::diverges;
      return r;
    case TraceImpl::kron:
      r.value = Kleene<Matrix>::defined(kron_total_trace(f, dim_a, dim_u, dim_b));
      return r;
    case TraceImpl::substoch:
      r.value = induced_trace_substochastic(f, dim_a, dim_u, dim_b);
      if (!r.value.is_defined()) r.reason = UndefReason::not_substochastic;
      return r;
    case TraceImpl::sum_float:
      throw std::invalid_argument("sum-float is not an exact implementation");
  }
  return r;
}

FloatTraceResult trace_sum_float(const FMatrix& f, int dim_a, int dim_u,
                                 int dim_b, const FloatOpts& opts) {
  FloatTraceResult r;
  r.value = tr_sum_float(f, dim_a, dim_u, dim_b, opts.horizon, opts.tol);
  if (!r.value.is_defined()) r.reason = UndefReason::diverges;
  return r;
}

}  // namespace ptcat
