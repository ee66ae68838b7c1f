// The partial trace operators on (Vect over ℚ, ⊕), the canonical total trace
// on (Vect over ℚ, ⊗), and the induced partial trace on substochastic maps.
//
// Every operator takes f : A⊕U → B⊕U (resp. A⊗U → B⊗U) as a matrix plus the
// split dimensions, and returns a Kleene value. Definedness is decided
// exactly:
//
//   hs         f11 + f12·(I−f22)⁻¹·f21          iff I−f22 invertible
//   ki         f11 + f12·i = f11 + k·f21         iff witnesses (k,i) exist,
//              i.e. im f21 ⊆ im(I−f22) and ker(I−f22) ⊆ ker f12
//   sum-exact  f11 + Σₙ f12·f22ⁿ·f21             iff the terms are eventually
//              exactly zero (the only exact notion of convergence over ℚ)
//   kleene     f11 + f12·(Σₙ f22ⁿ)·f21           iff f22 is nilpotent
//   sum-float  double-precision partial sums with a Cauchy/blow-up heuristic
//   kron       Tr(f)[b,a] = Σᵤ f[(b,u),(a,u)]    total
//   substoch   kron trace iff the result is again substochastic
#pragma once

#include <optional>
#include <utility>

#include "ptcat/kleene.hpp"
#include "ptcat/linsolve.hpp"
#include "ptcat/vect.hpp"

namespace ptcat {

// (k, i) certifying definedness of the kernel-image trace:
// f12 = k·(I−f22) and f21 = (I−f22)·i.
struct TraceWitness {
  Matrix i;  // U × A
  Matrix k;  // B × U
};

enum class UndefReason {
  none,
  not_invertible,      // hs: I−f22 singular
  image_obstruction,   // ki: im f21 ⊄ im(I−f22)
  kernel_obstruction,  // ki: ker(I−f22) ⊄ ker f12
  diverges,            // sum/kleene: terms or powers do not stabilize
  not_substochastic,   // substoch: total trace left the subcategory
};

const char* reason_code(UndefReason r);  // the CLI-facing token, e.g. "not-invertible"

Kleene<Matrix> tr_hs(const Matrix& f, int dim_a, int dim_u, int dim_b);

Kleene<std::pair<Matrix, TraceWitness>> tr_ki(const Matrix& f, int dim_a,
                                              int dim_u, int dim_b);

Kleene<Matrix> tr_sum_exact(const Matrix& f, int dim_a, int dim_u, int dim_b);

Kleene<Matrix> tr_kleene_exact(const Matrix& f, int dim_a, int dim_u, int dim_b);

// Partial sums up to `horizon`; Defined when the last quarter of partial
// sums is Cauchy within tol, Undefined when an entry exceeds 1/tol or the
// Cauchy test fails. A heuristic by construction.
Kleene<FMatrix> tr_sum_float(const FMatrix& f, int dim_a, int dim_u, int dim_b,
                             int horizon, double tol);

// Canonical trace of compact closed (Vect, ⊗); always defined. Kronecker
// index convention: (a, u) ↦ a·dim_u + u.
Matrix kron_total_trace(const Matrix& f, int dim_a, int dim_u, int dim_b);

// Entries in [0,1] and column sums ≤ 1.
bool is_substochastic(const Matrix& m);

struct not_substochastic_error : std::invalid_argument {
  not_substochastic_error()
      : std::invalid_argument("input matrix is not substochastic") {}
};

// The partial trace induced on substochastic maps by their inclusion into
// (Vect, ⊗): the total trace when it is again substochastic, else Undefined.
// A non-substochastic input violates the precondition and throws.
//
// The same subcategory recipe applies to any faithful strong monoidal
// inclusion (completely positive maps inside linear maps, for instance);
// only the substochastic instance is realized here.
Kleene<Matrix> induced_trace_substochastic(const Matrix& f, int dim_a, int dim_u,
                                           int dim_b);

// ---------------------------------------------------------------------------
// Uniform front end used by the axiom suites and the CLI.

enum class TraceImpl { hs, ki, sum_exact, sum_float, kleene, kron, substoch };

std::optional<TraceImpl> parse_impl(const std::string& name);
const char* impl_name(TraceImpl impl);

struct FloatOpts {
  int horizon = 64;
  double tol = 1e-9;
};

struct TraceResult {
  Kleene<Matrix> value;
  UndefReason reason = UndefReason::none;
  std::optional<TraceWitness> witness;  // ki only
};

// Exact implementations only (hs, ki, sum_exact, kleene, kron, substoch).
TraceResult trace_exact(TraceImpl impl, const Matrix& f, int dim_a, int dim_u,
                        int dim_b);

struct FloatTraceResult {
  Kleene<FMatrix> value;
  UndefReason reason = UndefReason::none;
};

FloatTraceResult trace_sum_float(const FMatrix& f, int dim_a, int dim_u,
                                 int dim_b, const FloatOpts& opts);

}  // namespace ptcat
