// Kleene partial values: Defined(v) | Undefined, with Kleene equality and
// its directed variant. Every partial operation in this library returns one
// of these instead of throwing.
#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

namespace ptcat {

struct undefined_access : std::logic_error {
  undefined_access() : std::logic_error("value() called on Undefined") {}
};

template <typename T>
class Kleene {
 public:
  Kleene() = default;  // Undefined

  static Kleene defined(T v) {
    Kleene k;
    k.opt_ = std::move(v);
    return k;
  }
  static Kleene undefined() { return Kleene{}; }

  bool is_defined() const { return opt_.has_value(); }

  const T& value() const {
    if (!opt_) throw undefined_access{};
    return *opt_;
  }

  // Applies fn to the payload, keeping Undefined as Undefined.
  template <typename F>
  auto map(F&& fn) const -> Kleene<decltype(fn(std::declval<const T&>()))> {
    using U = decltype(fn(std::declval<const T&>()));
    if (!opt_) return Kleene<U>::undefined();
    return Kleene<U>::defined(fn(*opt_));
  }

 private:
  std::optional<T> opt_;
};

// x ≃ y: both undefined, or both defined and equal.
template <typename T, typename Eq>
bool kleene_eq(const Kleene<T>& x, const Kleene<T>& y, Eq eq) {
  if (!x.is_defined() && !y.is_defined()) return true;
  if (x.is_defined() != y.is_defined()) return false;
  return eq(x.value(), y.value());
}

template <typename T>
bool kleene_eq(const Kleene<T>& x, const Kleene<T>& y) {
  return kleene_eq(x, y, [](const T& a, const T& b) { return a == b; });
}

// x ⊑ y: x undefined, or both defined and equal.
template <typename T, typename Eq>
bool kleene_leq(const Kleene<T>& x, const Kleene<T>& y, Eq eq) {
  if (!x.is_defined()) return true;
  if (!y.is_defined()) return false;
  return eq(x.value(), y.value());
}

template <typename T>
bool kleene_leq(const Kleene<T>& x, const Kleene<T>& y) {
  return kleene_leq(x, y, [](const T& a, const T& b) { return a == b; });
}

}  // namespace ptcat
