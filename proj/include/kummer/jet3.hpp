#pragma once

#include "kummer/rat.hpp"

#include <stdexcept>
#include <type_traits>

namespace kummer {

/// 3-jet of a map of the line at `source`: value and the first three
/// derivatives. A frame (lambda, lambda_e, lambda_ee, lambda_eee) is the
/// 3-jet at source 0 of a parametrization epsilon -> lambda(epsilon).
template <class T>
struct Jet3 {
    T source{};
    T value{};
    T d1{};
    T d2{};
    T d3{};

    friend bool operator==(const Jet3&, const Jet3&) = default;
};

using DiffeoJet3 = Jet3<Rat>;

template <class T>
Jet3<T> make_frame(T lambda, T d1, T d2, T d3) {
    return {T(0), std::move(lambda), std::move(d1), std::move(d2), std::move(d3)};
}

template <class T>
Jet3<T> identity_jet(const T& at) {
    return {at, at, T(1), T(0), T(0)};
}

/// Jet of outer o inner by Faa di Bruno:
///   (g o f)'   = g' f'
///   (g o f)''  = g'' f'^2 + g' f''
///   (g o f)''' = g''' f'^3 + 3 g'' f' f'' + g' f'''
/// For exact scalars the inner value must equal the outer source.
template <class T>
Jet3<T> compose(const Jet3<T>& outer, const Jet3<T>& inner) {
    if constexpr (std::is_same_v<T, Rat>) {
        if (inner.value != outer.source || outer.d1 == 0 || inner.d1 == 0) throw std::invalid_argument("jets are not composable");
    }
    const T& f1 = inner.d1;
    const T& f2 = inner.d2;
    const T& f3 = inner.d3;
    return {inner.source, outer.value, outer.d1 * f1, outer.d2 * f1 * f1 + outer.d1 * f2,
            outer.d3 * f1 * f1 * f1 + T(3) * outer.d2 * f1 * f2 + outer.d1 * f3};
}

/// d3/d1 - 3/2 (d2/d1)^2; d1 must be invertible.
template <class T>
T schwarzian(const Jet3<T>& j) {
    if constexpr (std::is_same_v<T, Rat>) {
        if (j.d1 == 0) throw std::domain_error("Schwarzian of a degenerate jet");
    }
    const T ratio = j.d2 / j.d1;
    return j.d3 / j.d1 - T(make_rat(3, 2)) * ratio * ratio;
}

} // namespace kummer
