#pragma once

#include "kummer/ratfunc.hpp"

#include <string>
#include <vector>

namespace kummer {

/// Monic linear differential operator sum_i coefficients[i] * D^i with
/// coefficients over Q(x); the leading coefficient is the constant 1.
class LinearODE {
public:
    /// Throws std::invalid_argument unless the last coefficient is 1 and
    /// the order is positive.
    explicit LinearODE(std::vector<RatFunc> coefficients);

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    const std::vector<RatFunc>& coefficients() const { return c_; }
    const RatFunc& operator[](unsigned i) const { return c_.at(i); }

    RatFunc apply(const RatFunc& f) const;

    /// e.g. `a'''+(2*x)*a'+a`
    std::string to_string(const std::string& var = "x", const std::string& fn = "a") const;

    friend bool operator==(const LinearODE&, const LinearODE&) = default;

private:
    std::vector<RatFunc> c_;
};

/// outer o inner as operators (outer applied after inner).
LinearODE compose(const LinearODE& outer, const LinearODE& inner);

} // namespace kummer
