#include "kummer/linear_ode.hpp"

#include <sstream>
#include <stdexcept>

namespace kummer {

LinearODE::LinearODE(std::vector<RatFunc> coefficients) : c_(std::move(coefficients)) {
    if (c_.size() < 2) throw std::invalid_argument("linear operator must have positive order");
    if (!(c_.back() == RatFunc(1))) throw std::invalid_argument("linear operator must be monic");
}

RatFunc LinearODE::apply(const RatFunc& f) const {
    RatFunc acc, d = f;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) acc += c_[i] * d;
        if (i + 1 < c_.size()) d = d.derivative();
    }
    return acc;
}

std::string LinearODE::to_string(const std::string& var, const std::string& fn) const {
    std::ostringstream out;
    bool first = true;
    for (int i = static_cast<int>(order()); i >= 0; --i) {
        const RatFunc& c = c_[i];
        if (c.is_zero()) continue;
        if (c.is_constant()) {
            const Rat v = c.constant_value();
            if (v < 0) out << '-';
            else if (!first) out << '+';
            if (abs(v) != 1) out << kummer::to_string(Rat(abs(v))) << '*';
        } else {
            if (!first) out << '+';
            out << '(' << c.to_string(var) << ")*";
        }
        first = false;
        out << fn << std::string(static_cast<std::size_t>(i), '\'');
    }
    return out.str();
}

LinearODE compose(const LinearODE& outer, const LinearODE& inner) {
    // D^k o q = sum_i C(k, i) q^(i) D^(k-i)
    std::vector<RatFunc> c(outer.order() + inner.order() + 1);
    for (unsigned j = 0; j <= inner.order(); ++j) {
        std::vector<RatFunc> dq{inner[j]};
        for (unsigned i = 1; i <= outer.order(); ++i) dq.push_back(dq.back().derivative());
        for (unsigned k = 0; k <= outer.order(); ++k) {
            if (outer[k].is_zero()) continue;
            unsigned long binom = 1;
            for (unsigned i = 0; i <= k; ++i) {
                if (!dq[i].is_zero()) c[k - i + j] += outer[k] * dq[i] * RatFunc(Rat(binom));
                binom = binom * (k - i) / (i + 1);
            }
        }
    }
    return LinearODE(std::move(c));
}

} // namespace kummer
