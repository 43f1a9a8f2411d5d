#pragma once

#include "kummer/ratfunc.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace kummer::testing {

class RandomRational {
public:
    explicit RandomRational(std::uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    Rat rational(long bound = 5, long max_den = 4) {
        return make_rat(integer(-bound, bound), integer(1, max_den));
    }

    Rat nonzero_rational(long bound = 5, long max_den = 4) {
        Rat q;
        do q = rational(bound, max_den);
        while (q == 0);
        return q;
    }

    Poly poly(int max_degree, long bound = 5, long max_den = 4) {
        std::vector<Rat> c(integer(0, max_degree) + 1);
        for (auto& v : c) v = rational(bound, max_den);
        return Poly(c);
    }

    std::vector<Rat> distinct_points(int count, long bound = 4) {
        std::vector<Rat> pts;
        while (static_cast<int>(pts.size()) < count) {
            const Rat p = make_rat(integer(-bound * 2, bound * 2), integer(1, 2));
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
        }
        return pts;
    }

    /// Random rational function with at most `max_poles` rational poles and
    /// numerator and denominator degrees at most `max_degree`.
    RatFunc ratfunc(int max_poles, int max_degree) {
        const int poles = static_cast<int>(integer(0, max_poles));
        Poly den(Rat(1));
        const auto pts = distinct_points(poles);
        for (const auto& p : pts) {
            const int room = max_degree - den.degree();
            if (room <= 0) break;
            den *= Poly::linear(p).pow(static_cast<unsigned>(integer(1, std::min(2, room))));
        }
        return RatFunc(poly(max_degree), den);
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

} // namespace kummer::testing
