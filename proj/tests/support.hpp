#pragma once

#include <random>
#include <vector>

#include "phiirred/zpoly.hpp"

namespace testing_support {

using phiirred::IntPoly;
using phiirred::Integer;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed1234abcdULL);
    return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline IntPoly random_poly(std::size_t max_degree, long height) {
    std::vector<Integer> c(static_cast<std::size_t>(uniform(0, static_cast<long>(max_degree))) + 1);
    for (auto& v : c) v = uniform(-height, height);
    return IntPoly(std::move(c));
}

inline IntPoly random_monic(std::size_t degree, long height) {
    std::vector<Integer> c(degree + 1);
    for (auto& v : c) v = uniform(-height, height);
    c.back() = 1;
    return IntPoly(std::move(c));
}

inline IntPoly random_nonzero(std::size_t max_degree, long height) {
    for (;;) {
        IntPoly f = random_poly(max_degree, height);
        if (!f.is_zero()) return f;
    }
}

}  // namespace testing_support
