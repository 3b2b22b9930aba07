/*
   Copyright 2026 the monoquart authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MONOQUART_TEST_UTIL_HPP
#define MONOQUART_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "monoquart/bigint.hpp"
#include "monoquart/intpoly.hpp"
#include "monoquart/quartic.hpp"

namespace mqt {

using monoquart::BigInt;
using monoquart::IntPoly;

/* ascending-degree coefficients from plain longs */
inline IntPoly ip(const std::vector<long>& c) {
    std::vector<BigInt> v;
    v.reserve(c.size());
    for (long x : c) v.emplace_back(x);
    return IntPoly(std::move(v));
}

inline monoquart::QuarticShape quart(long a3, long a2, long a1, long a0) {
    return {BigInt(a3), BigInt(a2), BigInt(a1), BigInt(a0)};
}

inline long rnd_long(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntPoly rnd_poly(std::mt19937_64& rng, long deg, long bound,
                        bool monic) {
    std::vector<BigInt> c(static_cast<size_t>(deg) + 1);
    for (long i = 0; i <= deg; ++i)
        c[static_cast<size_t>(i)] = BigInt(rnd_long(rng, -bound, bound));
    if (monic)
        c[static_cast<size_t>(deg)] = 1;
    else
        while (c[static_cast<size_t>(deg)] == 0)
            c[static_cast<size_t>(deg)] = BigInt(rnd_long(rng, -bound, bound));
    return IntPoly(std::move(c));
}

}  // namespace mqt

#endif
