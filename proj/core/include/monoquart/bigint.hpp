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

#ifndef MONOQUART_BIGINT_HPP
#define MONOQUART_BIGINT_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace monoquart {

/* arbitrary precision integers and rationals, backed by GMP */
using BigInt = mpz_class;
using Rational = mpq_class;

/* valuations are small non-negative integers; this sentinel stands for
   +infinity (valuation of 0). never do arithmetic on it. */
inline constexpr long val_inf = std::numeric_limits<long>::max();

inline int sign_of(const BigInt& n) { return mpz_sgn(n.get_mpz_t()); }

/* canonical rational: reduced, denominator > 0. den == 0 -> invalid_argument */
Rational make_rational(const BigInt& num, const BigInt& den);

bool fits_slong(const BigInt& n);
long to_slong(const BigInt& n);

/* n >= 0 and n = k^2 for integer k */
bool is_perfect_square(const BigInt& n);

/* r = u^2 for some rational u (0 counts; negatives do not) */
bool is_rational_square(const Rational& r);

/* p-adic valuation of n; val_inf when n = 0.
   p must be a prime >= 2, otherwise invalid_argument. */
long vp(const BigInt& n, const BigInt& p);

/* Miller-Rabin. deterministic witness set for n < 3.3e24 (covers u64),
   13 fixed witnesses plus 64 derived rounds above that, so the error
   rate is below 2^-128 for any input. */
bool is_probable_prime(const BigInt& n);

/* sign * product of p^e, primes strictly increasing */
struct Factorization {
    int sign = 1;                              // +1 or -1
    std::vector<std::pair<BigInt, int>> primes;

    BigInt value() const;
    bool squarefree() const;                   // all exponents 1
};

/* complete factorization of n != 0 (n = +-1 gives an empty prime list).
   trial division by primes up to 1e6, then Miller-Rabin certification and
   Pollard rho with Brent cycling on what is left. deterministic. */
Factorization factor_int(const BigInt& n);

/* all positive divisors, ascending */
std::vector<BigInt> divisors(const Factorization& f);

/* n != 0 required for both. 1 and -1 are squarefree. */
bool is_squarefree(const BigInt& n);
bool odd_part_squarefree(const BigInt& n);     // ignores the power of 2

/* uniform draw from [0, bound), bound >= 1; reproducible across platforms */
BigInt random_below(const BigInt& bound, std::mt19937_64& rng);

/* primes <= 1e6, shared trial-division table */
const std::vector<uint32_t>& small_prime_table();

}  // namespace monoquart

#endif
