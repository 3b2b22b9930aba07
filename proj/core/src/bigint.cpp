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

#include "monoquart/bigint.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace monoquart {

namespace {

constexpr uint32_t trial_division_bound = 1000000;

/* 13 bases: deterministic for every n < 3317044064679887385961981 */
constexpr std::array<uint64_t, 13> mr_bases = {2,  3,  5,  7,  11, 13, 17,
                                               19, 23, 29, 31, 37, 41};

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool mr_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % p == 0) return n == p;
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : mr_bases) {
        if (a % n == 0) continue;
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

/* Brent's cycle-finding variant of Pollard rho. returns a factor of the odd
   composite n, possibly n itself on a failed round (caller bumps c). */
uint64_t brent_u64(uint64_t n, uint64_t c, uint64_t x0) {
    uint64_t y = x0, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const uint64_t chunk = 128;
    while (g == 1) {
        x = y;
        for (uint64_t i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
        for (uint64_t k = 0; k < r && g == 1; k += chunk) {
            ys = y;
            uint64_t lim = std::min(chunk, r - k);
            for (uint64_t i = 0; i < lim; ++i) {
                y = (mulmod_u64(y, y, n) + c) % n;
                q = mulmod_u64(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = (mulmod_u64(ys, ys, n) + c) % n;
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void factor_u64(uint64_t n, std::vector<std::pair<BigInt, int>>& out);

void split_u64(uint64_t n, std::vector<std::pair<BigInt, int>>& out) {
    if (n == 1) return;
    if (mr_u64(n)) {
        out.emplace_back(BigInt(static_cast<unsigned long>(n)), 1);
        return;
    }
    uint64_t d = n;
    for (uint64_t c = 1; d == n; ++c) d = brent_u64(n, c, 2 + c);
    split_u64(d, out);
    split_u64(n / d, out);
}

void factor_u64(uint64_t n, std::vector<std::pair<BigInt, int>>& out) {
    for (uint32_t p : small_prime_table()) {
        if (static_cast<uint64_t>(p) * p > n) break;
        if (n % p == 0) {
            int e = 0;
            do { n /= p; ++e; } while (n % p == 0);
            out.emplace_back(BigInt(static_cast<unsigned long>(p)), e);
        }
    }
    if (n > 1) {
        /* no factor <= 1e6 left; below 1e12 that means prime */
        if (n < static_cast<uint64_t>(trial_division_bound) * trial_division_bound || mr_u64(n))
            out.emplace_back(BigInt(static_cast<unsigned long>(n)), 1);
        else
            split_u64(n, out);
    }
}

bool mr_witness_mpz(const BigInt& n, const BigInt& a, const BigInt& d, int s) {
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    BigInt n1 = n - 1;
    if (x == 1 || x == n1) return true;
    for (int i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n1) return true;
    }
    return false;
}

bool mr_mpz(const BigInt& n) {
    BigInt d = n - 1;
    int s = 0;
    while (mpz_even_p(d.get_mpz_t())) { d >>= 1; ++s; }
    for (uint64_t b : mr_bases) {
        BigInt a(static_cast<unsigned long>(b));
        if (a % n == 0) continue;
        if (!mr_witness_mpz(n, a, d, s)) return false;
    }
    /* 64 extra derived rounds keep the error below 2^-128 beyond the
       deterministic range of the fixed bases */
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ mpz_fdiv_ui(n.get_mpz_t(), 0x7fffffffu));
    BigInt span = n - 3;
    for (int i = 0; i < 64; ++i) {
        BigInt a = 2 + random_below(span, rng);
        if (!mr_witness_mpz(n, a, d, s)) return false;
    }
    return true;
}

BigInt brent_mpz(const BigInt& n, unsigned long c, unsigned long x0) {
    BigInt y(x0), q(1), g(1), x, ys, diff;
    uint64_t r = 1;
    const uint64_t chunk = 128;
    auto step = [&](BigInt& v) {
        v = (v * v + c) % n;
    };
    while (g == 1) {
        x = y;
        for (uint64_t i = 0; i < r; ++i) step(y);
        for (uint64_t k = 0; k < r && g == 1; k += chunk) {
            ys = y;
            uint64_t lim = std::min(chunk, r - k);
            for (uint64_t i = 0; i < lim; ++i) {
                step(y);
                diff = x - y;
                mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
                q = (q * diff) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            step(ys);
            diff = x - ys;
            mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void split_mpz(const BigInt& n, std::vector<std::pair<BigInt, int>>& out) {
    if (n == 1) return;
    if (mr_mpz(n)) {
        out.emplace_back(n, 1);
        return;
    }
    /* peel perfect powers first; rho struggles on p^k with large p */
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            BigInt root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                std::vector<std::pair<BigInt, int>> base;
                split_mpz(root, base);
                for (auto& [p, e] : base) out.emplace_back(p, e * static_cast<int>(k));
                return;
            }
        }
    }
    BigInt d = n;
    for (unsigned long c = 1; d == n; ++c) d = brent_mpz(n, c, 2 + c);
    split_mpz(d, out);
    split_mpz(n / d, out);
}

void merge_sorted(std::vector<std::pair<BigInt, int>>& primes) {
    std::sort(primes.begin(), primes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<BigInt, int>> merged;
    for (auto& pe : primes) {
        if (!merged.empty() && merged.back().first == pe.first)
            merged.back().second += pe.second;
        else
            merged.push_back(pe);
    }
    primes = std::move(merged);
}

}  // namespace

const std::vector<uint32_t>& small_prime_table() {
    static const std::vector<uint32_t> table = [] {
        std::vector<bool> composite(trial_division_bound + 1, false);
        std::vector<uint32_t> primes;
        for (uint32_t i = 2; i <= trial_division_bound; ++i) {
            if (composite[i]) continue;
            primes.push_back(i);
            for (uint64_t j = static_cast<uint64_t>(i) * i; j <= trial_division_bound; j += i)
                composite[j] = true;
        }
        return primes;
    }();
    return table;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool fits_slong(const BigInt& n) { return mpz_fits_slong_p(n.get_mpz_t()) != 0; }

long to_slong(const BigInt& n) {
    if (!fits_slong(n)) throw std::overflow_error("to_slong: out of range");
    return mpz_get_si(n.get_mpz_t());
}

bool is_perfect_square(const BigInt& n) {
    if (sign_of(n) < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_rational_square(const Rational& r) {
    if (sgn(r) < 0) return false;
    return is_perfect_square(r.get_num()) && is_perfect_square(r.get_den());
}

long vp(const BigInt& n, const BigInt& p) {
    if (p < 2 || !is_probable_prime(p))
        throw std::invalid_argument("vp: modulus is not a prime >= 2");
    if (n == 0) return val_inf;
    BigInt rest;
    return static_cast<long>(
        mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    if (mpz_fits_ulong_p(n.get_mpz_t())) return mr_u64(mpz_get_ui(n.get_mpz_t()));
    if (mpz_even_p(n.get_mpz_t())) return false;
    return mr_mpz(n);
}

BigInt Factorization::value() const {
    BigInt v = sign;
    for (const auto& [p, e] : primes)
        for (int i = 0; i < e; ++i) v *= p;
    return v;
}

bool Factorization::squarefree() const {
    return std::all_of(primes.begin(), primes.end(),
                       [](const auto& pe) { return pe.second == 1; });
}

Factorization factor_int(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("factor_int: zero has no factorization");
    Factorization f;
    f.sign = sign_of(n) < 0 ? -1 : 1;
    BigInt m = abs(n);
    if (m == 1) return f;

    if (mpz_fits_ulong_p(m.get_mpz_t()) && mpz_sizeinbase(m.get_mpz_t(), 2) <= 63) {
        factor_u64(mpz_get_ui(m.get_mpz_t()), f.primes);
        merge_sorted(f.primes);
        return f;
    }

    for (uint32_t p : small_prime_table()) {
        if (mpz_cmp_ui(m.get_mpz_t(), 1) == 0) break;
        if (mpz_cmp_ui(m.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) {
            f.primes.emplace_back(m, 1);  /* no factor <= sqrt(m) left */
            m = 1;
            break;
        }
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            int e = 0;
            do {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
            f.primes.emplace_back(BigInt(static_cast<unsigned long>(p)), e);
        }
        /* once the remainder fits, finish on the word-sized path */
        if (mpz_fits_ulong_p(m.get_mpz_t()) && mpz_sizeinbase(m.get_mpz_t(), 2) <= 63) {
            factor_u64(mpz_get_ui(m.get_mpz_t()), f.primes);
            merge_sorted(f.primes);
            return f;
        }
    }
    if (m > 1) split_mpz(m, f.primes);
    merge_sorted(f.primes);
    return f;
}

std::vector<BigInt> divisors(const Factorization& f) {
    std::vector<BigInt> divs{1};
    for (const auto& [p, e] : f.primes) {
        size_t n = divs.size();
        BigInt pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < n; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

bool is_squarefree(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("is_squarefree: undefined for zero");
    return factor_int(n).squarefree();
}

bool odd_part_squarefree(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("odd_part_squarefree: undefined for zero");
    Factorization f = factor_int(n);
    return std::all_of(f.primes.begin(), f.primes.end(), [](const auto& pe) {
        return pe.second == 1 || pe.first == 2;
    });
}

BigInt random_below(const BigInt& bound, std::mt19937_64& rng) {
    if (bound < 1) throw std::invalid_argument("random_below: bound must be positive");
    size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    size_t words = (bits + 63) / 64;
    std::vector<uint64_t> buf(words);
    while (true) {
        for (auto& w : buf) w = rng();
        if (bits % 64 != 0) buf.back() &= (uint64_t(1) << (bits % 64)) - 1;
        BigInt r;
        mpz_import(r.get_mpz_t(), words, -1, sizeof(uint64_t), -1, 0, buf.data());
        if (r < bound) return r;
    }
}

}  // namespace monoquart
