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

#ifndef MONOQUART_DENSITY_HPP
#define MONOQUART_DENSITY_HPP

#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "monoquart/bigint.hpp"

namespace monoquart {

/* half-open parameter range [lo, hi), sieved in segments that tile the
   range exactly; bounds must fit a signed 64-bit integer */
struct SieveRange {
    BigInt lo;
    BigInt hi;
    std::size_t segment_size = std::size_t{1} << 20;
};

/* bitmap over [lo, hi): entry i is true iff |lo + i| is square-free
   (0 is not square-free, +-1 are) */
std::vector<bool> squarefree_sieve(const SieveRange& r);

/* entry i is true iff |mult * (lo + i) + add| is square-free; mult != 0.
   marks each prime p via the solutions of mult*n + add = 0 (mod p^2),
   so only one pass over the range per prime. */
std::vector<bool> linear_squarefree_sieve(const SieveRange& r,
                                          long long mult, long long add);

struct DensityCounts {
    long long total = 0;
    long long param_squarefree = 0;   // the parameter itself
    long long pair_squarefree = 0;    // parameter and its cofactor
    long long certified_monogenic = 0;
    long long theta_generates = 0;    // Z[theta] maximal at every prime
    long long reducible = 0;          // skipped by the theta scan
};

struct DensityOptions {
    std::size_t segment_size = std::size_t{1} << 20;
    int threads = 1;
    bool with_certificates = false;   // also run the (slow) certifier per parameter
    std::uint64_t seed = 0;
};

struct DensityReport {
    std::string kind;      // "family_density" or "theta_scan"
    std::string family;    // "f" (x^4+bx+b over b) or "g" (x^4+x^3+d over d)
    SieveRange range;
    DensityCounts counts;
    bool has_certificates = false;
    bool has_theta = false;
    std::uint64_t seed = 0;
    double squarefree_target = 0.0;   // 6/pi^2
    double pair_target = 0.0;         // proven lower bound for the family
    double theta_target = 0.0;        // observed 0.553
    double runtime_seconds = 0.0;     // never serialized; reproducibility

    Rational param_density() const;
    Rational pair_density() const;
    Rational theta_fraction() const;  // over irreducible instances
};

/* counts b in [lo, hi) with b square-free and 256-27b square-free; with
   certificates enabled, also certifies x^4+bx+b per parameter and runs
   the index oracle at every prime whose square divides the discriminant */
DensityReport family_density_f(const SieveRange& r,
                               const DensityOptions& opt = {});

/* same over d for x^4+x^3+d with cofactor 256d-27 */
DensityReport family_density_g(const SieveRange& r,
                               const DensityOptions& opt = {});

/* fraction of irreducible instances where theta generates the whole ring
   of integers; family is 'f' or 'g'. reducible parameters are counted
   separately and excluded from the fraction. */
DensityReport theta_generates_scan(const SieveRange& r, char family,
                                   const DensityOptions& opt = {});

/* true iff the instance polynomial is irreducible and Z[theta] is
   p-maximal at every prime p with p^2 | disc; irreducible reports which */
bool theta_instance(char family, const BigInt& param, bool& irreducible,
                    std::uint64_t seed = 0);

struct PracharReport {
    BigInt m, k, x;
    long long total = 0;       // integers 1 <= n <= x with n = m (mod k)
    long long squarefree = 0;
    double target = 0.0;       // (6/pi^2) * prod_{p|k} (1 - 1/p^2)^-1
    double runtime_seconds = 0.0;

    Rational empirical() const;
};

/* density of square-free integers in the class m mod k up to x.
   requires gcd(m, k) = 1 (invalid_argument otherwise); k = 1 means no
   congruence condition. */
PracharReport prachar_check(const BigInt& m, const BigInt& k, const BigInt& x,
                            const DensityOptions& opt = {});

/* exact rational rendered with 15 significant digits (display only) */
std::string render_density(const Rational& q);
std::string render_target(double t);

std::string to_json(const DensityReport& r);
std::string to_csv(const DensityReport& r);    // header line + one data row
std::string to_json(const PracharReport& r);
std::string to_csv(const PracharReport& r);

/* splits [lo, hi) into at most `threads` contiguous chunks, evaluates
   fn(chunk_lo, chunk_hi) possibly concurrently, and returns the results
   in ascending chunk order so merges are deterministic */
template <typename R, typename Fn>
std::vector<R> parallel_chunks(long long lo, long long hi, int threads,
                               Fn fn) {
    std::vector<R> results;
    if (hi <= lo) return results;
    long long n = hi - lo;
    if (threads < 1) threads = 1;
    long long chunks = threads;
    if (chunks > n) chunks = n;
    results.resize(static_cast<std::size_t>(chunks));
    if (chunks == 1) {
        results[0] = fn(lo, hi);
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(chunks));
    long long step = n / chunks;
    long long extra = n % chunks;
    long long start = lo;
    for (long long i = 0; i < chunks; ++i) {
        long long len = step + (i < extra ? 1 : 0);
        long long a = start;
        long long b = start + len;
        start = b;
        pool.emplace_back(
            [&results, i, a, b, &fn]() { results[static_cast<std::size_t>(i)] = fn(a, b); });
    }
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace monoquart

#endif
