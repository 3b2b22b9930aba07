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

#include "monoquart/density.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "monoquart/families.hpp"
#include "monoquart/montes.hpp"
#include "monoquart/quartic.hpp"

namespace monoquart {

namespace {

using i128 = __int128;

struct RangeLL {
    long long lo, hi;
    std::size_t segment;
};

BigInt big_ll(long long v) { return BigInt(static_cast<long>(v)); }

RangeLL checked_range(const SieveRange& r) {
    if (!fits_slong(r.lo) || !fits_slong(r.hi))
        throw std::invalid_argument("sieve range bounds must fit 64 bits");
    RangeLL out{to_slong(r.lo), to_slong(r.hi),
                r.segment_size ? r.segment_size : (std::size_t{1} << 20)};
    if (out.lo >= out.hi)
        throw std::invalid_argument("sieve range requires lo < hi");
    return out;
}

long long inv_mod_ll(long long a, long long m) {
    long long r0 = m, r1 = ((a % m) + m) % m;
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long t2 = static_cast<long long>(t0 - static_cast<i128>(q) * t1);
        t0 = t1;
        t1 = t2;
        long long r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
    }
    return ((t0 % m) + m) % m;
}

double pi_sq() { return M_PI * M_PI; }

std::chrono::steady_clock::time_point now() {
    return std::chrono::steady_clock::now();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(now() - t0).count();
}

}  // namespace

std::vector<bool> linear_squarefree_sieve(const SieveRange& r, long long mult,
                                          long long add) {
    if (mult == 0)
        throw std::invalid_argument("linear sieve requires a nonzero slope");
    RangeLL rr = checked_range(r);
    const long long n = rr.hi - rr.lo;
    std::vector<bool> res(static_cast<std::size_t>(n), true);

    i128 v_lo = static_cast<i128>(mult) * rr.lo + add;
    i128 v_hi = static_cast<i128>(mult) * (rr.hi - 1) + add;
    i128 maxabs = v_lo < 0 ? -v_lo : v_lo;
    i128 other = v_hi < 0 ? -v_hi : v_hi;
    if (other > maxabs) maxabs = other;
    if (maxabs > static_cast<i128>(1000000) * 1000000)
        throw std::invalid_argument(
            "sieve values exceed 1e12; enlarge the prime table to go further");

    /* per prime p: positions n with mult*n + add = 0 (mod p^2) form an
       arithmetic progression (or everything, or nothing) */
    struct Mark {
        long long stride;
        long long next;  // index into the bitmap
    };
    std::vector<Mark> marks;
    bool mark_everything = false;
    for (uint32_t p : small_prime_table()) {
        long long q = static_cast<long long>(p) * p;
        if (static_cast<i128>(q) > maxabs) break;
        long long a = ((mult % q) + q) % q;
        long long negb = (((-add) % q) + q) % q;
        long long g = std::gcd(a, q);
        if (negb % g != 0) continue;
        long long qq = q / g;
        if (qq == 1) {
            mark_everything = true;  // q divides every value
            break;
        }
        long long inv = inv_mod_ll(a / g, qq);
        long long n0 =
            static_cast<long long>(static_cast<i128>(negb / g) * inv % qq);
        long long first =
            static_cast<long long>((((static_cast<i128>(n0) - rr.lo) % qq) + qq) % qq);
        if (first < n) marks.push_back({qq, first});
    }

    if (mark_everything) {
        std::fill(res.begin(), res.end(), false);
        return res;
    }

    const long long seg = static_cast<long long>(rr.segment);
    for (long long base = 0; base < n; base += seg) {
        long long end = std::min(n, base + seg);
        for (Mark& m : marks)
            for (; m.next < end; m.next += m.stride)
                res[static_cast<std::size_t>(m.next)] = false;
    }

    if ((-add) % mult == 0) {
        long long zero = -add / mult;
        if (zero >= rr.lo && zero < rr.hi)
            res[static_cast<std::size_t>(zero - rr.lo)] = false;
    }
    return res;
}

std::vector<bool> squarefree_sieve(const SieveRange& r) {
    return linear_squarefree_sieve(r, 1, 0);
}

Rational DensityReport::param_density() const {
    if (counts.total == 0) return Rational(0);
    return make_rational(big_ll(counts.param_squarefree), big_ll(counts.total));
}

Rational DensityReport::pair_density() const {
    if (counts.total == 0) return Rational(0);
    return make_rational(big_ll(counts.pair_squarefree), big_ll(counts.total));
}

Rational DensityReport::theta_fraction() const {
    long long fields = counts.total - counts.reducible;
    if (fields <= 0) return Rational(0);
    return make_rational(big_ll(counts.theta_generates), big_ll(fields));
}

Rational PracharReport::empirical() const {
    if (total == 0) return Rational(0);
    return make_rational(big_ll(squarefree), big_ll(total));
}

namespace {

/* primes that can obstruct maximality: p | param (p^2 divides the
   discriminant through the param power) and p with p^2 | cofactor.
   cof_hint: 1 = cofactor known square-free, 0 = known not, -1 = unknown. */
bool theta_maximal_impl(char family, long long n, bool& irreducible,
                        std::uint64_t seed, int cof_hint) {
    irreducible = false;
    if (n == 0) return false;
    BigInt nb = big_ll(n);
    QuarticShape shape =
        family == 'f' ? QuarticShape{BigInt(0), BigInt(0), nb, nb}
                      : QuarticShape{BigInt(1), BigInt(0), BigInt(0), nb};
    if (!is_irreducible_quartic(shape)) return false;
    irreducible = true;
    IntPoly poly = quartic_poly(shape);

    std::vector<BigInt> candidates;
    Factorization nf = factor_int(nb);
    for (const auto& [p, e] : nf.primes) {
        (void)e;
        candidates.push_back(p);
    }
    if (cof_hint != 1) {
        long long cof = family == 'f' ? 256 - 27 * n
                                      : 256 * n - 27;
        Factorization cf = factor_int(big_ll(cof));
        for (const auto& [p, e] : cf.primes) {
            if (e < 2) continue;
            if (std::find(candidates.begin(), candidates.end(), p) ==
                candidates.end())
                candidates.push_back(p);
        }
    }
    for (const BigInt& p : candidates)
        if (!dedekind_test(poly, p, seed)) return false;
    return true;
}

void fill_targets(DensityReport& rep, char family) {
    rep.squarefree_target = 6.0 / pi_sq();
    rep.pair_target = family == 'f' ? (51.0 - 4.0 * pi_sq()) / (4.0 * pi_sq())
                                    : (14.0 - pi_sq()) / pi_sq();
    rep.theta_target = 0.553;
}

DensityReport run_family(const SieveRange& r, char family, bool theta_always,
                         const DensityOptions& opt) {
    auto t0 = now();
    DensityReport rep;
    rep.kind = theta_always ? "theta_scan" : "family_density";
    rep.family = std::string(1, family);
    rep.range = r;
    rep.range.segment_size = opt.segment_size ? opt.segment_size
                                              : (std::size_t{1} << 20);
    rep.seed = opt.seed;
    fill_targets(rep, family);

    RangeLL rr = checked_range(rep.range);
    std::vector<bool> param_sf = squarefree_sieve(rep.range);
    long long mult = family == 'f' ? -27 : 256;
    long long add = family == 'f' ? 256 : -27;
    std::vector<bool> cof_sf = linear_squarefree_sieve(rep.range, mult, add);

    rep.counts.total = rr.hi - rr.lo;
    for (std::size_t i = 0; i < param_sf.size(); ++i) {
        if (param_sf[i]) {
            ++rep.counts.param_squarefree;
            if (cof_sf[i]) ++rep.counts.pair_squarefree;
        }
    }

    rep.has_theta = theta_always || opt.with_certificates;
    rep.has_certificates = opt.with_certificates;
    if (rep.has_theta || rep.has_certificates) {
        auto chunk = [&](long long a, long long b) {
            DensityCounts c{};
            for (long long n = a; n < b; ++n) {
                if (rep.has_theta) {
                    bool irr = false;
                    int hint = cof_sf[static_cast<std::size_t>(n - rr.lo)] ? 1 : 0;
                    bool gen = theta_maximal_impl(family, n, irr, opt.seed, hint);
                    if (!irr)
                        ++c.reducible;
                    else if (gen)
                        ++c.theta_generates;
                }
                if (rep.has_certificates) {
                    Certificate cert = family == 'f'
                                           ? check_f_bb(big_ll(n), opt.seed)
                                           : check_g_1d(big_ll(n), opt.seed);
                    if (cert.monogenic()) ++c.certified_monogenic;
                }
            }
            return c;
        };
        std::vector<DensityCounts> parts =
            parallel_chunks<DensityCounts>(rr.lo, rr.hi, opt.threads, chunk);
        for (const DensityCounts& c : parts) {
            rep.counts.certified_monogenic += c.certified_monogenic;
            rep.counts.theta_generates += c.theta_generates;
            rep.counts.reducible += c.reducible;
        }
    }
    rep.runtime_seconds = seconds_since(t0);
    return rep;
}

}  // namespace

DensityReport family_density_f(const SieveRange& r, const DensityOptions& opt) {
    return run_family(r, 'f', false, opt);
}

DensityReport family_density_g(const SieveRange& r, const DensityOptions& opt) {
    return run_family(r, 'g', false, opt);
}

DensityReport theta_generates_scan(const SieveRange& r, char family,
                                   const DensityOptions& opt) {
    if (family != 'f' && family != 'g')
        throw std::invalid_argument("family must be 'f' or 'g'");
    return run_family(r, family, true, opt);
}

bool theta_instance(char family, const BigInt& param, bool& irreducible,
                    std::uint64_t seed) {
    if (family != 'f' && family != 'g')
        throw std::invalid_argument("family must be 'f' or 'g'");
    if (!fits_slong(param))
        throw std::invalid_argument("parameter must fit 64 bits");
    return theta_maximal_impl(family, to_slong(param), irreducible, seed, -1);
}

PracharReport prachar_check(const BigInt& m, const BigInt& k, const BigInt& x,
                            const DensityOptions& opt) {
    auto t0 = now();
    if (k < 1) throw std::invalid_argument("modulus k must be positive");
    if (x < 1) throw std::invalid_argument("bound x must be positive");
    if (gcd(m, k) != 1)
        throw std::invalid_argument("prachar densities require gcd(m, k) = 1");
    if (!fits_slong(k) || !fits_slong(x))
        throw std::invalid_argument("k and x must fit 64 bits");

    PracharReport rep;
    rep.m = m;
    rep.k = k;
    rep.x = x;

    long long kl = to_slong(k);
    long long xl = to_slong(x);
    BigInt m0b = m % k;
    if (m0b < 0) m0b += k;
    long long m0 = to_slong(m0b);

    /* terms n = m0 + k*t with 1 <= n <= x; m0 = 0 only when k = 1 */
    long long t_lo = m0 >= 1 ? 0 : 1;
    long long t_hi = (xl - m0) / kl + 1;
    if (t_hi > t_lo) {
        SieveRange tr{big_ll(t_lo), big_ll(t_hi),
                      opt.segment_size ? opt.segment_size : (std::size_t{1} << 20)};
        std::vector<bool> sf = linear_squarefree_sieve(tr, kl, m0);
        rep.total = t_hi - t_lo;
        rep.squarefree = std::count(sf.begin(), sf.end(), true);
    }

    double target = 6.0 / pi_sq();
    if (k > 1) {
        Factorization kf = factor_int(k);
        for (const auto& [p, e] : kf.primes) {
            (void)e;
            double pd = p.get_d();
            target *= pd * pd / (pd * pd - 1.0);
        }
    }
    rep.target = target;
    rep.runtime_seconds = seconds_since(t0);
    return rep;
}

std::string render_density(const Rational& q) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", q.get_d());
    return buf;
}

std::string render_target(double t) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", t);
    return buf;
}

namespace {

using nlohmann::json;

json opt_count(bool present, long long v) {
    return present ? json(v) : json(nullptr);
}

}  // namespace

std::string to_json(const DensityReport& r) {
    json j;
    j["schema"] = "monoquart.density/1";
    j["kind"] = r.kind;
    j["family"] = r.family;
    j["range"] = {{"lo", r.range.lo.get_str()},
                  {"hi", r.range.hi.get_str()},
                  {"segment_size", r.range.segment_size}};
    j["seed"] = std::to_string(r.seed);
    json c;
    c["total"] = r.counts.total;
    c["param_squarefree"] = r.counts.param_squarefree;
    c["pair_squarefree"] = r.counts.pair_squarefree;
    c["certified_monogenic"] =
        opt_count(r.has_certificates, r.counts.certified_monogenic);
    c["theta_generates"] = opt_count(r.has_theta, r.counts.theta_generates);
    c["reducible"] = opt_count(r.has_theta, r.counts.reducible);
    j["counts"] = std::move(c);
    json d;
    d["param"] = render_density(r.param_density());
    d["pair"] = render_density(r.pair_density());
    d["theta_fraction"] =
        r.has_theta ? json(render_density(r.theta_fraction())) : json(nullptr);
    j["densities"] = std::move(d);
    json t;
    t["squarefree"] = render_target(r.squarefree_target);
    t["pair"] = render_target(r.pair_target);
    t["theta"] = render_target(r.theta_target);
    j["targets"] = std::move(t);
    return j.dump(2) + "\n";
}

std::string to_csv(const DensityReport& r) {
    std::ostringstream out;
    out << "kind,family,lo,hi,total,param_squarefree,pair_squarefree,"
           "certified_monogenic,theta_generates,reducible,param_density,"
           "pair_density,theta_fraction,squarefree_target,pair_target,"
           "theta_target\n";
    out << r.kind << ',' << r.family << ',' << r.range.lo.get_str() << ','
        << r.range.hi.get_str() << ',' << r.counts.total << ','
        << r.counts.param_squarefree << ',' << r.counts.pair_squarefree << ',';
    if (r.has_certificates) out << r.counts.certified_monogenic;
    out << ',';
    if (r.has_theta) out << r.counts.theta_generates;
    out << ',';
    if (r.has_theta) out << r.counts.reducible;
    out << ',' << render_density(r.param_density()) << ','
        << render_density(r.pair_density()) << ',';
    if (r.has_theta) out << render_density(r.theta_fraction());
    out << ',' << render_target(r.squarefree_target) << ','
        << render_target(r.pair_target) << ',' << render_target(r.theta_target)
        << '\n';
    return out.str();
}

std::string to_json(const PracharReport& r) {
    json j;
    j["schema"] = "monoquart.density/1";
    j["kind"] = "prachar";
    j["m"] = r.m.get_str();
    j["k"] = r.k.get_str();
    j["x"] = r.x.get_str();
    j["total"] = r.total;
    j["squarefree"] = r.squarefree;
    j["empirical"] = render_density(r.empirical());
    j["target"] = render_target(r.target);
    return j.dump(2) + "\n";
}

std::string to_csv(const PracharReport& r) {
    std::ostringstream out;
    out << "kind,m,k,x,total,squarefree,empirical,target\n";
    out << "prachar," << r.m.get_str() << ',' << r.k.get_str() << ','
        << r.x.get_str() << ',' << r.total << ',' << r.squarefree << ','
        << render_density(r.empirical()) << ',' << render_target(r.target)
        << '\n';
    return out.str();
}

}  // namespace monoquart
