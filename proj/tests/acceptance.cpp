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

/* acceptance suite: ten end-to-end checks with pinned tolerances.
   prints one line per criterion; exits 0 iff every selected criterion
   passes. pass criterion ids as arguments to run a subset (debugging). */

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "monoquart/bigint.hpp"
#include "monoquart/density.hpp"
#include "monoquart/families.hpp"
#include "monoquart/intpoly.hpp"
#include "monoquart/montes.hpp"
#include "monoquart/quartic.hpp"

using namespace monoquart;

namespace {

// pinned tolerances and sweep sizes
constexpr double kWorkedExampleMaxMs = 1.0;
constexpr int kDevelopmentSamples = 100;
constexpr long kSoundnessSweep = 10000;     // |b|, |d| bound
constexpr long kGaloisSweep = 1000;
constexpr int kResolventSamples = 10000;
constexpr long kResolventCoeffBound = 50;
constexpr long kDensityHi = 1000000;
constexpr double kPairLowerBoundF = 0.29;
constexpr double kPairLowerBoundG = 0.41;
constexpr long kPracharX = 10000000;
constexpr double kPracharTol = 0.005;
constexpr long kThetaHi = 100000;
constexpr long kThetaFullHi = 2500000;      // enabled by MQ_FULL_SCAN=1
constexpr double kThetaFraction = 0.553;
constexpr double kThetaTol = 0.020;
constexpr long kOracleCoeffBound = 30;
constexpr int kPrimeCaseSamples = 200;

std::mt19937_64 acc_rng(0xacce97ed);

long rnd(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(acc_rng);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

IntPoly poly_from(const std::vector<long>& coeffs_low_to_high) {
    std::vector<BigInt> v;
    v.reserve(coeffs_low_to_high.size());
    for (long c : coeffs_low_to_high) v.push_back(BigInt(c));
    return IntPoly(v);
}

bool side_is(const Side& s, long x0, long y0, long x1, long y1) {
    return s.start.x == x0 && s.start.y == y0 && s.end.x == x1 &&
           s.end.y == y1;
}

/* the shape every one-sided case must produce: a single repeated factor
   whose polygon is one side from (0,1) to (deg,0); everything separable,
   index contribution zero, report exact */
bool one_sided_report(const IndexReport& rep, long deg, std::string& why) {
    const IndexFactorEntry* main_factor = nullptr;
    for (const auto& fac : rep.factors) {
        if (fac.multiplicity == 1) {
            if (!fac.simple_shortcut) {
                why = "multiplicity-1 factor missing the shortcut";
                return false;
            }
            continue;
        }
        if (main_factor) {
            why = "more than one repeated factor";
            return false;
        }
        main_factor = &fac;
    }
    if (!main_factor) {
        why = "no repeated factor";
        return false;
    }
    if (main_factor->multiplicity != deg) {
        why = "repeated factor has multiplicity " +
              std::to_string(main_factor->multiplicity);
        return false;
    }
    if (!main_factor->polygon || main_factor->polygon->principal.size() != 1) {
        why = "polygon is not one-sided";
        return false;
    }
    if (!side_is(main_factor->polygon->principal[0], 0, 1, deg, 0)) {
        why = "side is not (0,1)->(" + std::to_string(deg) + ",0)";
        return false;
    }
    if (!main_factor->separable) {
        why = "residual polynomial not separable";
        return false;
    }
    if (main_factor->ind != 0 || rep.lower_bound != 0 || !rep.exact) {
        why = "index contribution is not an exact zero";
        return false;
    }
    return true;
}

// criterion 1: the sextic polygon with vertices (0,3),(1,2),(4,0), index 3
bool criterion_worked_example(std::string& detail) {
    IntPoly f = poly_from({27, 18, 9, 15, 1, 3, 1});
    IntPoly phi = poly_from({0, 1});
    BigInt p(3);

    NewtonPolygon ng = newton_polygon(phi_development(f, phi), p);
    if (ng.principal.size() != 2) {
        detail = "expected 2 principal sides, got " +
                 std::to_string(ng.principal.size());
        return false;
    }
    if (!side_is(ng.principal[0], 0, 3, 1, 2) ||
        !side_is(ng.principal[1], 1, 2, 4, 0)) {
        detail = "principal vertices are not (0,3),(1,2),(4,0)";
        return false;
    }
    long ind = ind_phi(ng);
    if (ind != 3) {
        detail = "ind " + std::to_string(ind) + ", expected 3";
        return false;
    }
    IndexReport rep = index_report(f, p);
    if (!rep.exact || rep.lower_bound != 3) {
        detail = "full report not exact at 3";
        return false;
    }

    // timing: warm-up above, then best of 5 full recomputations
    double best_ms = 1e9;
    for (int i = 0; i < 5; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        NewtonPolygon ng2 = newton_polygon(phi_development(f, phi), p);
        long ind2 = ind_phi(ng2);
        double ms = seconds_since(t0) * 1000.0;
        if (ind2 != 3) {
            detail = "recomputation disagreed";
            return false;
        }
        if (ms < best_ms) best_ms = ms;
    }
    std::ostringstream out;
    out << "vertices (0,3),(1,2),(4,0), ind 3, best " << best_ms << " ms";
    detail = out.str();
    return best_ms < kWorkedExampleMaxMs;
}

// criterion 2: closed-form developments at x+1 and x-1
bool criterion_developments(std::string& detail) {
    for (int i = 0; i < kDevelopmentSamples; ++i) {
        long a = rnd(-1000000, 1000000), b = rnd(-1000000, 1000000);
        IntPoly f = poly_from({b, a, 0, 0, 1});
        PhiDevelopment dev = phi_development(f, poly_from({1, 1}));
        std::vector<long> want = {b - a + 1, a - 4, 6, -4, 1};
        if (dev.coeffs.size() != 5) {
            detail = "x+1 development has wrong length";
            return false;
        }
        for (int k = 0; k < 5; ++k)
            if (dev.coeffs[k] != IntPoly(BigInt(want[k]))) {
                detail = "x+1 development coefficient " + std::to_string(k) +
                         " mismatch at a=" + std::to_string(a) +
                         " b=" + std::to_string(b);
                return false;
            }

        long c = rnd(-1000000, 1000000), d = rnd(-1000000, 1000000);
        IntPoly g = poly_from({d, 0, 0, c, 1});
        PhiDevelopment devg = phi_development(g, poly_from({-1, 1}));
        std::vector<long> wantg = {c + d + 1, 3 * c + 4, 3 * c + 6, c + 4, 1};
        if (devg.coeffs.size() != 5) {
            detail = "x-1 development has wrong length";
            return false;
        }
        for (int k = 0; k < 5; ++k)
            if (devg.coeffs[k] != IntPoly(BigInt(wantg[k]))) {
                detail = "x-1 development coefficient " + std::to_string(k) +
                         " mismatch at c=" + std::to_string(c) +
                         " d=" + std::to_string(d);
                return false;
            }
    }
    detail = std::to_string(kDevelopmentSamples) +
             " samples per family, coefficients exact";
    return true;
}

/* criterion 3: every certified parameter in [-10^4, 10^4] passes the
   independent criterion at every prime whose square divides the
   discriminant. discriminants are factored through their closed forms
   b^3(256-27b) and d^2(256d-27) to keep the factor sizes small. */
bool criterion_soundness(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    long certified = 0, checks = 0, disagreements = 0, formula_checks = 0;
    for (int fam = 0; fam < 2; ++fam) {
        for (long n = -kSoundnessSweep; n <= kSoundnessSweep; ++n) {
            Certificate cert = fam == 0 ? check_f_bb(BigInt(n))
                                        : check_g_1d(BigInt(n));
            if (!cert.monogenic()) continue;
            ++certified;

            long param_exp = fam == 0 ? 3 : 2;
            long long cof = fam == 0 ? 256 - 27 * n : 256 * n - 27;
            std::map<long long, long> exps;
            for (const auto& [p, e] : factor_int(BigInt(n)).primes)
                exps[to_slong(p)] += param_exp * e;
            for (const auto& [p, e] :
                 factor_int(BigInt(static_cast<long>(cof))).primes)
                exps[to_slong(p)] += e;

            // spot-check the closed form against the generic discriminant
            if (n % 997 == 0) {
                BigInt disc = discriminant(cert.poly);
                BigInt want = fam == 0
                                  ? BigInt(BigInt(n) * BigInt(n) * BigInt(n) *
                                           BigInt(static_cast<long>(cof)))
                                  : BigInt(BigInt(n) * BigInt(n) *
                                           BigInt(static_cast<long>(cof)));
                if (disc != want) {
                    detail = "closed-form discriminant mismatch at n=" +
                             std::to_string(n);
                    return false;
                }
                ++formula_checks;
            }

            for (const auto& [p, e] : exps) {
                if (e < 2) continue;
                ++checks;
                if (!dedekind_test(cert.poly, BigInt(static_cast<long>(p))))
                    ++disagreements;
            }
        }
    }
    std::ostringstream out;
    out << certified << " certified, " << checks << " prime checks, "
        << disagreements << " disagreements, " << formula_checks
        << " formula spot-checks, " << seconds_since(t0) << " s";
    detail = out.str();
    return disagreements == 0 && certified > 0;
}

// criterion 4: certified parameters have group S4; b in {3,5} give
// reducible resolvent cubics
bool criterion_galois(std::string& detail) {
    long s4_f = 0, s4_g = 0;
    for (long n = -kGaloisSweep; n <= kGaloisSweep; ++n) {
        Certificate cf = check_f_bb(BigInt(n));
        if (cf.monogenic()) {
            if (!cf.galois || cf.galois->group != GaloisGroup::S4) {
                detail = "b=" + std::to_string(n) + " certified but not S4";
                return false;
            }
            ++s4_f;
        }
        Certificate cg = check_g_1d(BigInt(n));
        if (cg.monogenic()) {
            if (!cg.galois || cg.galois->group != GaloisGroup::S4) {
                detail = "d=" + std::to_string(n) + " certified but not S4";
                return false;
            }
            ++s4_g;
        }
    }
    for (long b : {3L, 5L}) {
        GaloisReport rep = galois_group(
            QuarticShape{BigInt(0), BigInt(0), BigInt(b), BigInt(b)});
        if (rep.resolvent_irreducible) {
            detail = "b=" + std::to_string(b) +
                     " should have a reducible resolvent";
            return false;
        }
    }
    std::ostringstream out;
    out << s4_f << " f-family and " << s4_g
        << " g-family certificates, all S4; b=3,5 resolvents reducible";
    detail = out.str();
    return s4_f > 0 && s4_g > 0;
}

// criterion 5: disc(resolvent) = disc(quartic), plus the d^2(256d-27)
// specialization for x^4+x^3+d
bool criterion_resolvent_disc(std::string& detail) {
    for (int i = 0; i < kResolventSamples; ++i) {
        QuarticShape q{BigInt(rnd(-kResolventCoeffBound, kResolventCoeffBound)),
                       BigInt(rnd(-kResolventCoeffBound, kResolventCoeffBound)),
                       BigInt(rnd(-kResolventCoeffBound, kResolventCoeffBound)),
                       BigInt(rnd(-kResolventCoeffBound, kResolventCoeffBound))};
        if (discriminant(resolvent_cubic(q)) != discriminant(quartic_poly(q))) {
            detail = "disc mismatch at sample " + std::to_string(i);
            return false;
        }
    }
    for (int i = 0; i < kResolventSamples; ++i) {
        long d = rnd(-100000, 100000);
        QuarticShape q{BigInt(1), BigInt(0), BigInt(0), BigInt(d)};
        IntPoly res = resolvent_cubic(q);
        if (res != poly_from({-d, -4 * d, 0, 1})) {
            detail = "resolvent of x^4+x^3+d is not y^3-4dy-d";
            return false;
        }
        BigInt want = BigInt(d) * BigInt(d) * BigInt(256 * d - 27);
        if (discriminant(res) != want) {
            detail = "specialized discriminant mismatch at d=" +
                     std::to_string(d);
            return false;
        }
    }
    detail = std::to_string(kResolventSamples) +
             " random quartics and specializations, all exact";
    return true;
}

// criterion 6: pair square-free fractions over [1, 10^6]
bool criterion_density_bounds(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    DensityReport rf = family_density_f({1, kDensityHi + 1});
    DensityReport rg = family_density_g({1, kDensityHi + 1});
    double df = rf.pair_density().get_d();
    double dg = rg.pair_density().get_d();
    std::ostringstream out;
    out << "f pair density " << df << " (>= " << kPairLowerBoundF << "), "
        << "g pair density " << dg << " (>= " << kPairLowerBoundG << "), "
        << seconds_since(t0) << " s";
    detail = out.str();
    return df >= kPairLowerBoundF && dg >= kPairLowerBoundG;
}

// criterion 7: square-free density in arithmetic progressions at 10^7
bool criterion_prachar(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    PracharReport r1 = prachar_check(13, 27, kPracharX);
    PracharReport r2 = prachar_check(27, 256, kPracharX);
    double t1 = 27.0 / (4.0 * M_PI * M_PI);
    double t2 = 8.0 / (M_PI * M_PI);
    double d1 = std::abs(r1.empirical().get_d() - t1);
    double d2 = std::abs(r2.empirical().get_d() - t2);
    std::ostringstream out;
    out << "13 mod 27: |" << r1.empirical().get_d() << " - " << t1 << "| = "
        << d1 << "; 27 mod 256: |" << r2.empirical().get_d() << " - " << t2
        << "| = " << d2 << "; tol " << kPracharTol << ", "
        << seconds_since(t0) << " s";
    detail = out.str();
    return d1 <= kPracharTol && d2 <= kPracharTol;
}

// criterion 8: fraction of irreducible instances whose root generates the
// maximal order, both families
bool criterion_theta_rate(std::string& detail) {
    long hi = kThetaHi;
    const char* env = std::getenv("MQ_FULL_SCAN");
    bool full = env && std::strcmp(env, "1") == 0;
    if (full) hi = kThetaFullHi;
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream out;
    bool ok = true;
    for (char fam : {'f', 'g'}) {
        DensityReport r = theta_generates_scan(
            {BigInt(-hi), BigInt(hi + 1)}, fam);
        double frac = r.theta_fraction().get_d();
        double dev = std::abs(frac - kThetaFraction);
        out << fam << ": " << frac << " (|dev| " << dev << "), ";
        if (dev > kThetaTol) ok = false;
    }
    out << "tol " << kThetaTol << ", range +-" << hi << ", "
        << seconds_since(t0) << " s";
    detail = out.str();
    return ok;
}

/* criterion 9: exhaustive oracle equivalence. for every monic irreducible
   cubic and quartic with coefficients in [-30, 30] and every p in
   {2,3,5,7}: whenever the polygon report is exact, lower_bound = 0 must
   coincide with the independent criterion. */
bool criterion_oracle_equivalence(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    const long B = kOracleCoeffBound;
    const long primes[4] = {2, 3, 5, 7};
    long long irreducible_polys = 0, pairs = 0, exact_pairs = 0,
              disagreements = 0;

    auto run_poly = [&](const IntPoly& f) {
        ++irreducible_polys;
        for (long p : primes) {
            ++pairs;
            IndexReport rep = index_report(f, BigInt(p));
            if (!rep.exact) continue;
            ++exact_pairs;
            bool maximal = rep.lower_bound == 0;
            if (maximal != dedekind_test(f, BigInt(p))) {
                ++disagreements;
                if (disagreements == 1)
                    detail = "first disagreement: " + to_string(f) + " at p=" +
                             std::to_string(p);
            }
        }
    };

    // cubics: monic, irreducible iff no integer root
    for (long c2 = -B; c2 <= B; ++c2)
        for (long c1 = -B; c1 <= B; ++c1)
            for (long c0 = -B; c0 <= B; ++c0) {
                if (c0 == 0) continue;  // root 0
                bool has_root = false;
                for (long r = -B - 1; r <= B + 1 && !has_root; ++r) {
                    if (r == 0 || c0 % r != 0) continue;
                    if (((r + c2) * r + c1) * r + c0 == 0) has_root = true;
                }
                if (has_root) continue;
                run_poly(poly_from({c0, c1, c2, 1}));
            }
    long long cubics = irreducible_polys;

    // quartics: monic, the library decides irreducibility
    for (long a3 = -B; a3 <= B; ++a3)
        for (long a2 = -B; a2 <= B; ++a2)
            for (long a1 = -B; a1 <= B; ++a1)
                for (long a0 = -B; a0 <= B; ++a0) {
                    QuarticShape q{BigInt(a3), BigInt(a2), BigInt(a1),
                                   BigInt(a0)};
                    if (!is_irreducible_quartic(q)) continue;
                    run_poly(poly_from({a0, a1, a2, a3, 1}));
                }

    std::ostringstream out;
    out << cubics << " cubics + " << (irreducible_polys - cubics)
        << " quartics, " << pairs << " prime pairs (" << exact_pairs
        << " exact), " << disagreements << " disagreements, "
        << seconds_since(t0) << " s";
    if (disagreements == 0) detail = out.str();
    return disagreements == 0;
}

// criterion 10: randomized instances of every certified prime case give
// the expected polygon shapes with zero exact index
bool criterion_prime_cases(std::string& detail) {
    static const long small_primes[6] = {2, 3, 5, 7, 11, 13};
    static const long mod9_pairs[12][2] = {{1, 3}, {1, 6}, {2, 0}, {2, 3},
                                           {4, 0}, {4, 6}, {5, 0}, {5, 6},
                                           {7, 0}, {7, 3}, {8, 3}, {8, 6}};
    long checked = 0;
    std::string why;

    auto fail = [&](const char* label, const IntPoly& f, long p) {
        detail = std::string(label) + " shape violated for " + to_string(f) +
                 " at p=" + std::to_string(p) + ": " + why;
        return false;
    };

    for (int i = 0; i < kPrimeCaseSamples; ++i) {
        // x^4+ax+b with p | a, p || b: one side (0,1)->(4,0)
        long p = small_primes[rnd(0, 5)];
        long s = rnd(-60, 60);
        while (s == 0 || s % p == 0) s = rnd(-60, 60);
        IntPoly f = poly_from({p * s, p * rnd(-60, 60), 0, 0, 1});
        IndexReport rep = index_report(f, BigInt(p));
        if (!one_sided_report(rep, 4, why)) return fail("eisenstein-f", f, p);
        ++checked;

        // x^4+ax+b with (a,b) = (0,1) or (2,3) mod 4: one side at p = 2
        long r4 = rnd(-60, 60), s4 = rnd(-60, 60);
        IntPoly f2 = rnd(0, 1) == 0
                         ? poly_from({4 * s4 + 1, 4 * r4, 0, 0, 1})
                         : poly_from({4 * s4 + 3, 4 * r4 + 2, 0, 0, 1});
        rep = index_report(f2, BigInt(2));
        if (!one_sided_report(rep, 4, why)) return fail("congruence-f", f2, 2);
        ++checked;

        // x^4+ax+b in one of the twelve classes mod 9: x splits off and
        // the cubed factor is one-sided (0,1)->(3,0) at p = 3
        const long* pair = mod9_pairs[rnd(0, 11)];
        IntPoly f3 = poly_from(
            {pair[1] + 9 * rnd(-30, 30), pair[0] + 9 * rnd(-30, 30), 0, 0, 1});
        rep = index_report(f3, BigInt(3));
        if (!one_sided_report(rep, 3, why)) return fail("mod9-f", f3, 3);
        if (rep.factors.size() != 2) {
            why = "expected exactly two factors";
            return fail("mod9-f", f3, 3);
        }
        ++checked;

        // x^4+cx^3+d with p | c, p || d: one side (0,1)->(4,0)
        p = small_primes[rnd(0, 5)];
        s = rnd(-60, 60);
        while (s == 0 || s % p == 0) s = rnd(-60, 60);
        IntPoly g = poly_from({p * s, 0, 0, p * rnd(-60, 60), 1});
        rep = index_report(g, BigInt(p));
        if (!one_sided_report(rep, 4, why)) return fail("eisenstein-g", g, p);
        ++checked;

        // x^4+cx^3+d with p | d, p does not divide c: x^3 side plus a
        // simple factor
        p = small_primes[rnd(0, 5)];
        s = rnd(-60, 60);
        while (s == 0 || s % p == 0) s = rnd(-60, 60);
        long c = rnd(-60, 60);
        while (c % p == 0) c = rnd(-60, 60);
        IntPoly g2 = poly_from({p * s, 0, 0, c, 1});
        rep = index_report(g2, BigInt(p));
        if (!one_sided_report(rep, 3, why)) return fail("split-g", g2, p);
        if (rep.factors.size() != 2) {
            why = "expected exactly two factors";
            return fail("split-g", g2, p);
        }
        ++checked;

        // x^4+cx^3+d with (c,d) = (0,1) or (2,3) mod 4 at p = 2
        r4 = rnd(-60, 60);
        s4 = rnd(-60, 60);
        IntPoly g3 = rnd(0, 1) == 0
                         ? poly_from({4 * s4 + 1, 0, 0, 4 * r4, 1})
                         : poly_from({4 * s4 + 3, 0, 0, 4 * r4 + 2, 1});
        rep = index_report(g3, BigInt(2));
        if (!one_sided_report(rep, 4, why)) return fail("congruence-g", g3, 2);
        ++checked;
    }
    detail = std::to_string(checked) +
             " randomized instances over six case families, all exact zeros";
    return true;
}

struct Criterion {
    int id;
    const char* name;
    bool (*fn)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "worked-example-polygon", criterion_worked_example},
    {2, "phi-developments", criterion_developments},
    {3, "certificate-soundness-sweep", criterion_soundness},
    {4, "galois-classification", criterion_galois},
    {5, "resolvent-discriminant", criterion_resolvent_disc},
    {6, "density-lower-bounds", criterion_density_bounds},
    {7, "progression-densities", criterion_prachar},
    {8, "theta-generation-rate", criterion_theta_rate},
    {9, "oracle-equivalence", criterion_oracle_equivalence},
    {10, "prime-case-polygons", criterion_prime_cases},
};

}  // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int ran = 0, passed = 0;
    for (const Criterion& c : kCriteria) {
        if (!selected.empty() && selected.count(c.id) == 0) continue;
        ++ran;
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (ok) ++passed;
        std::printf("[%02d/10] %s %s (%s)\n", c.id, ok ? "PASS" : "FAIL",
                    c.name, detail.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %d/%d passed\n", passed, ran);
    return passed == ran && ran > 0 ? 0 : 1;
}
