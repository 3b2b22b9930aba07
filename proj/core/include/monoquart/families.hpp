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

#ifndef MONOQUART_FAMILIES_HPP
#define MONOQUART_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoquart/bigint.hpp"
#include "monoquart/intpoly.hpp"
#include "monoquart/montes.hpp"
#include "monoquart/quartic.hpp"

namespace monoquart {

enum class Family { F_AB, G_CD, F_BB, G_1D, RESOLVENT_CUBIC };

enum class Verdict { MONOGENIC_GENERATOR, HYPOTHESES_NOT_MET, NOT_IRREDUCIBLE };

/* how a prime dividing the discriminant got certified:
   - SQFREE_VAL_1: v_p(disc) = 1 already forces index 0 (no report needed)
   - CASE1_EISENSTEIN_SHAPE: p divides every non-leading coefficient,
     p^2 does not divide the constant term; one-sided polygon
   - CASE2_P2: the p = 2 congruence case (development at x -+ 1)
   - CASE3_P3: the p = 3 case for x^4+ax+b with 3 not dividing a
   - GCD_SIEVE: reduction splits as x^3(x+c) mod p; the simple factor
     contributes nothing and the cubed factor is one-sided
   - DEDEKIND_XCHECK: evidence produced by the independent oracle
     (used by tests and tools, never by certificate construction) */
enum class PrimeCase {
    SQFREE_VAL_1,
    CASE1_EISENSTEIN_SHAPE,
    CASE2_P2,
    CASE3_P3,
    GCD_SIEVE,
    DEDEKIND_XCHECK,
};

std::string to_string(Family f);
std::string to_string(Verdict v);
std::string to_string(PrimeCase c);

/* one named check in the hypothesis trail; gating checks decide the
   verdict, non-gating entries are recorded facts */
struct HypothesisCheck {
    std::string name;
    std::string value;
    bool ok = false;
    bool gating = true;
};

struct PrimeEvidence {
    BigInt p;
    PrimeCase tag = PrimeCase::SQFREE_VAL_1;
    std::string note;
    std::optional<IndexReport> report;  // absent for SQFREE_VAL_1
};

/* verdict MONOGENIC_GENERATOR means every prime dividing the
   discriminant has certified v_p(index) = 0, so the root generates the
   ring of integers. HYPOTHESES_NOT_MET never claims non-monogenicity:
   it only says this certificate cannot be built. */
struct Certificate {
    Family family = Family::F_AB;
    BigInt param1, param2;
    IntPoly poly;
    std::string var = "x";
    Verdict verdict = Verdict::HYPOTHESES_NOT_MET;
    std::vector<HypothesisCheck> hypothesis_trail;
    std::vector<PrimeEvidence> prime_evidence;
    std::optional<GaloisReport> galois;
    std::uint64_t rng_seed = 0;
    std::vector<std::string> deviation_notes;

    bool monogenic() const { return verdict == Verdict::MONOGENIC_GENERATOR; }
};

// x^4 + a x + b
Certificate check_f(const BigInt& a, const BigInt& b, std::uint64_t seed = 0);
// x^4 + c x^3 + d
Certificate check_g(const BigInt& c, const BigInt& d, std::uint64_t seed = 0);
// x^4 + b x + b with square-free b and 256-27b, b not in {3,5}; Galois S4
Certificate check_f_bb(const BigInt& b, std::uint64_t seed = 0);
// x^4 + x^3 + d with square-free d and 256d-27, d != -2; Galois S4
Certificate check_g_1d(const BigInt& d, std::uint64_t seed = 0);
// the cubic y^3 - 4dy - d attached to x^4 + x^3 + d
Certificate check_resolvent_cubic(const BigInt& d, std::uint64_t seed = 0);

// canonical JSON document (schema "monoquart.certificate/1");
// re-serializing a parse of this string is byte-identical
std::string to_json(const Certificate& c);
std::string to_human(const Certificate& c);

}  // namespace monoquart

#endif
