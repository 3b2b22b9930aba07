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

#ifndef MONOQUART_MONTES_HPP
#define MONOQUART_MONTES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoquart/bigint.hpp"
#include "monoquart/intpoly.hpp"
#include "monoquart/modpoly.hpp"

namespace monoquart {

/* f = sum coeffs[i] * phi^i with deg coeffs[i] < deg phi,
   by repeated euclidean division */
struct PhiDevelopment {
    IntPoly phi;
    std::vector<IntPoly> coeffs;
};

PhiDevelopment phi_development(const IntPoly& f, const IntPoly& phi);

struct LatticePoint {
    long x = 0;
    long y = 0;
    friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
        return a.x == b.x && a.y == b.y;
    }
};

/* one negative-slope side of the lower hull: slope -h/e in lowest terms,
   length = end.x - start.x, degree = length / e */
struct Side {
    LatticePoint start, end;
    long h = 1;
    long e = 1;
    long length = 0;
    long degree = 0;
    ResidualPoly residual;
};

/* points (i, v_p(coeffs[i])) with finite ordinate, their lower convex
   hull, and the principal (negative-slope) part with residual polynomials */
struct NewtonPolygon {
    BigInt p;
    IntPoly phi;
    std::vector<LatticePoint> points;  // ascending x
    std::vector<LatticePoint> hull;    // hull vertices, ascending x
    std::vector<Side> principal;       // negative-slope sides, ascending x
};

NewtonPolygon newton_polygon(const PhiDevelopment& dev, const BigInt& p);

/* lattice points on or below the principal part, strictly above the
   x-axis and strictly right of the y-axis (raw count, not scaled by
   deg phi) */
long ind_phi(const NewtonPolygon& n);

struct IndexFactorEntry {
    ModPoly phibar;        // monic irreducible factor of f mod p
    int multiplicity = 0;
    long raw_count = 0;    // lattice count of this factor's polygon
    long ind = 0;          // deg(phibar) * raw_count
    bool separable = true; // every residual polynomial separable
    bool simple_shortcut = false;  // multiplicity 1: contributes 0
    std::optional<NewtonPolygon> polygon;  // absent on the shortcut path
};

/* lower_bound = sum of ind over factors <= v_p([O_K : Z[theta]]),
   with equality iff exact */
struct IndexReport {
    BigInt p;
    std::vector<IndexFactorEntry> factors;
    long lower_bound = 0;
    bool exact = false;
    std::uint64_t seed = 0;
};

// f must be monic; irreducibility over Q is the caller's contract
IndexReport index_report(const IntPoly& f, const BigInt& p,
                         std::uint64_t seed = 0);

/* v_p(disc K) = v_p(disc f) - 2 * v_p(index), usable when the report
   is exact; nullopt otherwise */
std::optional<long> vp_field_disc(const IntPoly& f, const BigInt& p,
                                  const IndexReport& report);

/* independent oracle: true iff p does not divide [O_K : Z[theta]]
   (classical criterion on f mod p) */
bool dedekind_test(const IntPoly& f, const BigInt& p, std::uint64_t seed = 0);

/* ASCII rendering: rows are valuations, columns are abscissas;
   '*' attached point, '@' principal hull vertex, 'o' counted lattice
   point; followed by a per-side summary */
std::string render_polygon(const NewtonPolygon& n);

/* canonical JSON (sorted keys, big integers as decimal strings);
   re-serializing the parsed output is byte-identical */
std::string to_json(const NewtonPolygon& n);
std::string to_json(const IndexReport& rep);

}  // namespace monoquart

#endif
