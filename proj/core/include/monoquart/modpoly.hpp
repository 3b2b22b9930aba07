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

#ifndef MONOQUART_MODPOLY_HPP
#define MONOQUART_MODPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "monoquart/bigint.hpp"
#include "monoquart/intpoly.hpp"

namespace monoquart {

/* dense univariate polynomial over Z/pZ, p >= 2.
   coefficients are kept reduced to [0, p). */
class ModPoly {
  public:
    ModPoly() = default;  // modulus 0: placeholder, usable only as target
    explicit ModPoly(BigInt p) : p_(std::move(p)) { check_modulus(); }
    ModPoly(BigInt p, std::vector<BigInt> coeffs);
    static ModPoly from_int(const IntPoly& f, const BigInt& p);
    static ModPoly monomial(const BigInt& p, size_t k, const BigInt& c = 1);

    const BigInt& modulus() const { return p_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const BigInt& coeff(size_t i) const;
    const BigInt& lc() const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    ModPoly scaled(const BigInt& c) const;
    ModPoly monic() const;  // zero stays zero

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    friend bool operator==(const ModPoly& a, const ModPoly& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const ModPoly& a, const ModPoly& b) {
        return !(a == b);
    }

  private:
    BigInt p_;
    std::vector<BigInt> c_;
    void check_modulus() const;
    void normalize();
    friend ModPoly make_modpoly_raw(BigInt p, std::vector<BigInt> reduced);
};

// total order used for canonical factor lists: degree, then
// coefficients compared from the top down
bool modpoly_less(const ModPoly& a, const ModPoly& b);

struct ModDivRem {
    ModPoly quot, rem;
};

// euclidean division, b nonzero with invertible leading coefficient
ModDivRem divrem(const ModPoly& a, const ModPoly& b);
ModPoly operator%(const ModPoly& a, const ModPoly& b);

// monic gcd (zero if both inputs are zero); p must be prime
ModPoly gcd(ModPoly a, ModPoly b);
ModPoly derivative(const ModPoly& f);
ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m);
ModPoly powmod(ModPoly base, BigInt e, const ModPoly& m);
// inverse of a modulo m; throws if gcd(a, m) != 1
ModPoly invmod(const ModPoly& a, const ModPoly& m);

// coefficientwise reduction mod p (alias of ModPoly::from_int)
ModPoly reduce(const IntPoly& f, const BigInt& p);

// representative with integer coefficients in [0, p)
IntPoly lift(const ModPoly& f);

// gcd(f, f') == 1; constants count as separable
bool is_separable(const ModPoly& f);

/* element of the residue field F_p[x]/(phibar), phibar monic irreducible.
   value is kept reduced mod phibar. */
class ResidueElem {
  public:
    ResidueElem() = default;
    ResidueElem(ModPoly value, ModPoly phibar);

    const ModPoly& value() const { return value_; }
    const ModPoly& phibar() const { return phibar_; }
    const BigInt& modulus() const { return phibar_.modulus(); }
    bool is_zero() const { return value_.is_zero(); }

    ResidueElem inverse() const;  // throws on zero
    friend ResidueElem operator+(const ResidueElem& a, const ResidueElem& b);
    friend ResidueElem operator-(const ResidueElem& a, const ResidueElem& b);
    friend ResidueElem operator*(const ResidueElem& a, const ResidueElem& b);
    friend bool operator==(const ResidueElem& a, const ResidueElem& b) {
        return a.phibar_ == b.phibar_ && a.value_ == b.value_;
    }
    friend bool operator!=(const ResidueElem& a, const ResidueElem& b) {
        return !(a == b);
    }

  private:
    ModPoly value_, phibar_;
};

/* polynomial in y over F_p[x]/(phibar); carrier for the residual
   polynomials attached to polygon sides */
class ResidualPoly {
  public:
    ResidualPoly() = default;
    explicit ResidualPoly(std::vector<ResidueElem> coeffs);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<ResidueElem>& coeffs() const { return c_; }
    const ResidueElem& coeff(size_t i) const;

  private:
    std::vector<ResidueElem> c_;
};

// gcd(R, R') = 1 over the residue field; constants count as separable
bool residual_separable(const ResidualPoly& r);

// rendering like "y^2+(x+1)*y+2" with residue-field coefficients in x
std::string to_string(const ResidualPoly& r, const std::string& yvar = "y");

struct ModFactor {
    ModPoly factor;  // monic irreducible
    int multiplicity = 0;
};

/* monic irreducible factorization of f mod p for prime p.
   f must not vanish mod p. the list is canonically ordered and does not
   depend on the seed; the seed only steers the internal splitting.
   product of factor^multiplicity times lc(f mod p) recovers f mod p. */
std::vector<ModFactor> factor_modp(const IntPoly& f, const BigInt& p,
                                   std::uint64_t seed = 0);

bool is_irreducible_modp(const IntPoly& f, const BigInt& p,
                         std::uint64_t seed = 0);

}  // namespace monoquart

#endif
