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

#ifndef MONOQUART_INTPOLY_HPP
#define MONOQUART_INTPOLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "monoquart/bigint.hpp"

namespace monoquart {

/* dense univariate polynomial over Z. coefficient i belongs to x^i.
   invariant: no trailing zero coefficients (zero polynomial = empty vector). */
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(const BigInt& constant);
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<BigInt> coeffs);   // ascending degree

    static IntPoly monomial(const BigInt& c, size_t deg);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for 0
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const BigInt& lc() const;                        // requires nonzero
    const BigInt& coeff(size_t i) const;             // 0 beyond the degree
    const std::vector<BigInt>& coeffs() const { return c_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const BigInt& s, const IntPoly& a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    BigInt operator()(const BigInt& x) const;        // Horner

    void normalize();

  private:
    std::vector<BigInt> c_;
};

IntPoly derivative(const IntPoly& f);

/* quotient and remainder by a monic divisor, exact over Z */
struct DivRem { IntPoly quot, rem; };
DivRem divrem_monic(const IntPoly& f, const IntPoly& g);

/* divide every coefficient by s, which must divide exactly */
IntPoly divexact(const IntPoly& f, const BigInt& s);

/* gcd of coefficients, >= 0; content of 0 is 0 */
BigInt content(const IntPoly& f);

/* min p-adic valuation over the coefficients; val_inf for the zero
   polynomial. p must be prime. */
long vp_poly(const IntPoly& g, const BigInt& p);

/* resultant over Z by the subresultant polynomial remainder sequence.
   convention res(f,g) = lc(f)^deg g * lc(g)^deg f * prod (alpha_i - beta_j),
   so res(x-a, x-b) = a - b. zero if either input is zero. */
BigInt resultant(const IntPoly& f, const IntPoly& g);

/* (-1)^(n(n-1)/2) res(h, h') / lc(h) for n = deg h >= 1 */
BigInt discriminant(const IntPoly& h);

/* all rational roots (no multiplicities), ascending, via divisor
   enumeration of the trailing and leading coefficients. h != 0. */
std::vector<Rational> rational_roots(const IntPoly& h);

/* render like "x^4-2x+2"; parses back with parse_poly */
std::string to_string(const IntPoly& f, const std::string& var = "x");

/* dense univariate polynomial over Q, same layout as IntPoly */
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    explicit RatPoly(const IntPoly& f);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rational& coeff(size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_monic() const;

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    Rational operator()(const Rational& x) const;

    void normalize();

  private:
    std::vector<Rational> c_;
};

/* f(x + s) by Taylor shift */
RatPoly shift(const RatPoly& f, const Rational& s);

/* smallest positive d with d*f integral, paired with d*f */
struct ClearedPoly { IntPoly poly; BigInt den; };
ClearedPoly clear_denominators(const RatPoly& f);

std::string to_string(const RatPoly& f, const std::string& var = "x");

}  // namespace monoquart

#endif
