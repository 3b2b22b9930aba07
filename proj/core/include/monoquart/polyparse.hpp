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

#ifndef MONOQUART_POLYPARSE_HPP
#define MONOQUART_POLYPARSE_HPP

#include <string>
#include <string_view>

#include "monoquart/intpoly.hpp"

namespace monoquart {

/* integer polynomials in one variable, e.g. "x^4+2x+2", "y^3-12y-9",
   "(x+1)^4-3(x+1)". one-letter variable, implicit or explicit '*',
   '^' for powers, parentheses allowed, whitespace ignored.
   var is empty when the input is constant. throws invalid_argument. */
struct ParsedPoly {
    IntPoly poly;
    std::string var;
};

ParsedPoly parse_poly(std::string_view text);

}  // namespace monoquart

#endif
