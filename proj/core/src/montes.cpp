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

#include "monoquart/montes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace monoquart {

PhiDevelopment phi_development(const IntPoly& f, const IntPoly& phi) {
    if (phi.degree() < 1 || !phi.is_monic())
        throw std::invalid_argument(
            "phi_development requires monic phi of degree >= 1");
    if (f.is_zero())
        throw std::invalid_argument("phi_development requires nonzero f");
    PhiDevelopment dev;
    dev.phi = phi;
    IntPoly cur = f;
    while (!cur.is_zero()) {
        DivRem dr = divrem_monic(cur, phi);
        dev.coeffs.push_back(dr.rem);
        cur = dr.quot;
    }
    return dev;
}

namespace {

// z-component of (a - o) x (b - o); positive when o->a->b turns left
long long cross(const LatticePoint& o, const LatticePoint& a,
                const LatticePoint& b) {
    return static_cast<long long>(a.x - o.x) * (b.y - o.y) -
           static_cast<long long>(a.y - o.y) * (b.x - o.x);
}

ResidualPoly side_residual(const PhiDevelopment& dev, const BigInt& p,
                           const ModPoly& phibar, const LatticePoint& s,
                           const LatticePoint& t, long h, long e, long d) {
    std::vector<ResidueElem> cs;
    cs.reserve(static_cast<size_t>(d) + 1);
    BigInt pe;
    for (long j = 0; j <= d; ++j) {
        long i = s.x + j * e;
        long y = s.y - j * h;
        const IntPoly& ai = dev.coeffs[static_cast<size_t>(i)];
        bool on_side = !ai.is_zero() && vp_poly(ai, p) == y;
        if (on_side) {
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(),
                       static_cast<unsigned long>(y));
            ModPoly red = reduce(divexact(ai, pe), p);
            cs.emplace_back(red % phibar, phibar);
        } else {
            cs.emplace_back(ModPoly(p), phibar);
        }
    }
    (void)t;
    return ResidualPoly(std::move(cs));
}

}  // namespace

NewtonPolygon newton_polygon(const PhiDevelopment& dev, const BigInt& p) {
    if (!is_probable_prime(p))
        throw std::invalid_argument("newton_polygon requires prime p");
    NewtonPolygon n;
    n.p = p;
    n.phi = dev.phi;
    for (size_t i = 0; i < dev.coeffs.size(); ++i) {
        if (dev.coeffs[i].is_zero()) continue;  // infinite ordinate: omitted
        n.points.push_back(
            {static_cast<long>(i), vp_poly(dev.coeffs[i], p)});
    }
    // monotone chain, lower hull; collinear interior points are not vertices
    for (const LatticePoint& pt : n.points) {
        while (n.hull.size() >= 2 &&
               cross(n.hull[n.hull.size() - 2], n.hull.back(), pt) <= 0)
            n.hull.pop_back();
        n.hull.push_back(pt);
    }
    ModPoly phibar = reduce(dev.phi, p);
    for (size_t k = 0; k + 1 < n.hull.size(); ++k) {
        const LatticePoint& s = n.hull[k];
        const LatticePoint& t = n.hull[k + 1];
        if (t.y >= s.y) break;  // hull slopes increase; principal part done
        long rise = s.y - t.y;
        long run = t.x - s.x;
        long g = std::gcd(rise, run);
        Side side;
        side.start = s;
        side.end = t;
        side.h = rise / g;
        side.e = run / g;
        side.length = run;
        side.degree = g;
        side.residual =
            side_residual(dev, p, phibar, s, t, side.h, side.e, side.degree);
        n.principal.push_back(std::move(side));
    }
    return n;
}

long ind_phi(const NewtonPolygon& n) {
    if (n.principal.empty()) return 0;
    long total = 0;
    for (const Side& s : n.principal) {
        // columns (start.x, end.x]; the polygon's first column is handled
        // below so vertices shared by two sides are counted once
        for (long x = s.start.x + 1; x <= s.end.x; ++x) {
            if (x < 1) continue;
            // floor of the side height at x: start.y - (x - start.x) h / e
            long num = (x - s.start.x) * s.h;
            long drop = (num + s.e - 1) / s.e;  // ceil
            long bound = s.start.y - drop;
            if (bound > 0) total += bound;
        }
    }
    const LatticePoint& first = n.principal.front().start;
    if (first.x >= 1 && first.y > 0) total += first.y;
    return total;
}

IndexReport index_report(const IntPoly& f, const BigInt& p,
                         std::uint64_t seed) {
    if (!f.is_monic())
        throw std::invalid_argument("index_report requires monic f");
    IndexReport rep;
    rep.p = p;
    rep.seed = seed;
    rep.exact = true;
    for (auto& [phibar, mult] : factor_modp(f, p, seed)) {
        IndexFactorEntry ent;
        ent.phibar = phibar;
        ent.multiplicity = mult;
        if (mult == 1) {
            // a simple factor contributes no index and its only possible
            // side has degree 1, hence a separable residual polynomial
            ent.simple_shortcut = true;
        } else {
            PhiDevelopment dev = phi_development(f, lift(phibar));
            NewtonPolygon n = newton_polygon(dev, p);
            ent.raw_count = ind_phi(n);
            ent.ind = phibar.degree() * ent.raw_count;
            for (const Side& s : n.principal)
                if (!residual_separable(s.residual)) ent.separable = false;
            ent.polygon = std::move(n);
        }
        if (!ent.separable) rep.exact = false;
        rep.lower_bound += ent.ind;
        rep.factors.push_back(std::move(ent));
    }
    return rep;
}

std::optional<long> vp_field_disc(const IntPoly& f, const BigInt& p,
                                  const IndexReport& report) {
    if (!report.exact) return std::nullopt;
    BigInt d = discriminant(f);
    if (d == 0) throw std::invalid_argument("vp_field_disc: disc f = 0");
    return vp(d, p) - 2 * report.lower_bound;
}

bool dedekind_test(const IntPoly& f, const BigInt& p, std::uint64_t seed) {
    if (!f.is_monic())
        throw std::invalid_argument("dedekind_test requires monic f");
    auto factors = factor_modp(f, p, seed);
    ModPoly gbar(p, {BigInt(1)});
    ModPoly hbar(p, {BigInt(1)});
    for (auto& [fac, mult] : factors) {
        gbar = gbar * fac;
        for (int i = 1; i < mult; ++i) hbar = hbar * fac;
    }
    IntPoly g = lift(gbar);
    IntPoly h = lift(hbar);
    IntPoly num = g * h - f;
    IntPoly m = divexact(num, BigInt(p));
    ModPoly mbar = reduce(m, p);
    ModPoly d = gcd(gcd(mbar, gbar), hbar);
    return d.degree() == 0;
}

std::string render_polygon(const NewtonPolygon& n) {
    std::ostringstream out;
    long xmax = 0, ymax = 0;
    for (const LatticePoint& pt : n.points) {
        xmax = std::max(xmax, pt.x);
        ymax = std::max(ymax, pt.y);
    }
    bool drawable = !n.points.empty() && xmax <= 40 && ymax <= 24;
    if (drawable) {
        std::vector<std::string> grid(
            static_cast<size_t>(ymax) + 1,
            std::string(static_cast<size_t>(xmax) + 1, ' '));
        auto put = [&](long x, long y, char c) {
            grid[static_cast<size_t>(y)][static_cast<size_t>(x)] = c;
        };
        // counted lattice points first, then attached points on top
        for (const Side& s : n.principal) {
            for (long x = std::max(1L, s.start.x); x <= s.end.x; ++x) {
                long num = (x - s.start.x) * s.h;
                long bound = s.start.y - (num + s.e - 1) / s.e;
                for (long y = 1; y <= bound; ++y) put(x, y, 'o');
            }
        }
        for (const LatticePoint& pt : n.points) put(pt.x, pt.y, '*');
        for (const Side& s : n.principal) {
            put(s.start.x, s.start.y, '@');
            put(s.end.x, s.end.y, '@');
        }
        for (long y = ymax; y >= 0; --y) {
            out << (y == ymax ? "v " : "  ");
            out.width(3);
            out << y << " |";
            const std::string& row = grid[static_cast<size_t>(y)];
            for (char c : row) out << ' ' << c << ' ';
            out << '\n';
        }
        out << "      +";
        for (long x = 0; x <= xmax; ++x) out << "---";
        out << '\n' << "       ";
        for (long x = 0; x <= xmax; ++x) {
            out.width(2);
            out << x << ' ';
        }
        out << '\n';
    } else {
        out << "points:";
        for (const LatticePoint& pt : n.points)
            out << " (" << pt.x << "," << pt.y << ")";
        out << '\n';
    }
    out << "phi = " << to_string(n.phi) << ", p = " << n.p.get_str() << '\n';
    out << "hull vertices:";
    for (const LatticePoint& pt : n.hull)
        out << " (" << pt.x << "," << pt.y << ")";
    out << '\n';
    if (n.principal.empty()) {
        out << "principal part: empty\n";
    } else {
        size_t idx = 1;
        for (const Side& s : n.principal) {
            out << "side " << idx++ << ": (" << s.start.x << "," << s.start.y
                << ") -> (" << s.end.x << "," << s.end.y << ")  slope -"
                << s.h << "/" << s.e << "  length " << s.length << "  degree "
                << s.degree << "  R(y) = " << to_string(s.residual);
            bool sep;
            try {
                sep = residual_separable(s.residual);
                out << (sep ? "  [separable]" : "  [not separable]");
            } catch (const std::exception&) {
                out << "  [separability undefined: phi reducible mod p]";
            }
            out << '\n';
        }
    }
    return out.str();
}

namespace {

using nlohmann::json;

json point_json(const LatticePoint& pt) { return json::array({pt.x, pt.y}); }

json polygon_obj(const NewtonPolygon& n) {
    json j;
    j["points"] = json::array();
    for (const auto& pt : n.points) j["points"].push_back(point_json(pt));
    j["hull"] = json::array();
    for (const auto& pt : n.hull) j["hull"].push_back(point_json(pt));
    j["sides"] = json::array();
    for (const Side& s : n.principal) {
        json sj;
        sj["start"] = point_json(s.start);
        sj["end"] = point_json(s.end);
        sj["slope"] = "-" + std::to_string(s.h) + "/" + std::to_string(s.e);
        sj["h"] = s.h;
        sj["e"] = s.e;
        sj["length"] = s.length;
        sj["degree"] = s.degree;
        sj["residual"] = to_string(s.residual);
        bool sep = false;
        try {
            sep = residual_separable(s.residual);
        } catch (const std::exception&) {
        }
        sj["separable"] = sep;
        j["sides"].push_back(std::move(sj));
    }
    return j;
}

json report_obj(const IndexReport& rep) {
    json j;
    j["p"] = rep.p.get_str();
    j["lower_bound"] = rep.lower_bound;
    j["exact"] = rep.exact;
    j["seed"] = std::to_string(rep.seed);
    j["factors"] = json::array();
    for (const auto& f : rep.factors) {
        json fj;
        fj["phibar"] = to_string(lift(f.phibar));
        fj["multiplicity"] = f.multiplicity;
        fj["raw_count"] = f.raw_count;
        fj["ind"] = f.ind;
        fj["separable"] = f.separable;
        fj["shortcut"] = f.simple_shortcut;
        fj["polygon"] = f.polygon ? polygon_obj(*f.polygon) : json(nullptr);
        j["factors"].push_back(std::move(fj));
    }
    return j;
}

}  // namespace

std::string to_json(const NewtonPolygon& n) {
    return polygon_obj(n).dump(2) + "\n";
}

std::string to_json(const IndexReport& rep) {
    return report_obj(rep).dump(2) + "\n";
}

}  // namespace monoquart
