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

#include "cli.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "monoquart/density.hpp"
#include "monoquart/families.hpp"
#include "monoquart/montes.hpp"
#include "monoquart/polyparse.hpp"
#include "monoquart/quartic.hpp"

namespace monoquart::cli {

namespace {

using nlohmann::json;

BigInt parse_big(const std::string& s, const char* what) {
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": not an integer: " +
                                    s);
    }
}

QuarticShape shape_of(const IntPoly& f) {
    if (f.degree() != 4 || f.coeff(4) != 1)
        throw std::invalid_argument("expected a monic quartic polynomial");
    return {f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0)};
}

std::string cert_params_flat(const Certificate& c) {
    switch (c.family) {
        case Family::F_AB:
            return "a=" + c.param1.get_str() + ";b=" + c.param2.get_str();
        case Family::G_CD:
            return "c=" + c.param1.get_str() + ";d=" + c.param2.get_str();
        case Family::F_BB:
            return "b=" + c.param2.get_str();
        case Family::G_1D:
        case Family::RESOLVENT_CUBIC:
            return "d=" + c.param2.get_str();
    }
    return "";
}

int emit_certificate(const Certificate& cert, const std::string& format) {
    if (format == "json") {
        std::cout << to_json(cert);
    } else if (format == "csv") {
        std::cout << "family,params,poly,verdict\n"
                  << to_string(cert.family) << ',' << cert_params_flat(cert)
                  << ',' << to_string(cert.poly, cert.var) << ','
                  << to_string(cert.verdict) << '\n';
    } else {
        std::cout << to_human(cert);
    }
    return cert.monogenic() ? 0 : 2;
}

int emit_galois(const IntPoly& f, const std::string& var,
                const std::string& format) {
    GaloisReport rep = galois_group(shape_of(f));
    if (format == "json") {
        json j;
        j["poly"] = to_string(f, var);
        j["irreducible"] = rep.irreducible;
        j["disc"] = rep.disc.get_str();
        j["disc_is_square"] = rep.disc_is_square;
        j["resolvent"] = to_string(rep.resolvent, "y");
        j["resolvent_irreducible"] = rep.resolvent_irreducible;
        j["group"] = to_string(rep.group);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "poly,group,irreducible,disc,disc_is_square,resolvent,"
                     "resolvent_irreducible\n"
                  << to_string(f, var) << ',' << to_string(rep.group) << ','
                  << (rep.irreducible ? 1 : 0) << ',' << rep.disc.get_str()
                  << ',' << (rep.disc_is_square ? 1 : 0) << ','
                  << to_string(rep.resolvent, "y") << ','
                  << (rep.resolvent_irreducible ? 1 : 0) << '\n';
    } else {
        std::cout << to_string(rep.group) << "\n"
                  << "disc = " << rep.disc.get_str()
                  << (rep.disc_is_square ? " (square)" : " (nonsquare)")
                  << "\n"
                  << "resolvent = " << to_string(rep.resolvent, "y")
                  << (rep.resolvent_irreducible ? " (irreducible)"
                                                : " (reducible)")
                  << "\n";
    }
    return rep.group == GaloisGroup::NOT_IRREDUCIBLE ? 2 : 0;
}

int emit_newton(const IntPoly& f, const std::string& var, const BigInt& p,
                const std::optional<IntPoly>& phi, const std::string& format,
                std::uint64_t seed) {
    if (phi) {
        if (phi->degree() < 1 || phi->coeff(phi->degree()) != 1)
            throw std::invalid_argument("phi must be monic of degree >= 1");
        NewtonPolygon ng = newton_polygon(phi_development(f, *phi), p);
        long ind = ind_phi(ng);
        if (format == "json") {
            json j = json::parse(to_json(ng));
            j["p"] = p.get_str();
            j["phi"] = to_string(*phi, var);
            j["poly"] = to_string(f, var);
            j["ind"] = ind;
            std::cout << j.dump(2) << "\n";
        } else if (format == "csv") {
            std::cout << "phi,p,start,end,slope,length,degree,residual,ind\n";
            for (const Side& s : ng.principal)
                std::cout << to_string(*phi, var) << ',' << p.get_str() << ','
                          << '(' << s.start.x << ';' << s.start.y << "),("
                          << s.end.x << ';' << s.end.y << "),-" << s.h << '/'
                          << s.e << ',' << s.length << ',' << s.degree << ','
                          << to_string(s.residual) << ',' << ind << '\n';
        } else {
            std::cout << render_polygon(ng) << "ind = " << ind << "\n";
        }
        return 0;
    }
    IndexReport rep = index_report(f, p, seed);
    if (format == "json") {
        std::cout << to_json(rep);
    } else if (format == "csv") {
        std::cout << "p,phibar,multiplicity,raw_count,ind,separable,"
                     "shortcut\n";
        for (const auto& fac : rep.factors)
            std::cout << p.get_str() << ',' << to_string(lift(fac.phibar))
                      << ',' << fac.multiplicity << ',' << fac.raw_count << ','
                      << fac.ind << ',' << (fac.separable ? 1 : 0) << ','
                      << (fac.simple_shortcut ? 1 : 0) << '\n';
    } else {
        for (const auto& fac : rep.factors)
            if (fac.polygon) std::cout << render_polygon(*fac.polygon);
        std::cout << "index lower bound = " << rep.lower_bound
                  << (rep.exact ? " (exact)" : " (not exact)") << "\n";
    }
    return 0;
}

void emit_density_human(const DensityReport& r) {
    std::cout << r.kind << " family " << r.family << " over ["
              << r.range.lo.get_str() << ", " << BigInt(r.range.hi - 1).get_str()
              << "]\n"
              << "total " << r.counts.total << "\n"
              << "param square-free " << r.counts.param_squarefree
              << "  density " << render_density(r.param_density())
              << "  target " << render_target(r.squarefree_target) << "\n"
              << "pair square-free " << r.counts.pair_squarefree
              << "  density " << render_density(r.pair_density())
              << "  target " << render_target(r.pair_target) << "\n";
    if (r.has_theta)
        std::cout << "theta generates " << r.counts.theta_generates << " of "
                  << (r.counts.total - r.counts.reducible)
                  << " irreducible  fraction "
                  << render_density(r.theta_fraction()) << "  target "
                  << render_target(r.theta_target) << "  (reducible skipped: "
                  << r.counts.reducible << ")\n";
    if (r.has_certificates)
        std::cout << "certified monogenic " << r.counts.certified_monogenic
                  << "\n";
}

void emit_prachar_human(const PracharReport& r) {
    std::cout << "square-free density in " << r.m.get_str() << " mod "
              << r.k.get_str() << " up to " << r.x.get_str() << "\n"
              << "square-free " << r.squarefree << " of " << r.total << "\n"
              << "empirical " << render_density(r.empirical()) << "\n"
              << "target    " << render_target(r.target) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"monogenic quartic toolkit"};
    app.name("mq");
    app.require_subcommand(1);

    std::string format = "human";
    std::uint64_t seed = 0;
    int threads = 1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_option("--seed", seed, "rng seed (env MQ_SEED overrides)");
    app.add_option("--threads", threads, "worker threads for range scans")
        ->check(CLI::Range(1, 4096));

    std::string arg_a, arg_b, arg_c, arg_d, arg_poly, arg_phi, arg_family;
    std::string arg_m, arg_k, arg_x, arg_prime;
    std::string arg_lo = "1", arg_hi;
    bool symmetric = false, with_certificates = false;
    std::uint64_t segment = std::uint64_t{1} << 20;

    auto sub = [&](const char* name, const char* desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    CLI::App* cf = sub("check-f", "certify x^4+ax+b as monogenic");
    cf->add_option("--a", arg_a, "coefficient a")->required();
    cf->add_option("--b", arg_b, "coefficient b")->required();

    CLI::App* cg = sub("check-g", "certify x^4+cx^3+d as monogenic");
    cg->add_option("--c", arg_c, "coefficient c")->required();
    cg->add_option("--d", arg_d, "coefficient d")->required();

    CLI::App* cfbb = sub("check-fbb", "certify x^4+bx+b (one parameter)");
    cfbb->add_option("--b", arg_b, "coefficient b")->required();

    CLI::App* cg1d = sub("check-g1d", "certify x^4+x^3+d (one parameter)");
    cg1d->add_option("--d", arg_d, "coefficient d")->required();

    CLI::App* ccubic = sub("check-cubic", "certify the cubic y^3-4dy-d");
    ccubic->add_option("--d", arg_d, "parameter d")->required();

    CLI::App* gal = sub("galois", "galois group of a monic quartic");
    gal->add_option("--poly", arg_poly, "polynomial expression")->required();

    CLI::App* newt = sub("newton", "phi-adic newton polygon and index");
    newt->add_option("--poly", arg_poly, "polynomial expression")->required();
    newt->add_option("--p", arg_prime, "prime")->required();
    newt->add_option("--phi", arg_phi,
                     "monic lift to develop by (omit to analyze every "
                     "repeated factor of poly mod p)");

    auto add_range_opts = [&](CLI::App* s) {
        CLI::Option* lo = s->add_option("--lo", arg_lo,
                                        "lowest parameter (inclusive)");
        s->add_option("--hi", arg_hi, "highest parameter (inclusive)")
            ->required();
        s->add_flag("--symmetric", symmetric,
                    "scan [-hi, hi] instead of [lo, hi]");
        s->add_option("--segment", segment, "sieve segment size")
            ->check(CLI::PositiveNumber);
        s->add_flag("--with-certificates", with_certificates,
                    "also run the certifier for every parameter");
        return lo;
    };

    CLI::App* dens = sub("density", "square-free parameter densities");
    dens->add_option("--family", arg_family, "f or g")
        ->required()
        ->check(CLI::IsMember({"f", "g"}));
    CLI::Option* dens_lo = add_range_opts(dens);

    CLI::App* prach = sub("prachar",
                          "square-free density in the class m mod k up to x");
    prach->add_option("--m", arg_m, "residue")->required();
    prach->add_option("--k", arg_k, "modulus")->required();
    prach->add_option("--x", arg_x, "upper bound")->required();

    CLI::App* theta = sub("theta-scan",
                          "fraction of parameters whose root generates the "
                          "maximal order");
    theta->add_option("--family", arg_family, "f or g")
        ->required()
        ->check(CLI::IsMember({"f", "g"}));
    CLI::Option* theta_lo = add_range_opts(theta);

    std::vector<const char*> argv;
    argv.push_back("mq");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (const char* env = std::getenv("MQ_SEED")) {
        errno = 0;
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (errno != 0 || end == env || *end != '\0') {
            std::cerr << "error: MQ_SEED must be an unsigned integer\n";
            return 1;
        }
        seed = v;
    }

    try {
        if (app.got_subcommand(cf))
            return emit_certificate(
                check_f(parse_big(arg_a, "--a"), parse_big(arg_b, "--b"), seed),
                format);
        if (app.got_subcommand(cg))
            return emit_certificate(
                check_g(parse_big(arg_c, "--c"), parse_big(arg_d, "--d"), seed),
                format);
        if (app.got_subcommand(cfbb))
            return emit_certificate(check_f_bb(parse_big(arg_b, "--b"), seed),
                                    format);
        if (app.got_subcommand(cg1d))
            return emit_certificate(check_g_1d(parse_big(arg_d, "--d"), seed),
                                    format);
        if (app.got_subcommand(ccubic))
            return emit_certificate(
                check_resolvent_cubic(parse_big(arg_d, "--d"), seed), format);
        if (app.got_subcommand(gal)) {
            ParsedPoly pp = parse_poly(arg_poly);
            std::string var = pp.var.empty() ? "x" : pp.var;
            return emit_galois(pp.poly, var, format);
        }
        if (app.got_subcommand(newt)) {
            ParsedPoly pp = parse_poly(arg_poly);
            std::string var = pp.var.empty() ? "x" : pp.var;
            BigInt p = parse_big(arg_prime, "--p");
            std::optional<IntPoly> phi;
            if (!arg_phi.empty()) {
                ParsedPoly ph = parse_poly(arg_phi);
                if (!ph.var.empty() && !pp.var.empty() && ph.var != pp.var)
                    throw std::invalid_argument(
                        "poly and phi use different variables");
                phi = ph.poly;
            }
            return emit_newton(pp.poly, var, p, phi, format, seed);
        }
        if (app.got_subcommand(dens) || app.got_subcommand(theta)) {
            bool is_theta = app.got_subcommand(theta);
            BigInt hi = parse_big(arg_hi, "--hi");
            BigInt lo = parse_big(arg_lo, "--lo");
            if (symmetric) {
                if ((is_theta ? theta_lo : dens_lo)->count() > 0)
                    throw std::invalid_argument(
                        "--symmetric derives the range from --hi; drop --lo");
                lo = -hi;
            }
            SieveRange r{lo, hi + 1, static_cast<std::size_t>(segment)};
            DensityOptions dop;
            dop.segment_size = static_cast<std::size_t>(segment);
            dop.threads = threads;
            dop.with_certificates = with_certificates;
            dop.seed = seed;
            char fam = arg_family == "f" ? 'f' : 'g';
            DensityReport rep =
                is_theta ? theta_generates_scan(r, fam, dop)
                         : (fam == 'f' ? family_density_f(r, dop)
                                       : family_density_g(r, dop));
            std::fprintf(stderr, "runtime: %.3f s\n", rep.runtime_seconds);
            if (format == "json")
                std::cout << to_json(rep);
            else if (format == "csv")
                std::cout << to_csv(rep);
            else
                emit_density_human(rep);
            return 0;
        }
        if (app.got_subcommand(prach)) {
            DensityOptions dop;
            dop.segment_size = static_cast<std::size_t>(segment);
            PracharReport rep =
                prachar_check(parse_big(arg_m, "--m"), parse_big(arg_k, "--k"),
                              parse_big(arg_x, "--x"), dop);
            std::fprintf(stderr, "runtime: %.3f s\n", rep.runtime_seconds);
            if (format == "json")
                std::cout << to_json(rep);
            else if (format == "csv")
                std::cout << to_csv(rep);
            else
                emit_prachar_human(rep);
            return 0;
        }
        throw std::logic_error("no subcommand dispatched");
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace monoquart::cli
