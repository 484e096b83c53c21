#include "ordhyp/verify.hpp"

#include "ordhyp/bounds.hpp"
#include "ordhyp/combinatorics.hpp"
#include "ordhyp/error.hpp"
#include "ordhyp/families.hpp"
#include "ordhyp/incidence.hpp"
#include "ordhyp/random.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

namespace ordhyp {

namespace {

std::string tau_text(const SecantProfile& p)
{
    std::string out = "{";
    for (const auto& [i, c] : p.tau) {
        if (out.size() > 1)
            out += ",";
        out += std::to_string(i) + ":" + std::to_string(c);
    }
    return out + "}";
}

class Recorder {
public:
    Recorder(std::vector<Claim>& out, int criterion, std::string group)
        : out_(out)
        , criterion_(criterion)
        , group_(std::move(group))
    {
    }

    void check(std::string reference, const std::string& computed, const std::string& expected)
    {
        out_.push_back({criterion_, group_, std::move(reference), computed, expected, computed == expected});
    }
    template <class A, class B>
    void equal(std::string reference, const A& computed, const B& expected)
    {
        check(std::move(reference), to_text(computed), to_text(expected));
    }
    void truth(std::string reference, bool ok, const std::string& detail = "true")
    {
        out_.push_back({criterion_, group_, std::move(reference), ok ? "true" : detail, "true", ok});
    }

    // Runs fn; an exception becomes a failed claim instead of aborting the suite.
    template <class Fn>
    void guarded(const std::string& reference, Fn&& fn)
    {
        try {
            fn();
        } catch (const std::exception& e) {
            out_.push_back({criterion_, group_, reference, std::string("error: ") + e.what(), "no error", false});
        }
    }

private:
    template <class T>
    static std::string to_text(const T& v)
    {
        if constexpr (std::is_convertible_v<T, std::string>)
            return std::string(v);
        else
            return std::to_string(v);
    }

    std::vector<Claim>& out_;
    int criterion_;
    std::string group_;
};

using Formula = std::function<std::int64_t(std::int64_t, std::int64_t)>;

Formula formula_for(const VerifyOptions& o, const std::string& family, Formula fallback)
{
    const auto it = o.formula_overrides.find(family);
    return it == o.formula_overrides.end() ? std::move(fallback) : it->second;
}

std::int64_t ordinary(const SecantProfile& p)
{
    return static_cast<std::int64_t>(p.ordinary());
}

void check_cube(Recorder& r, const VerifyOptions& o)
{
    r.guarded("cube", [&] {
        ProfileOptions opt;
        opt.keep_hyperplanes = true;
        opt.threads = o.threads;
        const auto cube_cfg = cube();
        const auto p = secant_profile(cube_cfg, opt);
        r.equal("cube spans eight ordinary planes", ordinary(p), 8);
        r.equal("cube 4-secant planes", p.tau_at(4), 12);
        r.check("cube profile", tau_text(p), "{3:8,4:12}");
        r.truth("cube tuple count 8 + 4*12 = C(8,3)", check_trivcount(p));
        const auto per = per_point_ordinary(p);
        r.truth("every cube vertex on 3 ordinary planes",
                std::all_of(per.begin(), per.end(), [](auto v) { return v == 3; }));
        std::uint64_t sum = std::accumulate(per.begin(), per.end(), std::uint64_t{0});
        r.equal("sum of per-vertex counts = 3 * 8 (equality case)", sum, 24);
        for (std::size_t x = 0; x < cube_cfg.size(); ++x) {
            const auto fano = project_from_point(cube_cfg, x);
            const auto fp = secant_profile(fano, opt);
            r.equal("projection from vertex " + std::to_string(x) + ": 7 points", fano.size(), 7);
            r.equal("projection from vertex " + std::to_string(x) + ": three ordinary lines", ordinary(fp), 3);
        }
    });
}

void check_cube_minus_vertex(Recorder& r, const VerifyOptions& o)
{
    r.guarded("cube minus a vertex", [&] {
        ProfileOptions opt;
        opt.threads = o.threads;
        for (std::size_t x = 0; x < 8; ++x) {
            const auto p = secant_profile(cube().without(x), opt);
            r.check("cube minus vertex " + std::to_string(x) + " profile", tau_text(p), "{3:11,4:6}");
        }
    });
}

void check_polygon(Recorder& r, const VerifyOptions& o)
{
    const auto formula = formula_for(o, "polygon", [](std::int64_t n, std::int64_t) { return polygon_formula(n); });
    r.guarded("polygon", [&] {
        const double eps = kDefaultEps;
        r.equal("X_12 numeric: six ordinary lines", ordinary(secant_profile_numeric(polygon_points(12), eps)), 6);
        r.equal("X_12 combinatorial: six ordinary lines",
                ordinary(combinatorial_ordinary_count(polygon_model(12))), 6);
        for (std::size_t n = 8; n <= 40; ++n) {
            const auto expected = formula(static_cast<std::int64_t>(n), 2);
            const auto numeric = secant_profile_numeric(polygon_points(n), eps, false, o.threads);
            const auto comb = combinatorial_ordinary_count(polygon_model(n));
            r.equal("polygon n=" + std::to_string(n) + " numeric vs formula", ordinary(numeric), expected);
            r.equal("polygon n=" + std::to_string(n) + " combinatorial vs formula", ordinary(comb), expected);
            r.check("polygon n=" + std::to_string(n) + " numeric and combinatorial profiles", tau_text(numeric),
                    tau_text(comb));
        }
    });
}

void check_prism(Recorder& r, const VerifyOptions& o)
{
    const auto formula = formula_for(o, "prism", [](std::int64_t n, std::int64_t) { return prism_formula(n); });
    r.guarded("prism", [&] {
        const double eps = kDefaultEps;
        r.equal("P_10 numeric: 20 ordinary planes", ordinary(secant_profile_numeric(prism_points(10), eps)), 20);
        r.equal("P_10 combinatorial: 20 ordinary planes", ordinary(combinatorial_ordinary_count(prism_model(10))),
                20);
        r.equal("P_16 numeric: 48 ordinary planes", ordinary(secant_profile_numeric(prism_points(16), eps)), 48);
        r.equal("P_16 combinatorial: 48 ordinary planes", ordinary(combinatorial_ordinary_count(prism_model(16))),
                48);
        r.equal("prism formula at n=10", formula(10, 3), 20);
        r.equal("prism formula at n=16", formula(16, 3), 48);
        for (std::size_t n = 8; n <= 40; ++n) {
            const auto expected = formula(static_cast<std::int64_t>(n), 3);
            const auto comb = combinatorial_ordinary_count(prism_model(n));
            r.equal("prism n=" + std::to_string(n) + " combinatorial vs formula", ordinary(comb), expected);
            const auto numeric = secant_profile_numeric(prism_points(n), eps, false, o.threads);
            r.check("prism n=" + std::to_string(n) + " numeric and combinatorial profiles", tau_text(numeric),
                    tau_text(comb));
            if (n % 2 == 1) {
                bool same = true;
                std::string detail;
                for (std::size_t x = 0; x <= n; ++x) {
                    const auto c = ordinary(combinatorial_ordinary_count(prism_model(n, x)));
                    if (c != ordinary(comb)) {
                        same = false;
                        detail = "index " + std::to_string(x) + " gives " + std::to_string(c);
                    }
                }
                r.truth("prism n=" + std::to_string(n) + " count independent of deleted point", same, detail);
            }
        }
    });
}

void check_trivial(Recorder& r, const VerifyOptions& o)
{
    const auto formula = formula_for(o, "trivial", trivial_formula);
    r.guarded("trivial example", [&] {
        ProfileOptions opt;
        opt.threads = o.threads;
        for (std::size_t d = 2; d <= 6; ++d) {
            for (std::size_t n = d + 2; n <= 12; ++n) {
                const auto p = secant_profile(trivial_example(n, d), opt);
                const std::string tag = "trivial n=" + std::to_string(n) + " d=" + std::to_string(d);
                r.equal(tag + " ordinary = C(n-1,d-1)", ordinary(p),
                        formula(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)));
                r.equal(tag + " one (n-1)-secant", p.tau_at(n - 1), 1);
            }
        }
    });
}

void check_dplus3(Recorder& r, const VerifyOptions& o)
{
    const auto formula =
        formula_for(o, "dplus3_odd", [](std::int64_t, std::int64_t d) { return dplus3_odd_formula(d); });
    r.guarded("d+3 construction", [&] {
        ProfileOptions opt;
        opt.threads = o.threads;
        const std::vector<Rational> second = {Rational(-1, 2), Rational(3), Rational(7, 3)};
        for (std::size_t d : {3, 5, 7}) {
            const auto sd = static_cast<std::int64_t>(d);
            for (int set = 0; set < 2; ++set) {
                std::vector<Rational> alphas;
                if (set == 1)
                    alphas.assign(second.begin(), second.begin() + static_cast<std::ptrdiff_t>((d - 1) / 2));
                const auto p = secant_profile(dplus3_odd(d, alphas), opt);
                const std::string tag =
                    "d+3 odd d=" + std::to_string(d) + (set == 0 ? " default alphas" : " second alphas");
                r.equal(tag + " tau_d", ordinary(p), formula(sd + 3, sd));
                r.equal(tag + " tau_{d+1} = (d+3)/2", p.tau_at(d + 1), (d + 3) / 2);
            }
        }
    });
}

void check_ip(Recorder& r, const VerifyOptions&)
{
    auto timed = [&](std::int64_t n, std::int64_t d, std::int64_t expected, const std::string& ref) {
        r.guarded(ref, [&] {
            const auto start = std::chrono::steady_clock::now();
            const auto b = ip_bound(n, d);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            r.equal(ref, b.value, expected);
            r.truth(ref + " under 5 s", secs < 5.0, std::to_string(secs) + " s");
        });
    };
    timed(8, 4, 25, "ip (8,4) = 25");
    timed(9, 5, 54, "ip (9,5) = 54");
    for (std::int64_t d = 2; d <= 7; ++d)
        timed(d + 2, d, static_cast<std::int64_t>(choose(static_cast<std::uint64_t>(d + 1), 2)),
              "ip (d+2,d) = C(d+1,2), d=" + std::to_string(d));
    for (std::int64_t d : {4, 6})
        timed(d + 3, d, static_cast<std::int64_t>(choose(static_cast<std::uint64_t>(d + 2), 3)),
              "ip (d+3,d) = C(d+2,3), d=" + std::to_string(d));
    for (std::int64_t d : {3, 5, 7})
        timed(d + 3, d, (d + 3) * (d + 1) * (d - 1) / 6, "ip (d+3,d) = (d+3)(d+1)(d-1)/6, d=" + std::to_string(d));
}

void check_table(Recorder& r, const VerifyOptions& o)
{
    r.guarded("small-values table", [&] {
        BoundCalculator calc;
        for (const auto& [family, f] : o.formula_overrides)
            calc.override_formula(family, f);
        const auto table = generate_table(calc, 13, 7, TableProfile::Standard);
        const auto& expected = reference_table();
        for (std::int64_t n = 4; n <= 13; ++n)
            for (std::int64_t d = 2; d <= 7; ++d)
                r.check("table cell n=" + std::to_string(n) + " d=" + std::to_string(d),
                        normalize_cell(table.at(n, d).text),
                        normalize_cell(expected[static_cast<std::size_t>(n - 4)][static_cast<std::size_t>(d - 2)]));
    });
}

void check_properties(Recorder& r, const VerifyOptions& o)
{
    r.guarded("property suite", [&] {
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<std::size_t> pick_n(6, 10);
        std::uniform_int_distribution<std::size_t> pick_d(2, 4);
        std::size_t trivcount = 0;
        std::size_t bettercount = 0;
        std::size_t ints = 0;
        std::size_t per_point = 0;
        std::size_t map_invariant = 0;
        std::size_t perm_invariant = 0;
        std::size_t serial_agree = 0;
        std::size_t with_secants = 0;
        std::string first_failure;
        ProfileOptions opt;
        opt.keep_hyperplanes = true;
        opt.threads = o.threads;
        for (std::size_t k = 0; k < o.property_configs; ++k) {
            const std::size_t d = pick_d(rng);
            const std::size_t n = std::max(pick_n(rng), d + 2);
            const auto c = random_general_position(rng, n, d);
            const auto p = secant_profile(c, opt);
            auto note = [&](bool ok, std::size_t& counter, const char* what) {
                if (ok)
                    ++counter;
                else if (first_failure.empty())
                    first_failure = std::string(what) + " on config " + std::to_string(k);
            };
            note(check_trivcount(p), trivcount, "trivcount");
            note(check_bettercount(p), bettercount, "bettercount");
            note(check_ints(c).ok, ints, "ints");
            const auto per = per_point_ordinary(p);
            note(std::accumulate(per.begin(), per.end(), std::uint64_t{0}) == d * p.ordinary(), per_point,
                 "per-point sum");
            note(secant_profile(transform(c, random_projective_map(rng, d)), opt).tau == p.tau, map_invariant,
                 "projective invariance");
            note(secant_profile(c.permuted(random_permutation(rng, n)), opt).tau == p.tau, perm_invariant,
                 "permutation invariance");
            note(secant_profile_serial(c, opt) == p, serial_agree, "serial/parallel agreement");
            if (p.hyperplane_count() != p.ordinary())
                ++with_secants;
        }
        const auto total = o.property_configs;
        const std::string detail = first_failure.empty() ? "" : " (first failure: " + first_failure + ")";
        r.equal("trivcount equality holds" + detail, trivcount, total);
        r.equal("bettercount inequality holds", bettercount, total);
        r.equal("at most one (d+1)-subset of a spanning (d+2)-set in a hyperplane", ints, total);
        r.equal("per-point ordinary counts sum to d * ordinary", per_point, total);
        r.equal("profile invariant under random projective maps", map_invariant, total);
        r.equal("profile invariant under point permutations", perm_invariant, total);
        r.equal("serial and parallel kernels agree", serial_agree, total);
        r.truth("sample includes configurations with (d+1)-secants", with_secants > 0);
    });
}

void check_agreement(Recorder& r, const VerifyOptions& o)
{
    r.guarded("exact/numeric agreement", [&] {
        const double eps = kDefaultEps;
        auto compare = [&](const Configuration& c, const std::string& tag) {
            r.guarded(tag + " numeric profile", [&] {
                ProfileOptions opt;
                opt.threads = o.threads;
                const auto exact = secant_profile(c, opt);
                const auto numeric = secant_profile_numeric(to_numeric(c), eps, false, o.threads);
                r.check(tag + " numeric profile", tau_text(numeric), tau_text(exact));
            });
        };
        compare(cube(), "cube");
        compare(cube().without(0), "cube minus vertex");
        compare(broken_fano(), "broken Fano");
        for (std::size_t d = 2; d <= 6; ++d) {
            for (std::size_t n = d + 2; n <= 12; ++n) {
                const std::string tag = "trivial n=" + std::to_string(n) + " d=" + std::to_string(d);
                std::vector<Rational> balanced;
                for (std::size_t i = 0; i + 1 < n; ++i)
                    balanced.emplace_back(2 * static_cast<long>(i) - static_cast<long>(n - 2),
                                          static_cast<long>(n - 2));
                for (auto& t : balanced)
                    t.canonicalize();
                compare(trivial_example(n, d, balanced), tag + " parameters in [-1,1]");
                // Parameters 0..n-2 with d = 6, n >= 11 are not resolvable in
                // double precision at eps; the backend must refuse, not guess.
                const auto c = trivial_example(n, d);
                const auto exact = secant_profile(c);
                std::string outcome;
                try {
                    outcome = secant_profile_numeric(to_numeric(c), eps, false, o.threads).tau == exact.tau
                                  ? "reproduced or refused"
                                  : "differs";
                } catch (const Error& e) {
                    outcome = e.kind() == ErrorKind::IllConditioned ? "reproduced or refused" : e.what();
                }
                r.check(tag + " parameters 0..n-2 numeric", outcome, "reproduced or refused");
            }
        }
        std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
        for (std::size_t k = 0; k < o.agreement_configs; ++k) {
            const std::size_t d = 2 + k % 3;
            const std::size_t n = 6 + k % 5;
            compare(random_general_position(rng, n, d), "random #" + std::to_string(k));
        }
        for (std::size_t m = 4; m <= 40; ++m) {
            for (int family = 0; family < 2; ++family) {
                const auto c = family == 0 ? polygon_points(2 * m) : prism_points(2 * m);
                const auto scan = scan_residues(c, eps, o.threads);
                const std::string tag = std::string(family == 0 ? "polygon" : "prism") + " m=" + std::to_string(m);
                r.truth(tag + " incident residues <= eps/10", scan.max_incident <= eps / 10,
                        "max incident residue " + std::to_string(scan.max_incident));
                r.truth(tag + " separated residues >= 10 eps", scan.min_separated >= eps * 10,
                        "min separated residue " + std::to_string(scan.min_separated));
            }
        }
    });
}

} // namespace

const std::vector<std::string>& verification_groups()
{
    static const std::vector<std::string> groups = {"cube",   "cube_minus_vertex", "polygon", "prism",
                                                    "trivial", "dplus3",            "ip",      "table",
                                                    "properties", "agreement"};
    return groups;
}

const std::vector<std::vector<std::string>>& reference_table()
{
    static const std::vector<std::vector<std::string>> t = {
        {"3", ".", ".", ".", ".", "."},
        {"4", "6", ".", ".", ".", "."},
        {"3", "8", "10", ".", ".", "."},
        {"3", "11", "20", "15", ".", "."},
        {"4", "8", "25...35", "32", "21", "."},
        {"6", "14..22", "18...56", "54...70", "56", "28"},
        {"5", "20", "35...84", "36...126", "90...126", "80"},
        {"6", "19...31", "55...120", "77...210", ".", "."},
        {"6", "24", "57...165", "132...330", ".", "."},
        {"6", "26...51", "78...220", "149...495", ".", "."},
    };
    return t;
}

std::vector<Claim> run_verification(const VerifyOptions& options)
{
    using Check = void (*)(Recorder&, const VerifyOptions&);
    static const Check checks[] = {check_cube,   check_cube_minus_vertex, check_polygon, check_prism,
                                   check_trivial, check_dplus3,            check_ip,      check_table,
                                   check_properties, check_agreement};
    std::vector<Claim> claims;
    const auto& groups = verification_groups();
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (options.only && *options.only != groups[i])
            continue;
        Recorder rec(claims, static_cast<int>(i + 1), groups[i]);
        checks[i](rec, options);
    }
    return claims;
}

} // namespace ordhyp
