#include "ordhyp/bounds.hpp"
#include "ordhyp/error.hpp"
#include "ordhyp/families.hpp"

#include <doctest.h>

using namespace ordhyp;

namespace {

// Oracle: plain exhaustive search over all tau vectors, no pruning.
std::int64_t brute_ip(std::int64_t n, std::int64_t d)
{
    auto c = [](std::int64_t a, std::int64_t b) -> std::int64_t {
        if (b < 0 || b > a)
            return 0;
        std::int64_t r = 1;
        for (std::int64_t i = 1; i <= b; ++i)
            r = r * (a - b + i) / i;
        return r;
    };
    const std::int64_t total = c(n, d);
    const std::int64_t budget = c(n, d + 2);
    std::int64_t best = total;
    std::vector<std::int64_t> tau(static_cast<std::size_t>(n - d), 0);
    std::function<void(std::int64_t, std::int64_t, std::int64_t)> rec = [&](std::int64_t i, std::int64_t used,
                                                                             std::int64_t spent) {
        if (i == n - d) {
            best = std::min(best, total - used);
            return;
        }
        const std::int64_t gain = c(d + i, d);
        const std::int64_t weight = (n - d - i) * c(d + i, i - 1);
        for (std::int64_t t = 0; used + t * gain <= total && spent + t * weight <= budget; ++t)
            rec(i + 1, used + t * gain, spent + t * weight);
    };
    rec(1, 0, 0);
    return best;
}

} // namespace

TEST_CASE("Csima-Sawyer")
{
    CHECK(csima_sawyer_bound(8).value == 4);
    CHECK(csima_sawyer_bound(13).value == 6);
    const auto seven = csima_sawyer_bound(7);
    CHECK(seven.value == 3);
    CHECK(seven.note.find("registry") != std::string::npos);
    CHECK_THROWS_AS(csima_sawyer_bound(3), Error);
}

TEST_CASE("small-n bound")
{
    CHECK(smalls_bound(6, 4).value == 10);
    CHECK(smalls_bound(7, 5).value == 15);
    CHECK(smalls_bound(9, 7).value == 28);
    // Clamped at zero for large n.
    CHECK(smalls_bound(20, 2).value == 0);
}

TEST_CASE("integer program")
{
    const auto r = ip_bound(8, 4);
    CHECK(r.value == 25);
    CHECK(r.witness.at(5) == 9);
    CHECK(ip_bound(9, 5).value == 54);
    for (std::int64_t d = 2; d <= 7; ++d)
        CHECK(ip_bound(d + 2, d).value == d * (d + 1) / 2);
    CHECK(ip_bound(7, 4).value == 20);
    CHECK(ip_bound(9, 6).value == 56);
    for (std::int64_t d : {3, 5, 7})
        CHECK(ip_bound(d + 3, d).value == (d + 3) * (d + 1) * (d - 1) / 6);
    for (std::int64_t d = 2; d <= 6; ++d)
        for (std::int64_t n = d + 2; n <= d + 6; ++n)
            CHECK(ip_bound(n, d).value == brute_ip(n, d));
    CHECK_THROWS_AS(ip_bound(20, 2), Error);
}

TEST_CASE("integer program is sound for verified constructions")
{
    for (std::size_t d = 2; d <= 6; ++d)
        for (std::size_t n = d + 2; n <= 11; ++n)
            CHECK(ip_bound(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)).value <=
                  static_cast<std::int64_t>(secant_profile(trivial_example(n, d)).ordinary()));
    for (std::size_t n = 8; n <= 14; ++n)
        CHECK(ip_bound(static_cast<std::int64_t>(n), 3).value <=
              static_cast<std::int64_t>(combinatorial_ordinary_count(prism_model(n)).ordinary()));
}

TEST_CASE("projection bounds")
{
    auto table_value = [](std::int64_t v) {
        return [v](std::int64_t n, std::int64_t d) {
            BoundResult r;
            r.n = n;
            r.d = d;
            r.value = v;
            r.method = "registry";
            return r;
        };
    };
    CHECK(projection_lower(10, 3, table_value(6)).value == 20);
    CHECK(projection_lower(13, 3, table_value(6)).value == 26);
    CHECK(projection_lower(10, 4, table_value(14)).value == 35);
    CHECK(projection_chain_cs(9, 3).value == 12);
    CHECK(projection_chain_cs(10, 4).value == 30);
}

TEST_CASE("best lower bounds")
{
    BoundCalculator calc;
    const auto a = calc.best_lower(9, 3);
    CHECK(a.value == 14);
    CHECK(a.note == "registry");
    const auto b = calc.best_lower(12, 5);
    CHECK(b.value == 132);
    CHECK(b.note == "project2");
    // The strongest available bound at (10,6) comes from the counting
    // constraints; the one-step projection used for the table gives 90.
    CHECK(calc.best_lower(10, 6).value == 105);
    CHECK(calc.standard_lower(10, 6).value == 90);
    CHECK_THROWS_AS(calc.best_lower(5, 4), Error);
}

TEST_CASE("best upper bounds")
{
    BoundCalculator calc;
    const auto a = calc.best_upper(8, 4);
    CHECK(a.value == 35);
    CHECK(a.note == "trivial");
    const auto b = calc.best_upper(9, 3);
    CHECK(b.value == 22);
    CHECK(b.note == "prism");
    const auto c = calc.best_upper(8, 5);
    CHECK(c.value == 32);
    CHECK(c.note == "dplus3_odd");
    CHECK(calc.best_upper(7, 3).value == 11);
}

TEST_CASE("lower never exceeds upper")
{
    BoundCalculator calc;
    for (std::int64_t n = 4; n <= 16; ++n)
        for (std::int64_t d = 2; d <= 7 && d + 2 <= n; ++d) {
            CHECK(calc.best_lower(n, d).value <= calc.best_upper(n, d).value);
            CHECK(calc.standard_lower(n, d).value <= calc.best_lower(n, d).value);
        }
}

TEST_CASE("a wrong closed form is caught")
{
    BoundCalculator calc;
    calc.override_formula("prism", [](std::int64_t n, std::int64_t) { return prism_formula(n) - 1; });
    try {
        calc.best_upper(10, 3);
        FAIL("expected VerificationFailure");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::VerificationFailure);
    }
    BoundCalculator clean;
    CHECK(clean.best_upper(10, 3).value == 20);
}

TEST_CASE("traces replay")
{
    BoundCalculator calc;
    for (std::int64_t n = 4; n <= 13; ++n)
        for (std::int64_t d = 2; d <= 7 && d + 2 <= n; ++d) {
            const auto lo = calc.best_lower(n, d);
            CHECK(replay(lo) == lo.value);
            const auto pl = calc.standard_lower(n, d);
            CHECK(replay(pl) == pl.value);
            const auto up = calc.best_upper(n, d);
            CHECK(replay(up) == up.value);
        }
    auto tampered = calc.best_lower(12, 5);
    tampered.value += 1;
    CHECK_THROWS_AS(replay(tampered), Error);
    auto witness = ip_bound(8, 4);
    witness.witness[5] = 10;
    CHECK_THROWS_AS(replay(witness), Error);
}

TEST_CASE("table cells")
{
    BoundCalculator calc;
    const auto t = generate_table(calc);
    CHECK(t.at(8, 3).text == "8");
    CHECK(t.at(9, 4).text == "18...56");
    CHECK(t.at(13, 5).text == "149...495");
    CHECK(t.at(4, 3).text == ".");
    CHECK(t.at(12, 6).text == ".");
    const auto best = generate_table(calc, 13, 7, TableProfile::Best);
    CHECK(best.at(10, 6).text == "105...126");
    CHECK(best.at(12, 6).text != ".");
    CHECK(normalize_cell(" 14..22 ") == "14...22");
    CHECK(normalize_cell("25....35") == "25...35");

    const auto md = render_markdown(t);
    CHECK(md.find("| 9 | 6 | 14...22 |") != std::string::npos);
    const auto csv = render_csv(t);
    CHECK(csv.substr(0, csv.find('\n')) == "n,2,3,4,5,6,7");
}

TEST_CASE("registry carries citations")
{
    for (const auto& [key, entry] : KnownValuesRegistry::instance().entries())
        CHECK_FALSE(entry.citation.empty());
    CHECK(KnownValuesRegistry::instance().find(9, 3)->lower == 14);
}
