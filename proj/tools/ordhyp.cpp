// Command-line front end: construct, analyze, project, bound, table, verify.
#include "ordhyp/bounds.hpp"
#include "ordhyp/error.hpp"
#include "ordhyp/families.hpp"
#include "ordhyp/incidence.hpp"
#include "ordhyp/io.hpp"
#include "ordhyp/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace ordhyp;

constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kVerification = 3;

int exit_code_for(ErrorKind kind)
{
    return kind == ErrorKind::VerificationFailure ? kVerification : kInvalid;
}

void emit(const Json& j, const std::string& out)
{
    if (out.empty())
        std::cout << j.dump(2) << '\n';
    else
        write_json(out, j);
}

struct ConstructArgs {
    std::string family;
    std::size_t n = 0;
    std::size_t d = 0;
    std::optional<std::size_t> variant;
    std::string backend = "exact";
    std::string out;
};

int run_construct(const ConstructArgs& a)
{
    const auto backend = parse_backend(a.backend);
    if (!backend) {
        std::cerr << "error: unknown backend '" << a.backend << "' (exact, float, comb)\n";
        return kUsage;
    }
    emit(to_json(construct({a.family, a.n, a.d, a.variant, *backend})), a.out);
    return 0;
}

struct AnalyzeArgs {
    std::string file;
    bool per_point = false;
    bool hyperplanes = false;
    bool identities = false;
    std::optional<double> eps;
    int threads = 0;
    bool skip_validation = false;
    std::string out;
};

int run_analyze(const AnalyzeArgs& a)
{
    const auto input = read_construction(a.file);
    const bool keep = a.hyperplanes || a.per_point;
    const double eps = a.eps.value_or(default_eps());

    SecantProfile p;
    std::optional<IntsReport> ints;
    if (const auto* c = std::get_if<Configuration>(&input)) {
        ProfileOptions opt;
        opt.validate = !a.skip_validation;
        opt.keep_hyperplanes = keep;
        opt.threads = a.threads;
        p = secant_profile(*c, opt);
        if (a.identities && p.degenerate_subsets.empty())
            ints = check_ints(*c);
    } else if (const auto* nc = std::get_if<NumericConfiguration>(&input)) {
        p = secant_profile_numeric(*nc, eps, keep, a.threads);
    } else {
        p = combinatorial_ordinary_count(std::get<CombinatorialModel>(input), keep);
    }

    ProfileJsonOptions jo;
    jo.hyperplanes = a.hyperplanes;
    jo.per_point = a.per_point;
    jo.identities = true;
    auto j = to_json(p, jo);
    bool ok = p.degenerate_subsets.empty() ? check_trivcount(p) : true;
    if (p.n >= p.d + 2 && p.degenerate_subsets.empty())
        ok = ok && check_bettercount(p);
    if (ints) {
        j["identities"]["ints"] = ints->ok;
        if (!ints->ok)
            j["identities"]["ints_witness"] = ints->witness;
        ok = ok && ints->ok;
    }
    emit(j, a.out);
    if (a.identities && !ok) {
        std::cerr << "error: a counting identity failed\n";
        return kVerification;
    }
    return 0;
}

struct ProjectArgs {
    std::string file;
    std::size_t point = 0;
    bool pigeonhole = false;
    int threads = 0;
    std::string out;
};

int run_project(const ProjectArgs& a)
{
    const auto input = read_construction(a.file);
    const auto* c = std::get_if<Configuration>(&input);
    if (!c)
        throw Error(ErrorKind::UnsupportedBackend, "projection needs an exact configuration");
    const auto projected = project_from_point(*c, a.point);

    ProfileOptions opt;
    opt.keep_hyperplanes = true;
    opt.threads = a.threads;
    const auto source = secant_profile(*c, opt);
    const auto per = per_point_ordinary(source);
    const auto image = secant_profile(projected, opt);

    Json summary;
    summary["n"] = c->size();
    summary["d"] = c->dim();
    summary["point"] = a.point;
    summary["ordinary"] = source.ordinary();
    summary["ordinary_through_point"] = per[a.point];
    summary["projected_ordinary"] = image.ordinary();
    int status = 0;
    if (image.ordinary() != per[a.point]) {
        std::cerr << "error: projected count differs from the count through the point\n";
        status = kVerification;
    }
    if (a.pigeonhole) {
        const auto min_it = std::min_element(per.begin(), per.end());
        const auto lhs = c->dim() * source.ordinary();
        const auto rhs = c->size() * *min_it;
        Json ph;
        ph["point"] = static_cast<std::size_t>(min_it - per.begin());
        ph["ordinary_through_point"] = *min_it;
        ph["inequality"] = std::to_string(c->dim()) + "*" + std::to_string(source.ordinary()) +
                           " >= " + std::to_string(c->size()) + "*" + std::to_string(*min_it);
        ph["holds"] = lhs >= rhs;
        ph["equality"] = lhs == rhs;
        summary["pigeonhole"] = std::move(ph);
        if (lhs < rhs) {
            std::cerr << "error: pigeonhole inequality fails\n";
            status = kVerification;
        }
    }
    if (a.out.empty()) {
        Json both;
        both["summary"] = std::move(summary);
        both["configuration"] = to_json(projected);
        std::cout << both.dump(2) << '\n';
    } else {
        write_json(a.out, to_json(projected));
        std::cout << summary.dump(2) << '\n';
    }
    return status;
}

struct BoundArgs {
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::string method = "best";
    bool upper = false;
};

int run_bound(const BoundArgs& a)
{
    BoundCalculator calc;
    BoundResult r;
    if (a.upper)
        r = calc.best_upper(a.n, a.d);
    else if (a.method == "best")
        r = calc.best_lower(a.n, a.d);
    else if (a.method == "standard")
        r = calc.standard_lower(a.n, a.d);
    else if (a.method == "ip")
        r = ip_bound(a.n, a.d);
    else if (a.method == "project2")
        r = projection_chain_cs(a.n, a.d);
    else if (a.method == "smalls")
        r = smalls_bound(a.n, a.d);
    else if (a.method == "cs") {
        if (a.d != 2)
            throw Error(ErrorKind::UnsupportedDimension, "the Csima-Sawyer bound is for d = 2");
        r = csima_sawyer_bound(a.n);
    }
    replay(r);
    std::cout << to_json(r).dump(2) << '\n';
    return 0;
}

struct TableArgs {
    std::string format = "md";
    std::string profile = "standard";
    std::int64_t n_max = 13;
    std::int64_t d_max = 7;
};

int run_table(const TableArgs& a)
{
    BoundCalculator calc;
    const auto t = generate_table(calc, a.n_max, a.d_max,
                                  a.profile == "best" ? TableProfile::Best : TableProfile::Standard);
    if (a.format == "csv")
        std::cout << render_csv(t);
    else if (a.format == "json")
        std::cout << render_json(t) << '\n';
    else
        std::cout << render_markdown(t);
    return 0;
}

struct VerifyArgs {
    std::optional<std::string> only;
    bool properties = false;
    std::uint64_t seed = 1;
    std::size_t configs = 200;
    int threads = 0;
    std::vector<std::string> faults;
    bool quiet = false;
};

int run_verify(const VerifyArgs& a)
{
    VerifyOptions o;
    o.only = a.properties ? std::optional<std::string>("properties") : a.only;
    o.seed = a.seed;
    o.threads = a.threads;
    o.property_configs = a.configs;
    for (const auto& family : a.faults) {
        std::function<std::int64_t(std::int64_t, std::int64_t)> base;
        if (family == "polygon")
            base = [](std::int64_t n, std::int64_t) { return polygon_formula(n); };
        else if (family == "prism")
            base = [](std::int64_t n, std::int64_t) { return prism_formula(n); };
        else if (family == "trivial")
            base = trivial_formula;
        else if (family == "dplus3_odd")
            base = [](std::int64_t, std::int64_t d) { return dplus3_odd_formula(d); };
        else {
            std::cerr << "error: unknown family '" << family << "' for --inject-fault\n";
            return kUsage;
        }
        o.formula_overrides[family] = [base](std::int64_t n, std::int64_t d) { return base(n, d) + 1; };
    }

    const auto claims = run_verification(o);
    std::size_t failed = 0;
    std::printf("%-3s %-18s %-64s %-22s %-22s %s\n", "#", "group", "reference", "computed", "expected", "status");
    for (const auto& c : claims) {
        failed += c.pass ? 0 : 1;
        if (a.quiet && c.pass)
            continue;
        std::printf("%-3d %-18s %-64s %-22s %-22s %s\n", c.criterion, c.group.c_str(), c.reference.c_str(),
                    c.computed.c_str(), c.expected.c_str(), c.pass ? "PASS" : "FAIL");
    }
    std::printf("%zu claims, %zu failed\n", claims.size(), failed);
    return failed == 0 && !claims.empty() ? 0 : kVerification;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ordinary hyperplanes of point sets in real projective space"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct_cmd = app.add_subcommand("construct", "Build an example configuration");
    construct_cmd->add_option("--family", ca.family, "polygon, prism, trivial, cube, broken_fano, dplus3_odd")
        ->required();
    construct_cmd->add_option("--n", ca.n, "Number of points");
    construct_cmd->add_option("--d", ca.d, "Projective dimension");
    construct_cmd->add_option("--variant", ca.variant, "Deleted point (odd prism, cube minus a vertex)");
    construct_cmd->add_option("--backend", ca.backend, "exact, float or comb");
    construct_cmd->add_option("--out", ca.out, "Output file (stdout when omitted)");

    AnalyzeArgs aa;
    auto* analyze_cmd = app.add_subcommand("analyze", "Secant profile of a configuration file");
    analyze_cmd->add_option("file", aa.file)->required();
    analyze_cmd->add_flag("--per-point", aa.per_point, "Ordinary hyperplanes through each point");
    analyze_cmd->add_flag("--hyperplanes", aa.hyperplanes, "List every spanned hyperplane");
    analyze_cmd->add_flag("--check-identities", aa.identities, "Also run the (d+2)-subset check; exit 3 on failure");
    analyze_cmd->add_option("--eps", aa.eps, "Tolerance for float input")->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--threads", aa.threads, "Worker threads (0 = runtime default)");
    analyze_cmd->add_flag("--skip-validation", aa.skip_validation, "Record degenerate subsets instead of failing");
    analyze_cmd->add_option("--out", aa.out, "Output file (stdout when omitted)");

    ProjectArgs pa;
    auto* project_cmd = app.add_subcommand("project", "Project a configuration from one of its points");
    project_cmd->add_option("file", pa.file)->required();
    project_cmd->add_option("--point", pa.point, "Index of the centre")->required();
    project_cmd->add_flag("--check-pigeonhole", pa.pigeonhole, "Check d*N >= n*N_x for the minimising x");
    project_cmd->add_option("--threads", pa.threads, "Worker threads (0 = runtime default)");
    project_cmd->add_option("--out", pa.out, "Write the projected configuration here");

    BoundArgs ba;
    auto* bound_cmd = app.add_subcommand("bound", "Bound on the minimum number of ordinary hyperplanes");
    bound_cmd->add_option("--n", ba.n)->required();
    bound_cmd->add_option("--d", ba.d)->required();
    bound_cmd->add_option("--method", ba.method)
        ->check(CLI::IsMember({"best", "standard", "ip", "project2", "smalls", "cs"}));
    bound_cmd->add_flag("--upper", ba.upper, "Best certified upper bound instead");

    TableArgs ta;
    auto* table_cmd = app.add_subcommand("table", "Table of small values");
    table_cmd->add_option("--format", ta.format)->check(CLI::IsMember({"md", "csv", "json"}));
    table_cmd->add_option("--profile", ta.profile, "standard or best")->check(CLI::IsMember({"standard", "best"}));
    table_cmd->add_option("--n-max", ta.n_max)->check(CLI::Range(4, static_cast<int>(kMaxN)));
    table_cmd->add_option("--d-max", ta.d_max)->check(CLI::Range(2, 20));

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Run the reproduction suite");
    verify_cmd->add_option("--only", va.only, "Run one group")->check(CLI::IsMember(verification_groups()));
    verify_cmd->add_flag("--properties", va.properties, "Run only the randomized property suite");
    verify_cmd->add_option("--seed", va.seed, "Seed for randomized sampling");
    verify_cmd->add_option("--configs", va.configs, "Random configurations in the property suite");
    verify_cmd->add_option("--threads", va.threads, "Worker threads (0 = runtime default)");
    verify_cmd->add_option("--inject-fault", va.faults, "Off-by-one a family's closed form");
    verify_cmd->add_flag("--failures-only", va.quiet, "Print failing claims only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*construct_cmd)
            return run_construct(ca);
        if (*analyze_cmd)
            return run_analyze(aa);
        if (*project_cmd)
            return run_project(pa);
        if (*bound_cmd)
            return run_bound(ba);
        if (*table_cmd)
            return run_table(ta);
        if (*verify_cmd)
            return run_verify(va);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what();
        if (!e.witness().empty()) {
            std::cerr << " [witness:";
            for (auto i : e.witness())
                std::cerr << ' ' << i;
            std::cerr << ']';
        }
        std::cerr << '\n';
        return exit_code_for(e.kind());
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: ParseError: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return kUsage;
}
