#include "ordhyp/io.hpp"

#include "ordhyp/error.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace ordhyp {

namespace {

[[noreturn]] void parse_error(const std::string& what)
{
    throw Error(ErrorKind::ParseError, what);
}

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name))
        parse_error(std::string("missing field '") + name + "'");
    return j.at(name);
}

std::size_t read_dim(const Json& j)
{
    const auto& dim = field(j, "dim");
    if (!dim.is_number_integer() || dim.get<long long>() < 2)
        parse_error("'dim' must be an integer >= 2");
    return dim.get<std::size_t>();
}

std::string read_label(const Json& j)
{
    if (j.contains("label") && j.at("label").is_string())
        return j.at("label").get<std::string>();
    return {};
}

double read_double(const Json& v)
{
    if (v.is_number())
        return v.get<double>();
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        std::size_t used = 0;
        double out = 0.0;
        try {
            out = std::stod(s, &used);
        } catch (const std::exception&) {
            parse_error("bad number '" + s + "'");
        }
        if (used != s.size())
            parse_error("bad number '" + s + "'");
        return out;
    }
    parse_error("coordinate must be a number or string");
}

Rational read_rational(const Json& v)
{
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(Integer(std::to_string(v.get<long long>())));
    parse_error("exact coordinates must be strings \"p/q\" or integers");
}

Json profile_tau(const SecantProfile& p)
{
    Json tau = Json::object();
    for (const auto& [i, count] : p.tau)
        tau[std::to_string(i)] = count;
    return tau;
}

} // namespace

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json to_json(const Configuration& c)
{
    Json j;
    j["dim"] = c.dim();
    j["label"] = c.label();
    Json pts = Json::array();
    for (const auto& p : c.points()) {
        Json row = Json::array();
        for (const auto& x : p.coords())
            row.push_back(x.get_str());
        pts.push_back(std::move(row));
    }
    j["points"] = std::move(pts);
    return j;
}

Json to_json(const NumericConfiguration& c)
{
    Json j;
    j["backend"] = "float";
    j["dim"] = c.dim;
    j["label"] = c.label;
    Json pts = Json::array();
    for (const auto& p : c.points) {
        Json row = Json::array();
        for (double x : p)
            row.push_back(format_double(x));
        pts.push_back(std::move(row));
    }
    j["points"] = std::move(pts);
    return j;
}

Json to_json(const CombinatorialModel& m)
{
    Json j;
    j["backend"] = "comb";
    j["dim"] = m.dim;
    j["label"] = m.label;
    j["labels"] = m.labels;
    j["blocks"] = m.blocks;
    return j;
}

Json to_json(const Construction& c)
{
    return std::visit([](const auto& v) { return to_json(v); }, c);
}

Configuration configuration_from_json(const Json& j)
{
    const std::size_t dim = read_dim(j);
    const auto& pts = field(j, "points");
    if (!pts.is_array())
        parse_error("'points' must be an array");
    std::vector<ProjectivePoint> points;
    for (const auto& row : pts) {
        if (!row.is_array() || row.size() != dim + 1)
            parse_error("every point needs dim + 1 coordinates");
        std::vector<Rational> v;
        for (const auto& x : row)
            v.push_back(read_rational(x));
        try {
            points.emplace_back(std::span<const Rational>(v));
        } catch (const Error& e) {
            parse_error(std::string("point ") + std::to_string(points.size()) + ": " + e.what());
        }
    }
    try {
        return Configuration(dim, std::move(points), read_label(j));
    } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, e.what(), e.witness());
    }
}

Construction construction_from_json(const Json& j)
{
    if (!j.is_object())
        parse_error("configuration file must hold a JSON object");
    const std::string backend = j.contains("backend") ? j.at("backend").get<std::string>() : "exact";
    if (backend == "exact")
        return configuration_from_json(j);
    if (backend == "float") {
        NumericConfiguration c;
        c.dim = read_dim(j);
        c.label = read_label(j);
        for (const auto& row : field(j, "points")) {
            if (!row.is_array() || row.size() != c.dim + 1)
                parse_error("every point needs dim + 1 coordinates");
            std::vector<double> v;
            for (const auto& x : row)
                v.push_back(read_double(x));
            c.points.push_back(std::move(v));
        }
        return c;
    }
    if (backend == "comb") {
        CombinatorialModel m;
        m.dim = read_dim(j);
        m.label = read_label(j);
        try {
            m.labels = field(j, "labels").get<std::vector<std::string>>();
            m.blocks = field(j, "blocks").get<std::vector<Block>>();
        } catch (const nlohmann::json::exception& e) {
            parse_error(e.what());
        }
        for (const auto& b : m.blocks)
            for (auto i : b)
                if (i >= m.labels.size())
                    parse_error("block references an unknown point");
        return m;
    }
    parse_error("unknown backend '" + backend + "'");
}

Construction read_construction(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        parse_error("cannot open '" + path.string() + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        parse_error(path.string() + ": " + e.what());
    }
    return construction_from_json(j);
}

void write_json(const std::filesystem::path& path, const Json& j)
{
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::ParseError, "cannot write '" + path.string() + "'");
    out << j.dump(2) << '\n';
}

Json to_json(const SecantProfile& p, const ProfileJsonOptions& options)
{
    Json j;
    j["n"] = p.n;
    j["d"] = p.d;
    j["ordinary"] = p.ordinary();
    j["tau"] = profile_tau(p);
    if (options.identities) {
        Json ids;
        ids["trivcount"] = check_trivcount(p);
        if (p.n >= p.d + 2)
            ids["bettercount"] = check_bettercount(p);
        j["identities"] = std::move(ids);
    }
    if (options.per_point)
        j["per_point"] = per_point_ordinary(p);
    if (options.hyperplanes) {
        Json list = Json::array();
        for (std::size_t i = 0; i < p.blocks.size(); ++i) {
            Json h;
            if (i < p.planes.size()) {
                Json coeffs = Json::array();
                for (const auto& x : p.planes[i].coords())
                    coeffs.push_back(x.get_str());
                h["coeffs"] = std::move(coeffs);
            } else if (i < p.numeric_planes.size()) {
                Json coeffs = Json::array();
                for (double x : p.numeric_planes[i])
                    coeffs.push_back(format_double(x));
                h["coeffs"] = std::move(coeffs);
            }
            h["points"] = p.blocks[i];
            list.push_back(std::move(h));
        }
        j["hyperplanes"] = std::move(list);
    }
    if (!p.degenerate_subsets.empty())
        j["degenerate_subsets"] = p.degenerate_subsets;
    return j;
}

Json to_json(const BoundResult& r)
{
    Json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["kind"] = std::string(to_string(r.kind));
    j["value"] = r.value;
    j["method"] = r.method;
    if (!r.note.empty())
        j["note"] = r.note;
    if (!r.witness.empty()) {
        Json w = Json::object();
        for (const auto& [i, t] : r.witness)
            w[std::to_string(i)] = t;
        j["witness"] = std::move(w);
    }
    if (!r.inputs.empty()) {
        Json trace = Json::array();
        for (const auto& sub : r.inputs)
            trace.push_back(to_json(sub));
        j["trace"] = std::move(trace);
    }
    return j;
}

Json to_json(const Table& t)
{
    Json j;
    j["profile"] = t.profile == TableProfile::Standard ? "standard" : "best";
    j["n_range"] = {t.n_min, t.n_max};
    j["d_range"] = {t.d_min, t.d_max};
    Json cells = Json::array();
    for (const auto& c : t.cells) {
        Json cell;
        cell["n"] = c.n;
        cell["d"] = c.d;
        cell["text"] = c.text;
        if (c.shown) {
            cell["lower"] = c.lower.value;
            cell["lower_method"] = c.lower.note;
            cell["upper"] = c.upper.value;
            cell["upper_method"] = c.upper.note;
        }
        cells.push_back(std::move(cell));
    }
    j["cells"] = std::move(cells);
    Json reference = Json::object();
    for (auto n = t.n_min; n <= t.n_max; ++n)
        reference[std::to_string(n)] = n / 2;
    j["reference_floor_half"] = std::move(reference);
    return j;
}

} // namespace ordhyp

namespace ordhyp {

std::string render_json(const Table& t)
{
    return to_json(t).dump(2) + "\n";
}

} // namespace ordhyp
