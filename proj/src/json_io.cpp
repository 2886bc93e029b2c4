#include "weylforge/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "weylforge/errors.hpp"

namespace weylforge {

namespace {

json number_or_null(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

const json& member(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ValidationError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

double number(const json& j, const char* what)
{
    if (!j.is_number())
        throw ValidationError(std::string(what) + " must be a number");
    return j.get<double>();
}

int integer(const json& j, const char* what)
{
    if (!j.is_number_integer())
        throw ValidationError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<double> number_array(const json& j, const char* what)
{
    if (!j.is_array())
        throw ValidationError(std::string(what) + " must be an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const json& v : j)
        out.push_back(number(v, what));
    return out;
}

std::vector<Vector> vector_list(const json& j, const char* what)
{
    if (!j.is_array())
        throw ValidationError(std::string(what) + " must be an array of vectors");
    std::vector<Vector> out;
    for (const json& v : j)
        out.push_back(number_array(v, what));
    return out;
}

json vector_list_json(const std::vector<Vector>& vs)
{
    json out = json::array();
    for (const Vector& v : vs)
        out.push_back(v);
    return out;
}

} // namespace

json to_json_value(const RootedPoly& f)
{
    return {{"roots", std::vector<double>(f.roots().begin(), f.roots().end())}};
}

json to_json_value(const SymMatrix& m)
{
    return {{"n", m.order()}, {"rows", m.rows()}};
}

json to_json_value(const Realization& r)
{
    return {{"f", to_json_value(r.f)},
            {"g", to_json_value(r.g)},
            {"p", r.p},
            {"q", r.q},
            {"A", to_json_value(r.A)},
            {"B", to_json_value(r.B)},
            {"plus", vector_list_json(r.plus)},
            {"minus", vector_list_json(r.minus)}};
}

json to_json_value(const BorderedRealization& r)
{
    return {{"f", to_json_value(r.f)}, {"g", to_json_value(r.g)}, {"M", to_json_value(r.M)}};
}

json to_json_value(const InterlaceReport& r)
{
    json violations = json::array();
    for (const Violation& v : r.violations)
        violations.push_back({{"i", v.index},
                              {"side", v.side == Side::lower ? "lower" : "upper"},
                              {"slack", number_or_null(v.slack)}});
    return {{"holds", r.holds},
            {"minimal_p", r.minimal_p},
            {"minimal_q", r.minimal_q},
            {"violations", violations}};
}

json to_json_value(const VerifyReport& r)
{
    json checks = json::array();
    for (const Check& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"residual", number_or_null(c.residual)},
                          {"threshold", number_or_null(c.threshold)}});
    return {{"passed", r.passed}, {"checks", checks}};
}

RootedPoly poly_from_json(const json& j)
{
    return RootedPoly(number_array(member(j, "roots"), "roots"));
}

SymMatrix matrix_from_json(const json& j)
{
    const int n = integer(member(j, "n"), "n");
    const json& rows = member(j, "rows");
    if (!rows.is_array() || n < 0 || rows.size() != static_cast<std::size_t>(n))
        throw ValidationError("matrix \"rows\" must hold n rows");
    std::vector<std::vector<double>> data;
    for (const json& row : rows)
        data.push_back(number_array(row, "matrix row"));
    return SymMatrix::from_rows(data);
}

Realization realization_from_json(const json& j)
{
    Realization r;
    r.f = poly_from_json(member(j, "f"));
    r.g = poly_from_json(member(j, "g"));
    r.p = integer(member(j, "p"), "p");
    r.q = integer(member(j, "q"), "q");
    r.A = matrix_from_json(member(j, "A"));
    r.B = matrix_from_json(member(j, "B"));
    r.plus = vector_list(member(j, "plus"), "plus");
    r.minus = vector_list(member(j, "minus"), "minus");
    return r;
}

BorderedRealization bordered_from_json(const json& j)
{
    return {poly_from_json(member(j, "f")), poly_from_json(member(j, "g")),
            matrix_from_json(member(j, "M"))};
}

json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        throw ValidationError("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

} // namespace weylforge
