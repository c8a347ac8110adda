#include "funceq/json_io.hpp"

#include <stdexcept>
#include <string>

namespace funceq {

Json to_json(const FnTable& f) {
    return Json(f.values());
}

FnTable fn_table_from_json(const PrimeField& field, const Json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("fn_table_from_json: expected an array of residues");
    }
    std::vector<std::uint32_t> values;
    values.reserve(j.size());
    for (const auto& entry : j) {
        if (!entry.is_number_integer()) {
            throw std::invalid_argument("fn_table_from_json: entries must be integers");
        }
        values.push_back(field.reduce(entry.get<std::int64_t>()));
    }
    return FnTable(field, std::move(values));
}

Json to_json(const PairTable& t) {
    Json rows = Json::array();
    const std::uint32_t p = t.modulus();
    for (std::uint32_t x = 0; x < p; ++x) {
        Json row = Json::array();
        for (std::uint32_t y = 0; y < p; ++y) row.push_back(t.value(x, y));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const SolutionSpace& space) {
    return Json{{"p", space.field().modulus()},
                {"dimension", space.dimension()},
                {"basis", space.basis()}};
}

SolutionSpace solution_space_from_json(const Json& j, std::uint32_t modulus_cap) {
    if (!j.is_object() || !j.contains("p") || !j.contains("dimension") || !j.contains("basis")) {
        throw std::invalid_argument(
            "solution_space_from_json: expected {\"p\", \"dimension\", \"basis\"}");
    }
    const PrimeField field(j.at("p").get<std::uint32_t>(), modulus_cap);
    std::vector<std::vector<std::uint32_t>> basis;
    for (const auto& row : j.at("basis")) {
        std::vector<std::uint32_t> vec;
        for (const auto& entry : row) {
            vec.push_back(field.reduce(entry.get<std::int64_t>()));
        }
        basis.push_back(std::move(vec));
    }
    if (basis.size() != j.at("dimension").get<std::size_t>()) {
        throw std::invalid_argument("solution_space_from_json: dimension/basis mismatch");
    }
    SolutionSpace space(field, 2 * static_cast<std::size_t>(field.modulus()), std::move(basis));
    return space;
}

Json to_json(const EquationViolation& v) {
    return Json{{"x", v.x}, {"y", v.y}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

Json to_json(const GridViolation& v) {
    return Json{{"x", format_rational(v.x)},
                {"y", format_rational(v.y)},
                {"lhs", format_rational(v.lhs)},
                {"rhs", format_rational(v.rhs)}};
}

Json alienation_summary_json(const PrimeField& field) {
    const bool doubling = pairing_kernel_doubles_to_zero(field);
    bool equivalence;
    if (field.modulus() >= 5) {
        equivalence = verify_equivalence_over_kernel(field);
    } else {
        // Out of theorem scope: report the equivalence as observed over the
        // exhaustive solution set instead of claiming it.
        equivalence = true;
        for (const auto& [f, g] : brute_force_solutions(field)) {
            equivalence = equivalence && alien_report(f, g).equivalent;
        }
    }
    return Json{{"p", field.modulus()},
                {"lemma_L", doubling},
                {"equivalence", equivalence},
                {"alien_count", alien_count(field)}};
}

namespace {

GridFunction grid_function_from_spec(const DyadicGrid& grid, const Json& spec,
                                     const char* name) {
    if (spec.is_string()) {
        const std::string text = spec.get<std::string>();
        if (text == "zero") return GridFunction::zero(grid);
        if (text.rfind("linear:", 0) == 0) {
            return GridFunction::linear(grid, parse_rational(text.substr(7)));
        }
        if (text.rfind("abs:", 0) == 0) {
            return GridFunction::abs_multiple(grid, parse_rational(text.substr(4)));
        }
        throw std::invalid_argument(std::string("grid function '") + name +
                                    "': unknown form '" + text + "'");
    }
    if (spec.is_object() && spec.contains("table")) {
        const Json& table = spec.at("table");
        if (!table.is_array()) {
            throw std::invalid_argument(std::string("grid function '") + name +
                                        "': \"table\" must be an array");
        }
        std::vector<Rat> values;
        values.reserve(table.size());
        for (const auto& entry : table) {
            if (entry.is_number_integer()) {
                values.push_back(Rat(entry.get<long long>()));
            } else if (entry.is_string()) {
                values.push_back(parse_rational(entry.get<std::string>()));
            } else {
                throw std::invalid_argument(std::string("grid function '") + name +
                                            "': table entries must be integers or strings");
            }
        }
        return GridFunction(grid, std::move(values));
    }
    throw std::invalid_argument(std::string("grid function '") + name +
                                "': expected \"zero\", \"linear:Q\", \"abs:Q\" or {\"table\": [...]}");
}

} // namespace

GridProblem grid_problem_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("grid") || !j.contains("f") || !j.contains("g")) {
        throw std::invalid_argument("grid problem: expected {\"grid\", \"f\", \"g\"[, \"A\"]}");
    }
    const Json& gj = j.at("grid");
    if (!gj.is_object() || !gj.contains("m") || !gj.contains("K")) {
        throw std::invalid_argument("grid problem: \"grid\" needs integer fields \"m\" and \"K\"");
    }
    const DyadicGrid grid(gj.at("m").get<unsigned>(), gj.at("K").get<unsigned>());
    GridFunction f = grid_function_from_spec(grid, j.at("f"), "f");
    GridFunction g = grid_function_from_spec(grid, j.at("g"), "g");
    std::optional<GridFunction> A;
    if (j.contains("A")) {
        A = grid_function_from_spec(grid, j.at("A"), "A");
    }
    return GridProblem{grid, std::move(f), std::move(g), std::move(A)};
}

Json to_json(const GridFunction& f) {
    Json values = Json::array();
    for (const Rat& v : f.values()) values.push_back(format_rational(v));
    return Json{{"grid", Json{{"m", f.grid().resolution()}, {"K", f.grid().half_width()}}},
                {"values", std::move(values)}};
}

} // namespace funceq
