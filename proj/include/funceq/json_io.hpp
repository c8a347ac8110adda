#pragma once

#include <optional>

#include <json.hpp>

#include "funceq/alienation.hpp"
#include "funceq/fn_table.hpp"
#include "funceq/grid.hpp"
#include "funceq/inequality_lab.hpp"
#include "funceq/linear_solver.hpp"
#include "funceq/prime_field.hpp"
#include "funceq/rational.hpp"

namespace funceq {

using Json = nlohmann::json;

/// FnTable wire format: array of p residues, index = argument.
Json to_json(const FnTable& f);
FnTable fn_table_from_json(const PrimeField& field, const Json& j);

/// PairTable wire format: array of p rows of p residues.
Json to_json(const PairTable& t);

/// SolutionSpace wire format:
/// {"p": int, "dimension": int, "basis": [[2p residues], ...]}.
Json to_json(const SolutionSpace& space);
SolutionSpace solution_space_from_json(const Json& j, std::uint32_t modulus_cap);

/// Violations carry both evaluated sides.
Json to_json(const EquationViolation& v);
Json to_json(const GridViolation& v);

/// Per-prime degeneracy report:
/// {"p": int, "lemma_L": bool, "equivalence": bool, "alien_count": int}.
Json alienation_summary_json(const PrimeField& field);

/// Parses {"grid": {"m": int, "K": int}, "f": <fn>, "g": <fn>, "A": <fn>?}
/// where <fn> is "zero" | "linear:Q" | "abs:Q" | {"table": ["r", ...]} with Q
/// and each r a rational like "3" or "-1/2". Used by the CLI.
struct GridProblem {
    DyadicGrid grid;
    GridFunction f;
    GridFunction g;
    std::optional<GridFunction> A;
};

GridProblem grid_problem_from_json(const Json& j);

Json to_json(const GridFunction& f); // {"grid": {...}, "values": ["r", ...]}

} // namespace funceq
