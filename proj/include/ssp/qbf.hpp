#pragma once

#include <string>
#include <vector>

#include "ssp/ints.hpp"

namespace ssp {

/// Quantifier prefixes accepted by the gadget constructions.
enum class QbfShape {
    ExistsForallDnf,        // ∃X ∀Y, matrix a disjunction of terms
    ExistsForallExistsCnf,  // ∃X ∀Y ∃Z, matrix a conjunction of clauses
};

/// Prenex formula over globally numbered variables: block X is 1..num_x,
/// block Y follows, block Z (second shape only) comes last. rows holds the
/// matrix as signed-literal lists; a row is a term (conjunction) in DNF form
/// and a clause (disjunction) in CNF form. An empty term is true, an empty
/// clause is false, and an empty row list makes the whole DNF false and the
/// whole CNF true.
struct QuantifiedFormula {
    QbfShape shape = QbfShape::ExistsForallDnf;
    Int num_x = 0;
    Int num_y = 0;
    Int num_z = 0;
    std::vector<std::vector<Int>> rows;

    Int num_vars() const { return num_x + num_y + num_z; }
};

/// Structural diagnostics; empty means well formed.
std::vector<std::string> validate(const QuantifiedFormula& f);

/// Throws ValidationError with joined diagnostics when validate() is nonempty.
void require_valid(const QuantifiedFormula& f);

/// Builds a formula with each row canonicalized: literals ordered by
/// (variable, positive first) and deduplicated. Row order is preserved; rows
/// are never simplified, so contradictory or tautological rows survive.
QuantifiedFormula make_qbf(QbfShape shape, Int num_x, Int num_y, Int num_z,
                           std::vector<std::vector<Int>> rows);

/// Hard cap on total variables for exhaustive evaluation.
inline constexpr Int kQbfVarCap = 20;

/// Ground truth by full assignment enumeration under the quantifier prefix.
/// Throws CapExceeded when the formula has more than kQbfVarCap variables.
bool eval_qbf(const QuantifiedFormula& f);

}  // namespace ssp
