#pragma once

#include "ssp/qbf.hpp"
#include "ssp/variants.hpp"

namespace ssp {

/// Gadget constructions turning quantified formulas into robust SAT instances
/// whose game decision equals the formula's truth value. Each throws
/// PrefixMismatch when handed the wrong quantifier shape.
///
/// Output variable numbering (shared convention): surviving original
/// variables packed from 1 in their original order, then the paired fresh
/// variables interleaved, then s, then s_1..s_n.

/// ∃X∀Y DNF → combinatorial interdiction over SAT. The matrix is negated
/// literal-wise into CNF, X-literals are substituted by positive literals of
/// fresh variables x_i^t / x_i^f, s is appended to every clause, and the
/// cheat-detection block (x_i^t ∨ ¬s_i)(x_i^f ∨ ¬s_i) and (¬s ∨ s_1 ∨ … ∨ s_n)
/// is added. Blockable: the positive x_i^t / x_i^f literals; threshold |X|.
CombInterdictionInstance gadget_interdiction(const QuantifiedFormula& f);

/// ∃X∀Y DNF → restricted regret over SAT. The matrix is negated literal-wise
/// into CNF and a fresh variable z is appended to every clause; bounds are
/// [0,1] on X-literals and on z / ¬z, [0,0] on Y-literals; quota |X|. The
/// output formula is always satisfiable (set z true).
RestrictedRegretInstance gadget_regret(const QuantifiedFormula& f);

/// ∃X∀Y∃Z CNF → combinatorial two-stage over SAT. Y-literals are substituted
/// by positive literals of fresh y_i^t / y_i^f, s is appended to every
/// clause, and the cheat-detection block over y_i^t / y_i^f is added. First
/// stage: all X-literals; blockable: the positive y_i^t / y_i^f literals;
/// gamma |Y|.
CombTwoStageInstance gadget_two_stage(const QuantifiedFormula& f);

}  // namespace ssp
