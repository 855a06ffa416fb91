#include "ssp/gadgets.hpp"

#include <utility>

#include "ssp/errors.hpp"

namespace ssp {

namespace {

void require_shape(const QuantifiedFormula& f, QbfShape shape) {
    require_valid(f);
    if (f.shape != shape)
        throw PrefixMismatch(shape == QbfShape::ExistsForallDnf
                                 ? "gadget needs an ∃X ∀Y DNF formula"
                                 : "gadget needs an ∃X ∀Y ∃Z CNF formula");
}

// Cheat-detection block: (p_i ∨ ¬s_i)(q_i ∨ ¬s_i) per pair and the closing
// clause (¬s ∨ s_1 ∨ … ∨ s_n). pair_base numbers p_i = pair_base + 2i - 1,
// q_i = pair_base + 2i; s follows the last pair, s_i follow s.
void append_cheat_block(std::vector<std::vector<Int>>& clauses, Int pair_base,
                        Int n) {
    Int s = pair_base + 2 * n + 1;
    for (Int i = 1; i <= n; ++i) {
        Int s_i = s + i;
        clauses.push_back({pair_base + 2 * i - 1, -s_i});
        clauses.push_back({pair_base + 2 * i, -s_i});
    }
    std::vector<Int> closing{-s};
    for (Int i = 1; i <= n; ++i) closing.push_back(s + i);
    clauses.push_back(std::move(closing));
}

Subset pair_literals(Int pair_base, Int n) {
    Subset out;
    for (Int i = 1; i <= 2 * n; ++i) out.push_back(lit_elem(pair_base + i, false));
    canonicalize(out);
    return out;
}

}  // namespace

CombInterdictionInstance gadget_interdiction(const QuantifiedFormula& f) {
    require_shape(f, QbfShape::ExistsForallDnf);
    const Int nx = f.num_x, ny = f.num_y;
    // Survivors: Y packed to 1..ny. Fresh: x_i^t = ny+2i-1, x_i^f = ny+2i,
    // then s and s_1..s_nx.
    std::vector<std::vector<Int>> clauses;
    Int s = ny + 2 * nx + 1;
    for (const auto& term : f.rows) {
        std::vector<Int> clause;
        for (Int lit : term) {
            Int v = lit < 0 ? -lit : lit;
            if (v <= nx) {
                // negated X-literal, substituted: ¬x_i ↦ x_i^f, x_i ↦ x_i^t
                clause.push_back(lit > 0 ? ny + 2 * v : ny + 2 * v - 1);
            } else {
                Int y = v - nx;
                clause.push_back(lit > 0 ? -y : y);
            }
        }
        clause.push_back(s);
        clauses.push_back(std::move(clause));
    }
    append_cheat_block(clauses, ny, nx);
    Int total_vars = ny + 3 * nx + 1;
    CombInterdictionInstance out;
    out.base = SspInstance{ProblemKind::Satisfiability,
                           make_cnf(total_vars, std::move(clauses))};
    out.blockable = pair_literals(ny, nx);
    out.threshold = nx;
    require_valid(out);
    return out;
}

RestrictedRegretInstance gadget_regret(const QuantifiedFormula& f) {
    require_shape(f, QbfShape::ExistsForallDnf);
    const Int nx = f.num_x, ny = f.num_y;
    const Int z = nx + ny + 1;
    std::vector<std::vector<Int>> clauses;
    for (const auto& term : f.rows) {
        std::vector<Int> clause;
        for (Int lit : term) clause.push_back(-lit);
        clause.push_back(z);
        clauses.push_back(std::move(clause));
    }
    RestrictedRegretInstance out;
    out.base = SspInstance{ProblemKind::Satisfiability, make_cnf(z, std::move(clauses))};
    for (Int v = 1; v <= z; ++v) {
        bool uncertain = v <= nx || v == z;
        for (bool negated : {false, true}) {
            out.lower.emplace(lit_elem(v, negated), 0);
            out.upper.emplace(lit_elem(v, negated), uncertain ? 1 : 0);
        }
    }
    out.quota = nx;
    require_valid(out);
    return out;
}

CombTwoStageInstance gadget_two_stage(const QuantifiedFormula& f) {
    require_shape(f, QbfShape::ExistsForallExistsCnf);
    const Int nx = f.num_x, ny = f.num_y, nz = f.num_z;
    // Survivors: X stays 1..nx, Z packed to nx+1..nx+nz. Fresh: y_i^t/y_i^f
    // from nx+nz, then s and s_1..s_ny.
    const Int pair_base = nx + nz;
    Int s = pair_base + 2 * ny + 1;
    std::vector<std::vector<Int>> clauses;
    for (const auto& row : f.rows) {
        std::vector<Int> clause;
        for (Int lit : row) {
            Int v = lit < 0 ? -lit : lit;
            if (v <= nx) {
                clause.push_back(lit);
            } else if (v <= nx + ny) {
                Int i = v - nx;
                clause.push_back(lit > 0 ? pair_base + 2 * i - 1
                                         : pair_base + 2 * i);
            } else {
                Int zv = nx + (v - nx - ny);
                clause.push_back(lit > 0 ? zv : -zv);
            }
        }
        clause.push_back(s);
        clauses.push_back(std::move(clause));
    }
    append_cheat_block(clauses, pair_base, ny);
    Int total_vars = pair_base + 3 * ny + 1;
    CombTwoStageInstance out;
    out.base = SspInstance{ProblemKind::Satisfiability,
                           make_cnf(total_vars, std::move(clauses))};
    for (Int v = 1; v <= nx; ++v) {
        out.first_stage.push_back(lit_elem(v, false));
        out.first_stage.push_back(lit_elem(v, true));
    }
    canonicalize(out.first_stage);
    out.blockable = pair_literals(pair_base, ny);
    out.gamma = ny;
    require_valid(out);
    return out;
}

}  // namespace ssp
