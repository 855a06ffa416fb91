#include "ssp/generators.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "ssp/errors.hpp"
#include "ssp/io.hpp"

namespace ssp {

FixtureRng::FixtureRng(std::uint64_t seed, std::string_view label, std::uint64_t index) {
    std::uint64_t h = fnv1a(label) ^ seed;
    for (int i = 0; i < 8; ++i) {
        h ^= (index >> (8 * i)) & 0xff;
        h *= 1099511628211ULL;
    }
    gen_.seed(h);
}

std::uint64_t FixtureRng::next() { return gen_(); }

Int FixtureRng::below(Int n) { return static_cast<Int>(next() % static_cast<std::uint64_t>(n)); }

Int FixtureRng::between(Int lo, Int hi) { return lo + below(hi - lo + 1); }

bool FixtureRng::flip() { return (next() & 1) != 0; }

namespace {

// --- base-instance builders -------------------------------------------------

SspInstance gen_sat(FixtureRng& rng, Int max_vars, Int max_clauses, Int max_size) {
    Int n = rng.between(0, max_vars);
    std::vector<std::vector<Int>> clauses;
    if (n > 0) {
        Int m = rng.between(0, max_clauses);
        for (Int j = 0; j < m; ++j) {
            Int size = rng.between(0, max_size);
            std::vector<Int> cl;
            for (Int i = 0; i < size; ++i) {
                Int v = rng.between(1, n);
                cl.push_back(rng.flip() ? v : -v);
            }
            clauses.push_back(std::move(cl));
        }
    }
    return SspInstance{ProblemKind::Satisfiability, make_cnf(n, std::move(clauses))};
}

std::vector<Int> random_clause_vars(FixtureRng& rng, Int n) {
    std::vector<Int> vars(static_cast<std::size_t>(n));
    std::iota(vars.begin(), vars.end(), 1);
    for (std::size_t i = 0; i < 3; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(static_cast<Int>(vars.size() - i)));
        std::swap(vars[i], vars[j]);
    }
    vars.resize(3);
    return vars;
}

/// Tautology-free 3-SAT: every clause uses three distinct variables.
SspInstance gen_3sat(FixtureRng& rng, Int max_vars, Int max_clauses) {
    Int n = rng.below(4) == 0 ? rng.between(0, 2) : std::min<Int>(3, max_vars);
    std::vector<std::vector<Int>> clauses;
    if (n >= 3) {
        Int m = rng.between(0, max_clauses);
        for (Int j = 0; j < m; ++j) {
            std::vector<Int> cl = random_clause_vars(rng, n);
            for (Int& lit : cl)
                if (rng.flip()) lit = -lit;
            clauses.push_back(std::move(cl));
        }
    }
    return SspInstance{ProblemKind::ThreeSatisfiability, make_cnf(n, std::move(clauses))};
}

std::vector<std::pair<Int, Int>> random_edges(FixtureRng& rng, Int n) {
    std::vector<std::pair<Int, Int>> edges;
    for (Int a = 1; a <= n; ++a)
        for (Int b = a + 1; b <= n; ++b)
            if (rng.flip()) edges.emplace_back(a, b);
    return edges;
}

std::vector<std::pair<Int, Int>> random_arcs(FixtureRng& rng, Int n) {
    std::vector<std::pair<Int, Int>> arcs;
    for (Int a = 1; a <= n; ++a)
        for (Int b = 1; b <= n; ++b)
            if (a != b && rng.flip()) arcs.emplace_back(a, b);
    return arcs;
}

/// Isolated-vertex-free cover source with k <= |V|, the regime the
/// cover-based constructions assume.
SspInstance gen_vertex_cover(FixtureRng& rng, Int max_n) {
    Int n = rng.between(2, max_n);
    auto edges = random_edges(rng, n);
    std::vector<char> touched(static_cast<std::size_t>(n) + 1, 0);
    for (auto [a, b] : edges) {
        touched[static_cast<std::size_t>(a)] = 1;
        touched[static_cast<std::size_t>(b)] = 1;
    }
    for (Int v = 1; v <= n; ++v) {
        if (touched[static_cast<std::size_t>(v)]) continue;
        Int w = rng.between(1, n - 1);
        if (w >= v) ++w;
        edges.emplace_back(std::min(v, w), std::max(v, w));
        touched[static_cast<std::size_t>(v)] = 1;
        touched[static_cast<std::size_t>(w)] = 1;
    }
    GraphKPayload p;
    p.n = n;
    p.edges = normalize_edges(std::move(edges));
    p.k = rng.between(0, n);
    return SspInstance{ProblemKind::VertexCover, std::move(p)};
}

SspInstance gen_independent_set(FixtureRng& rng, Int max_n) {
    GraphKPayload p;
    p.n = rng.between(0, max_n);
    p.edges = normalize_edges(random_edges(rng, p.n));
    p.k = p.n == 0 ? 0 : rng.between(0, p.n);
    return SspInstance{ProblemKind::IndependentSet, std::move(p)};
}

std::vector<Int> gen_values(FixtureRng& rng, Int max_count, Int max_value) {
    Int count = rng.between(0, max_count);
    std::vector<Int> values(static_cast<std::size_t>(count));
    for (Int& v : values) v = rng.between(0, max_value);
    return values;
}

SspInstance gen_subset_sum(FixtureRng& rng) {
    SubsetSumPayload p;
    p.values = gen_values(rng, 6, 40);
    if (rng.flip()) {
        for (Int v : p.values)
            if (rng.flip()) p.target += v;
    } else {
        Int total = std::accumulate(p.values.begin(), p.values.end(), Int{0});
        p.target = rng.between(0, total + 5);
    }
    return SspInstance{ProblemKind::SubsetSum, std::move(p)};
}

SspInstance gen_partition(FixtureRng& rng) {
    PartitionPayload p;
    p.values = gen_values(rng, 6, 40);
    Int total = std::accumulate(p.values.begin(), p.values.end(), Int{0});
    if (!p.values.empty() && total % 2 != 0 && rng.flip()) {
        p.values.back() += 1;
    }
    return SspInstance{ProblemKind::Partition, std::move(p)};
}

SspInstance gen_dham_path(FixtureRng& rng, Int max_n) {
    DhamPathPayload p;
    p.n = rng.between(2, max_n);
    p.s = rng.between(1, p.n);
    p.t = rng.between(1, p.n - 1);
    if (p.t >= p.s) ++p.t;
    auto arcs = random_arcs(rng, p.n);
    std::erase_if(arcs, [&](const std::pair<Int, Int>& a) { return a.first == p.t; });
    p.arcs = normalize_arcs(std::move(arcs));
    return SspInstance{ProblemKind::DirectedHamiltonianPath, std::move(p)};
}

SspInstance gen_dham_cycle(FixtureRng& rng, Int max_n) {
    DigraphPayload p;
    p.n = rng.between(1, max_n);
    p.arcs = normalize_arcs(random_arcs(rng, p.n));
    return SspInstance{ProblemKind::DirectedHamiltonianCycle, std::move(p)};
}

SspInstance gen_uham_cycle(FixtureRng& rng, Int max_n) {
    GraphPayload p;
    p.n = rng.between(3, max_n);
    p.edges = normalize_edges(random_edges(rng, p.n));
    return SspInstance{ProblemKind::UndirectedHamiltonianCycle, std::move(p)};
}

SspInstance gen_2ddp(FixtureRng& rng, Int max_n) {
    TwoDppPayload p;
    p.n = rng.between(4, max_n);
    std::vector<Int> vertices(static_cast<std::size_t>(p.n));
    std::iota(vertices.begin(), vertices.end(), 1);
    for (std::size_t i = 0; i < 4; ++i) {
        std::size_t j =
            i + static_cast<std::size_t>(rng.below(static_cast<Int>(vertices.size() - i)));
        std::swap(vertices[i], vertices[j]);
    }
    p.s1 = vertices[0];
    p.t1 = vertices[1];
    p.s2 = vertices[2];
    p.t2 = vertices[3];
    auto arcs = random_arcs(rng, p.n);
    if (rng.flip()) {
        arcs.emplace_back(p.s1, p.t1);
        arcs.emplace_back(p.s2, p.t2);
    }
    p.arcs = normalize_arcs(std::move(arcs));
    return SspInstance{ProblemKind::DirectedTwoDisjointPath, std::move(p)};
}

SspInstance gen_variant_base(ProblemKind kind, FixtureRng& rng) {
    switch (kind) {
        case ProblemKind::ThreeSatisfiability: {
            Int n = rng.below(4) == 0 ? rng.between(0, 2) : 3;
            std::vector<std::vector<Int>> clauses;
            if (n == 3) {
                Int m = rng.between(1, 2);
                for (Int j = 0; j < m; ++j) {
                    std::vector<Int> cl = random_clause_vars(rng, n);
                    for (Int& lit : cl)
                        if (rng.flip()) lit = -lit;
                    clauses.push_back(std::move(cl));
                }
            }
            return SspInstance{ProblemKind::ThreeSatisfiability,
                               make_cnf(n, std::move(clauses))};
        }
        case ProblemKind::VertexCover:
            return gen_vertex_cover(rng, 4);
        default:
            throw KindMismatch("no variant fixture generator for " + kind_id(kind));
    }
}

Subset random_subset(FixtureRng& rng, const Universe& u) {
    Subset s;
    for (const auto& e : u.elements())
        if (rng.flip()) s.push_back(e);
    return s;
}

SspInstance gen_solvable_base(ProblemKind kind, FixtureRng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        SspInstance base = gen_variant_base(kind, rng);
        Budget probe;
        if (has_solution(base, probe)) return base;
    }
    throw Error("could not draw a solvable base instance");
}

void fill_binary_bounds(FixtureRng& rng, const Universe& u, CostMap& lower, CostMap& upper) {
    for (const auto& e : u.elements()) {
        switch (rng.below(3)) {
            case 0:
                lower.emplace(e, 0);
                upper.emplace(e, 0);
                break;
            case 1:
                lower.emplace(e, 0);
                upper.emplace(e, 1);
                break;
            default:
                lower.emplace(e, 1);
                upper.emplace(e, 1);
                break;
        }
    }
}

}  // namespace

SspInstance random_source(const std::string& reduction_id, std::uint64_t seed,
                          std::uint64_t index) {
    FixtureRng rng(seed, reduction_id, index);
    if (reduction_id == "sat_to_3sat") return gen_sat(rng, 3, 3, 4);
    if (reduction_id == "3sat_to_vertex_cover" || reduction_id == "3sat_to_independent_set" ||
        reduction_id == "3sat_to_subset_sum" || reduction_id == "3sat_to_dham_path" ||
        reduction_id == "3sat_to_steiner_tree")
        return gen_3sat(rng, 3, 3);
    if (reduction_id == "3sat_to_2ddp") return gen_3sat(rng, 3, 1);
    if (reduction_id == "independent_set_to_clique") return gen_independent_set(rng, 6);
    if (reduction_id == "vertex_cover_to_dominating_set") return gen_vertex_cover(rng, 4);
    if (reduction_id == "vertex_cover_to_feedback_arc_set") return gen_vertex_cover(rng, 3);
    if (reduction_id == "vertex_cover_to_ufl" || reduction_id == "vertex_cover_to_p_center" ||
        reduction_id == "vertex_cover_to_p_median")
        return gen_vertex_cover(rng, 5);
    if (reduction_id == "vertex_cover_to_set_cover" ||
        reduction_id == "vertex_cover_to_hitting_set" ||
        reduction_id == "vertex_cover_to_feedback_vertex_set")
        return gen_vertex_cover(rng, 6);
    if (reduction_id == "subset_sum_to_knapsack" || reduction_id == "subset_sum_to_partition")
        return gen_subset_sum(rng);
    if (reduction_id == "partition_to_two_machine_scheduling") return gen_partition(rng);
    if (reduction_id == "dham_path_to_dham_cycle") return gen_dham_path(rng, 6);
    if (reduction_id == "dham_cycle_to_uham_cycle") return gen_dham_cycle(rng, 6);
    if (reduction_id == "uham_cycle_to_tsp") return gen_uham_cycle(rng, 6);
    if (reduction_id == "2ddp_to_kddp") return gen_2ddp(rng, 6);
    throw Error("no fixture generator for reduction " + reduction_id);
}

SspInstance random_chain_sat(std::uint64_t seed, std::uint64_t index) {
    FixtureRng rng(seed, "chain-sat", index);
    Int shape = rng.below(10);
    std::vector<std::vector<Int>> clauses;
    Int n;
    if (shape < 3) {
        n = rng.between(1, 3);
    } else if (shape < 7) {
        n = 3;
        std::vector<Int> cl = random_clause_vars(rng, n);
        for (Int& lit : cl)
            if (rng.flip()) lit = -lit;
        clauses.push_back(std::move(cl));
    } else {
        // width-3 clause on two variables; the repeated slot keeps the
        // downstream cover and domination instances enumerable
        n = 2;
        Int a = rng.flip() ? 1 : -1;
        Int b = rng.flip() ? 2 : -2;
        clauses.push_back({a, rng.flip() ? a : -a, b});
    }
    return SspInstance{ProblemKind::Satisfiability, make_cnf(n, std::move(clauses))};
}

SspInstance random_chain_3sat(std::uint64_t seed, std::uint64_t index) {
    FixtureRng rng(seed, "chain-3sat", index);
    return gen_3sat(rng, 3, 1);
}

QuantifiedFormula random_qbf(QbfShape shape, Int max_x, Int max_y, Int max_z,
                             Int max_rows, std::uint64_t seed, std::uint64_t index) {
    FixtureRng rng(seed, "qbf", index);
    Int nx = rng.between(0, max_x);
    Int ny = rng.between(0, max_y);
    Int nz = shape == QbfShape::ExistsForallExistsCnf ? rng.between(0, max_z) : 0;
    Int rows = rng.between(0, max_rows);
    std::vector<std::vector<Int>> matrix;
    for (Int r = 0; r < rows; ++r) {
        std::vector<Int> row;
        for (Int v = 1; v <= nx + ny + nz; ++v)
            if (rng.flip()) row.push_back(rng.flip() ? v : -v);
        matrix.push_back(std::move(row));
    }
    return make_qbf(shape, nx, ny, nz, std::move(matrix));
}

CombInterdictionInstance random_comb_interdiction(ProblemKind base_kind, std::uint64_t seed,
                                                  std::uint64_t index) {
    FixtureRng rng(seed, "comb-interdiction-" + kind_id(base_kind), index);
    CombInterdictionInstance v;
    v.base = gen_variant_base(base_kind, rng);
    v.blockable = random_subset(rng, universe_of(v.base));
    v.threshold = rng.between(-1, static_cast<Int>(v.blockable.size()));
    return v;
}

RestrictedRegretInstance random_restricted_regret(ProblemKind base_kind, std::uint64_t seed,
                                                  std::uint64_t index) {
    FixtureRng rng(seed, "restricted-regret-" + kind_id(base_kind), index);
    RestrictedRegretInstance v;
    v.base = gen_solvable_base(base_kind, rng);
    Universe u = universe_of(v.base);
    fill_binary_bounds(rng, u, v.lower, v.upper);
    v.quota = rng.between(0, static_cast<Int>(u.size()) / 2 + 1);
    return v;
}

CombTwoStageInstance random_comb_two_stage(ProblemKind base_kind, std::uint64_t seed,
                                           std::uint64_t index) {
    FixtureRng rng(seed, "comb-two-stage-" + kind_id(base_kind), index);
    CombTwoStageInstance v;
    v.base = gen_variant_base(base_kind, rng);
    Universe u = universe_of(v.base);
    for (const auto& e : u.elements()) {
        switch (rng.below(3)) {
            case 0:
                v.first_stage.push_back(e);
                break;
            case 1:
                v.blockable.push_back(e);
                break;
            default:
                break;
        }
    }
    v.gamma = rng.between(0, static_cast<Int>(v.blockable.size()) + 1);
    return v;
}

RestrictedRegretInstance random_tight_regret(std::uint64_t seed, std::uint64_t index) {
    FixtureRng rng(seed, "tight-regret", index);
    RestrictedRegretInstance v;
    v.base = gen_vertex_cover(rng, 4);
    Budget probe;
    SolutionFamily covers = enumerate_feasible(v.base, probe);
    Int best = static_cast<Int>(universe_of(v.base).size());
    for (const auto& member : covers.members())
        best = std::min(best, static_cast<Int>(member.size()));
    v.base.as<GraphKPayload>().k = best;
    Universe u = universe_of(v.base);
    fill_binary_bounds(rng, u, v.lower, v.upper);
    v.quota = rng.between(0, static_cast<Int>(u.size()) / 2 + 1);
    return v;
}

}  // namespace ssp
