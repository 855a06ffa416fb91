#include <algorithm>
#include <set>

#include "ssp/ints.hpp"
#include "ssp/reduction.hpp"

namespace ssp {

namespace {

Int pow10_checked(Int e) {
    Int v = 1;
    for (Int i = 0; i < e; ++i) v = checked_mul(v, 10);
    return v;
}

Int literal_var(Int code) { return code < 0 ? -code : code; }

// Vertex of a literal in the 2-per-variable layout: positive 2i-1, negated 2i.
Int literal_vertex(Int code) {
    Int i = literal_var(code);
    return code > 0 ? 2 * i - 1 : 2 * i;
}

void add_literal_embedding(Embedding& f, Int num_vars,
                           const std::function<ElementId(Int)>& target_of_code) {
    for (Int i = 1; i <= num_vars; ++i) {
        f.add(lit_elem(i, false), target_of_code(i));
        f.add(lit_elem(i, true), target_of_code(-i));
    }
}

ReductionOutput r_sat_to_3sat(const SspInstance& x) {
    const auto& p = x.as<CnfPayload>();
    Int next = p.num_vars + 1;
    std::vector<std::vector<Int>> out_clauses;
    for (const auto& cl : p.clauses) {
        std::vector<Int> rest = cl;
        while (rest.size() >= 4) {
            Int h = next++;
            out_clauses.push_back({rest[0], rest[1], h});
            std::vector<Int> tail{-h};
            tail.insert(tail.end(), rest.begin() + 2, rest.end());
            rest = std::move(tail);
        }
        if (rest.size() == 3) {
            out_clauses.push_back(rest);
        } else if (rest.size() == 2) {
            Int h = next++;
            out_clauses.push_back({rest[0], rest[1], h});
            out_clauses.push_back({rest[0], rest[1], -h});
        } else if (rest.size() == 1) {
            Int h1 = next++, h2 = next++;
            for (Int s1 : {h1, -h1})
                for (Int s2 : {h2, -h2}) out_clauses.push_back({rest[0], s1, s2});
        } else {
            Int h1 = next++, h2 = next++, h3 = next++;
            for (Int s1 : {h1, -h1})
                for (Int s2 : {h2, -h2})
                    for (Int s3 : {h3, -h3}) out_clauses.push_back({s1, s2, s3});
        }
    }
    ReductionOutput out;
    out.instance = SspInstance{ProblemKind::ThreeSatisfiability,
                               make_cnf(next - 1, std::move(out_clauses))};
    add_literal_embedding(out.embedding, p.num_vars, [](Int code) {
        return lit_elem(literal_var(code), code < 0);
    });
    return out;
}

ReductionOutput r_3sat_to_vertex_cover(const SspInstance& x) {
    const auto& p = x.as<CnfPayload>();
    Int n = p.num_vars;
    Int m = static_cast<Int>(p.clauses.size());
    std::vector<std::pair<Int, Int>> edges;
    for (Int i = 1; i <= n; ++i) edges.push_back({2 * i - 1, 2 * i});
    for (Int j = 0; j < m; ++j) {
        Int base = 2 * n + 3 * j;
        edges.push_back({base + 1, base + 2});
        edges.push_back({base + 1, base + 3});
        edges.push_back({base + 2, base + 3});
        const auto& cl = p.clauses[static_cast<std::size_t>(j)];
        for (Int r = 0; r < 3; ++r)
            edges.push_back({literal_vertex(cl[static_cast<std::size_t>(r)]), base + 1 + r});
    }
    ReductionOutput out;
    out.instance = SspInstance{
        ProblemKind::VertexCover,
        GraphKPayload{2 * n + 3 * m, normalize_edges(std::move(edges)), n + 2 * m}};
    add_literal_embedding(out.embedding, n,
                          [](Int code) { return vertex_elem(literal_vertex(code)); });
    return out;
}

ReductionOutput r_3sat_to_independent_set(const SspInstance& x) {
    const auto& p = x.as<CnfPayload>();
    Int n = p.num_vars;
    Int m = static_cast<Int>(p.clauses.size());
    std::vector<std::pair<Int, Int>> edges;
    for (Int i = 1; i <= n; ++i) edges.push_back({2 * i - 1, 2 * i});
    for (Int j = 0; j < m; ++j) {
        Int base = 2 * n + 3 * j;
        edges.push_back({base + 1, base + 2});
        edges.push_back({base + 1, base + 3});
        edges.push_back({base + 2, base + 3});
        const auto& cl = p.clauses[static_cast<std::size_t>(j)];
        for (Int r = 0; r < 3; ++r)
            edges.push_back({literal_vertex(-cl[static_cast<std::size_t>(r)]), base + 1 + r});
    }
    ReductionOutput out;
    out.instance =
        SspInstance{ProblemKind::IndependentSet,
                    GraphKPayload{2 * n + 3 * m, normalize_edges(std::move(edges)), n + m}};
    add_literal_embedding(out.embedding, n,
                          [](Int code) { return vertex_elem(literal_vertex(code)); });
    return out;
}

ReductionOutput r_independent_set_to_clique(const SspInstance& x) {
    const auto& p = x.as<GraphKPayload>();
    std::set<std::pair<Int, Int>> present(p.edges.begin(), p.edges.end());
    std::vector<std::pair<Int, Int>> complement;
    for (Int a = 1; a <= p.n; ++a)
        for (Int b = a + 1; b <= p.n; ++b)
            if (!present.count({a, b})) complement.push_back({a, b});
    ReductionOutput out;
    out.instance =
        SspInstance{ProblemKind::Clique, GraphKPayload{p.n, std::move(complement), p.k}};
    for (Int v = 1; v <= p.n; ++v) out.embedding.add(vertex_elem(v), vertex_elem(v));
    return out;
}

ReductionOutput r_vertex_cover_to_dominating_set(const SspInstance& x) {
    const auto& p = x.as<GraphKPayload>();
    Int apexes_per_edge = p.n + 1;
    std::vector<std::pair<Int, Int>> edges = p.edges;
    Int next = p.n;
    for (const auto& [a, b] : p.edges)
        for (Int t = 0; t < apexes_per_edge; ++t) {
            ++next;
            edges.push_back({a, next});
            edges.push_back({b, next});
        }
    ReductionOutput out;
    out.instance = SspInstance{ProblemKind::DominatingSet,
                               GraphKPayload{next, normalize_edges(std::move(edges)), p.k}};
    for (Int v = 1; v <= p.n; ++v) out.embedding.add(vertex_elem(v), vertex_elem(v));
    return out;
}

ReductionOutput r_vertex_cover_to_set_cover(const SspInstance& x) {
    const auto& p = x.as<GraphKPayload>();
    std::vector<std::vector<Int>> sets(static_cast<std::size_t>(p.n));
    for (Int e = 0; e < static_cast<Int>(p.edges.size()); ++e) {
        const auto& [a, b] = p.edges[static_cast<std::size_t>(e)];
        sets[static_cast<std::size_t>(a - 1)].push_back(e + 1);
        sets[static_cast<std::size_t>(b - 1)].push_back(e + 1);
    }
    ReductionOutput out;
    out.instance = SspInstance{
        ProblemKind::SetCover,
        SetSystemPayload{static_cast<Int>(p.edges.size()), std::move(sets), p.k}};
    for (Int v = 1; v <= p.n; ++v) out.embedding.add(vertex_elem(v), set_elem(v));
    return out;
}

ReductionOutput r_vertex_cover_to_hitting_set(const SspInstance& x) {
    const auto& p = x.as<GraphKPayload>();
    std::vector<std::vector<Int>> sets;
    for (const auto& [a, b] : p.edges) sets.push_back({a, b});
    ReductionOutput out;
    out.instance =
        SspInstance{ProblemKind::HittingSet, SetSystemPayload{p.n, std::move(sets), p.k}};
    for (Int v = 1; v <= p.n; ++v) out.embedding.add(vertex_elem(v), ground_elem(v));
    return out;
}

ReductionOutput r_vertex_cover_to_feedback_vertex_set(const SspInstance& x) {
    const auto& p = x.as<GraphKPayload>();
    std::vector<std::pair<Int, Int>> arcs;
    for (const auto& [a, b] : p.edges) {
        arcs.push_back({a, b});
        arcs.push_back({b, a});
    }
    ReductionOutput out;
    out.instance = SspInstance{ProblemKind::FeedbackVertexSet,
                               DigraphKPayload{p.n, normalize_arcs(std::move(arcs)), p.k}};
    for (Int v = 1; v <= p.n; ++v) out.embedding.add(vertex_elem(v), vertex_elem(v));
    return out;
}

ReductionOutput r_vertex_cover_to_feedback_arc_set(const SspInstance& x) {
    const auto& p = x.as<GraphKPayload>();
    Int copies = p.n + 1;
    std::vector<std::pair<Int, Int>> arcs;
    for (Int v = 1; v <= p.n; ++v) arcs.push_back({2 * v - 1, 2 * v});
    Int next = 2 * p.n;
    for (const auto& [a, b] : p.edges) {
        for (Int t = 0; t < copies; ++t) {
            ++next;
            arcs.push_back({2 * a, next});
            arcs.push_back({next, 2 * b - 1});
        }
        for (Int t = 0; t < copies; ++t) {
            ++next;
            arcs.push_back({2 * b, next});
            arcs.push_back({next, 2 * a - 1});
        }
    }
    ReductionOutput out;
    out.instance = SspInstance{ProblemKind::FeedbackArcSet,
                               DigraphKPayload{next, normalize_arcs(std::move(arcs)), p.k}};
    for (Int v = 1; v <= p.n; ++v)
        out.embedding.add(vertex_elem(v), arc_elem(2 * v - 1, 2 * v));
    return out;
}

ReductionOutput r_vertex_cover_to_ufl(const SspInstance& x) {
    const auto& p = x.as<GraphKPayload>();
    Int clients = static_cast<Int>(p.edges.size());
    UflPayload u;
    u.clients = clients;
    u.facilities = p.n;
    u.open_cost.assign(static_cast<std::size_t>(p.n), 1);
    u.service.assign(static_cast<std::size_t>(clients),
                     std::vector<Int>(static_cast<std::size_t>(p.n), p.n + 1));
    for (Int e = 0; e < clients; ++e) {
        const auto& [a, b] = p.edges[static_cast<std::size_t>(e)];
        u.service[static_cast<std::size_t>(e)][static_cast<std::size_t>(a - 1)] = 0;
        u.service[static_cast<std::size_t>(e)][static_cast<std::size_t>(b - 1)] = 0;
    }
    u.k = p.k;
    ReductionOutput out;
    out.instance = SspInstance{ProblemKind::UncapacitatedFacilityLocation, std::move(u)};
    for (Int v = 1; v <= p.n; ++v) out.embedding.add(vertex_elem(v), facility_elem(v));
    return out;
}

ReductionOutput vertex_cover_to_facility(const SspInstance& x, ProblemKind kind) {
    const auto& p = x.as<GraphKPayload>();
    FacilityPayload f;
    f.facilities = p.n;
    if (p.k < 0) {
        // Source has no solutions at all; one unservable-within-threshold
        // client keeps the target empty too.
        f.clients = 1;
        f.service.assign(1, std::vector<Int>(static_cast<std::size_t>(p.n), 1));
        f.p = 0;
        f.k = 0;
    } else {
        Int clients = static_cast<Int>(p.edges.size());
        f.clients = clients;
        f.service.assign(static_cast<std::size_t>(clients),
                         std::vector<Int>(static_cast<std::size_t>(p.n), 1));
        for (Int e = 0; e < clients; ++e) {
            const auto& [a, b] = p.edges[static_cast<std::size_t>(e)];
            f.service[static_cast<std::size_t>(e)][static_cast<std::size_t>(a - 1)] = 0;
            f.service[static_cast<std::size_t>(e)][static_cast<std::size_t>(b - 1)] = 0;
        }
        f.p = p.k;
        f.k = 0;
    }
    ReductionOutput out;
    out.instance = SspInstance{kind, std::move(f)};
    for (Int v = 1; v <= p.n; ++v) out.embedding.add(vertex_elem(v), facility_elem(v));
    return out;
}

ReductionOutput r_3sat_to_subset_sum(const SspInstance& x) {
    const auto& p = x.as<CnfPayload>();
    Int n = p.num_vars;
    Int m = static_cast<Int>(p.clauses.size());
    auto var_place = [&](Int i) { return pow10_checked(m + n - i); };
    auto clause_place = [&](Int j) { return pow10_checked(m - j); };
    std::vector<Int> values;
    for (Int i = 1; i <= n; ++i) {
        for (Int code : {i, -i}) {
            Int v = var_place(i);
            for (Int j = 1; j <= m; ++j) {
                const auto& cl = p.clauses[static_cast<std::size_t>(j - 1)];
                if (std::find(cl.begin(), cl.end(), code) != cl.end())
                    v = checked_add(v, clause_place(j));
            }
            values.push_back(v);
        }
    }
    for (Int j = 1; j <= m; ++j) {
        values.push_back(clause_place(j));
        values.push_back(checked_mul(clause_place(j), 2));
    }
    Int target = 0;
    for (Int i = 1; i <= n; ++i) target = checked_add(target, var_place(i));
    for (Int j = 1; j <= m; ++j)
        target = checked_add(target, checked_mul(clause_place(j), 4));
    ReductionOutput out;
    out.instance =
        SspInstance{ProblemKind::SubsetSum, SubsetSumPayload{std::move(values), target}};
    add_literal_embedding(out.embedding, n, [](Int code) {
        return num_elem(2 * literal_var(code) - (code > 0 ? 1 : 0));
    });
    return out;
}

ReductionOutput r_subset_sum_to_knapsack(const SspInstance& x) {
    const auto& p = x.as<SubsetSumPayload>();
    KnapsackPayload k;
    for (Int v : p.values) k.items.push_back({v, v});
    k.min_profit = p.target;
    k.max_weight = p.target;
    ReductionOutput out;
    out.instance = SspInstance{ProblemKind::Knapsack, std::move(k)};
    for (Int i = 1; i <= static_cast<Int>(p.values.size()); ++i)
        out.embedding.add(num_elem(i), item_elem(i));
    return out;
}

ReductionOutput r_subset_sum_to_partition(const SspInstance& x) {
    const auto& p = x.as<SubsetSumPayload>();
    Int total = 0;
    for (Int v : p.values) total = checked_add(total, v);
    Int target = (p.target >= 0 && p.target <= total) ? p.target : checked_add(total, 1);
    std::vector<Int> values = p.values;
    values.push_back(checked_add(target, 1));
    values.push_back(checked_sub(checked_add(total, 1), target));
    ReductionOutput out;
    out.instance = SspInstance{ProblemKind::Partition, PartitionPayload{std::move(values)}};
    for (Int i = 1; i <= static_cast<Int>(p.values.size()); ++i)
        out.embedding.add(num_elem(i), num_elem(i));
    return out;
}

ReductionOutput r_partition_to_scheduling(const SspInstance& x) {
    const auto& p = x.as<PartitionPayload>();
    Int total = 0;
    for (Int v : p.values) total = checked_add(total, v);
    ReductionOutput out;
    out.instance = SspInstance{ProblemKind::TwoMachineScheduling,
                               SchedulingPayload{p.values, total / 2}};
    for (Int i = 1; i <= static_cast<Int>(p.values.size()); ++i)
        out.embedding.add(num_elem(i), job_elem(i));
    return out;
}

ReductionOutput r_3sat_to_dham_path(const SspInstance& x) {
    const auto& p = x.as<CnfPayload>();
    Int n = p.num_vars;
    Int m = static_cast<Int>(p.clauses.size());
    constexpr Int kS = 1, kT = 2;
    // Clause j plugs into the chain pair (3j, 3j+1). The buffer cells around
    // every pair and next to both chain ends make sure a walk that leaves a
    // clause vertex into the wrong chain strands one of the buffers.
    Int chain_len = 3 * m + 3;
    auto chain = [&](Int i, Int j) { return 2 + (i - 1) * chain_len + j; };
    auto clause_vertex = [&](Int j) { return 2 + n * chain_len + j; };
    std::vector<std::pair<Int, Int>> arcs;
    if (n == 0) {
        arcs.push_back({kS, kT});
    } else {
        for (Int i = 1; i <= n; ++i)
            for (Int j = 1; j < chain_len; ++j) {
                arcs.push_back({chain(i, j), chain(i, j + 1)});
                arcs.push_back({chain(i, j + 1), chain(i, j)});
            }
        for (Int i = 1; i < n; ++i)
            for (Int a : {chain(i, 1), chain(i, chain_len)})
                for (Int b : {chain(i + 1, 1), chain(i + 1, chain_len)}) arcs.push_back({a, b});
        arcs.push_back({kS, chain(1, 1)});
        arcs.push_back({kS, chain(1, chain_len)});
        arcs.push_back({chain(n, 1), kT});
        arcs.push_back({chain(n, chain_len), kT});
        for (Int j = 1; j <= m; ++j) {
            const auto& cl = p.clauses[static_cast<std::size_t>(j - 1)];
            for (Int code : cl) {
                Int i = literal_var(code);
                if (code > 0) {
                    arcs.push_back({chain(i, 3 * j), clause_vertex(j)});
                    arcs.push_back({clause_vertex(j), chain(i, 3 * j + 1)});
                } else {
                    arcs.push_back({chain(i, 3 * j + 1), clause_vertex(j)});
                    arcs.push_back({clause_vertex(j), chain(i, 3 * j)});
                }
            }
        }
    }
    Int total_vertices = 2 + n * (n > 0 ? chain_len : 0) + m;
    ReductionOutput out;
    out.instance =
        SspInstance{ProblemKind::DirectedHamiltonianPath,
                    DhamPathPayload{total_vertices, normalize_arcs(std::move(arcs)), kS, kT}};
    add_literal_embedding(out.embedding, n, [&](Int code) {
        Int i = literal_var(code);
        return code > 0 ? arc_elem(chain(i, 1), chain(i, 2))
                        : arc_elem(chain(i, 2), chain(i, 1));
    });
    return out;
}

ReductionOutput r_dham_path_to_dham_cycle(const SspInstance& x) {
    const auto& p = x.as<DhamPathPayload>();
    std::vector<std::pair<Int, Int>> arcs = p.arcs;
    arcs.push_back({p.t, p.s});
    ReductionOutput out;
    out.instance = SspInstance{ProblemKind::DirectedHamiltonianCycle,
                               DigraphPayload{p.n, normalize_arcs(std::move(arcs))}};
    for (const auto& [a, b] : p.arcs) out.embedding.add(arc_elem(a, b), arc_elem(a, b));
    return out;
}

ReductionOutput r_dham_cycle_to_uham_cycle(const SspInstance& x) {
    const auto& p = x.as<DigraphPayload>();
    auto v_in = [](Int v) { return 3 * v - 2; };
    auto v_mid = [](Int v) { return 3 * v - 1; };
    auto v_out = [](Int v) { return 3 * v; };
    std::vector<std::pair<Int, Int>> edges;
    for (Int v = 1; v <= p.n; ++v) {
        edges.push_back({v_in(v), v_mid(v)});
        edges.push_back({v_mid(v), v_out(v)});
    }
    for (const auto& [a, b] : p.arcs) edges.push_back({v_out(a), v_in(b)});
    ReductionOutput out;
    out.instance = SspInstance{ProblemKind::UndirectedHamiltonianCycle,
                               GraphPayload{3 * p.n, normalize_edges(std::move(edges))}};
    for (const auto& [a, b] : p.arcs)
        out.embedding.add(arc_elem(a, b),
                          edge_elem(std::min(v_out(a), v_in(b)), std::max(v_out(a), v_in(b))));
    return out;
}

ReductionOutput r_uham_cycle_to_tsp(const SspInstance& x) {
    const auto& p = x.as<GraphPayload>();
    ReductionOutput out;
    if (p.n < 3) {
        // Too small for a tour on either side; emit a canonical No-instance.
        std::vector<WeightedEdge> edges{{1, 2, 1}, {1, 3, 1}, {2, 3, 1}};
        out.instance = SspInstance{ProblemKind::TravelingSalesman,
                                   TspPayload{3, std::move(edges), 0}};
        for (const auto& [a, b] : p.edges) out.embedding.add(edge_elem(a, b), edge_elem(a, b));
        return out;
    }
    std::set<std::pair<Int, Int>> present(p.edges.begin(), p.edges.end());
    std::vector<WeightedEdge> edges;
    for (Int a = 1; a <= p.n; ++a)
        for (Int b = a + 1; b <= p.n; ++b)
            edges.push_back({a, b, present.count({a, b}) ? Int{0} : Int{1}});
    out.instance =
        SspInstance{ProblemKind::TravelingSalesman, TspPayload{p.n, std::move(edges), 0}};
    for (const auto& [a, b] : p.edges) out.embedding.add(edge_elem(a, b), edge_elem(a, b));
    return out;
}

ReductionOutput r_3sat_to_2ddp(const SspInstance& x) {
    const auto& p = x.as<CnfPayload>();
    Int n = p.num_vars;
    Int m = static_cast<Int>(p.clauses.size());
    constexpr Int kS1 = 1, kT1 = 2, kS2 = 3, kT2 = 4;
    Int corridor_len = std::max<Int>(4 * m, 1);
    auto var_in = [&](Int i) { return 4 + 2 * (i - 1) + 1; };
    auto var_out = [&](Int i) { return 4 + 2 * (i - 1) + 2; };
    Int corridor_base = 4 + 2 * n;
    // Literal slots: positive literal of variable i at 2i-1, negated at 2i.
    auto corridor = [&](Int code, Int pos) {
        Int slot = 2 * (literal_var(code) - 1) + (code > 0 ? 1 : 2);
        return corridor_base + (slot - 1) * corridor_len + pos;
    };
    Int clause_base = corridor_base + 2 * n * corridor_len;
    auto clause_in = [&](Int j) { return clause_base + 2 * (j - 1) + 1; };
    auto clause_out = [&](Int j) { return clause_base + 2 * (j - 1) + 2; };
    std::vector<std::pair<Int, Int>> arcs;
    if (n == 0)
        arcs.push_back({kS1, kT1});
    else {
        arcs.push_back({kS1, var_in(1)});
        for (Int i = 1; i < n; ++i) arcs.push_back({var_out(i), var_in(i + 1)});
        arcs.push_back({var_out(n), kT1});
        for (Int i = 1; i <= n; ++i)
            for (Int code : {i, -i}) {
                arcs.push_back({var_in(i), corridor(code, 1)});
                for (Int q = 1; q < corridor_len; ++q)
                    arcs.push_back({corridor(code, q), corridor(code, q + 1)});
                arcs.push_back({corridor(code, corridor_len), var_out(i)});
            }
    }
    if (m == 0)
        arcs.push_back({kS2, kT2});
    else {
        arcs.push_back({kS2, clause_in(1)});
        for (Int j = 1; j < m; ++j) arcs.push_back({clause_out(j), clause_in(j + 1)});
        arcs.push_back({clause_out(m), kT2});
        for (Int j = 1; j <= m; ++j) {
            const auto& cl = p.clauses[static_cast<std::size_t>(j - 1)];
            for (Int code : cl) {
                arcs.push_back({clause_in(j), corridor(-code, 4 * j - 3)});
                arcs.push_back({corridor(-code, 4 * j - 2), clause_out(j)});
            }
        }
    }
    Int total_vertices = 4 + 2 * n + 2 * n * corridor_len + 2 * m;
    ReductionOutput out;
    out.instance = SspInstance{
        ProblemKind::DirectedTwoDisjointPath,
        TwoDppPayload{total_vertices, normalize_arcs(std::move(arcs)), kS1, kT1, kS2, kT2}};
    add_literal_embedding(out.embedding, n, [&](Int code) {
        return arc_elem(var_in(literal_var(code)), corridor(code, 1));
    });
    return out;
}

ReductionOutput r_2ddp_to_kddp(const SspInstance& x) {
    const auto& p = x.as<TwoDppPayload>();
    Int s3 = p.n + 1, t3 = p.n + 2;
    std::vector<std::pair<Int, Int>> arcs = p.arcs;
    arcs.push_back({s3, t3});
    ReductionOutput out;
    out.instance = SspInstance{
        ProblemKind::DirectedKDisjointPath,
        KDppPayload{p.n + 2, normalize_arcs(std::move(arcs)),
                    {{p.s1, p.t1}, {p.s2, p.t2}, {s3, t3}}}};
    for (const auto& [a, b] : p.arcs) out.embedding.add(arc_elem(a, b), arc_elem(a, b));
    return out;
}

ReductionOutput r_3sat_to_steiner_tree(const SspInstance& x) {
    const auto& p = x.as<CnfPayload>();
    Int n = p.num_vars;
    Int m = static_cast<Int>(p.clauses.size());
    Int L = 2 * n;
    auto anchor = [](Int j) { return j + 1; };  // v_0 .. v_n
    auto lit_v = [&](Int code) { return n + 1 + literal_vertex(code); };
    auto clause_v = [&](Int j) { return n + 1 + 2 * n + j; };
    Int internal_base = n + 1 + 2 * n + m;
    std::vector<WeightedEdge> edges;
    for (Int i = 1; i <= n; ++i)
        for (Int code : {i, -i}) {
            edges.push_back({anchor(i - 1), lit_v(code), 1});
            edges.push_back({std::min(lit_v(code), anchor(i)),
                             std::max(lit_v(code), anchor(i)), 1});
        }
    Int occurrence = 0;
    for (Int j = 1; j <= m; ++j) {
        const auto& cl = p.clauses[static_cast<std::size_t>(j - 1)];
        for (Int code : cl) {
            Int prev = lit_v(code);
            for (Int q = 1; q <= L; ++q) {
                Int w = internal_base + occurrence * L + q;
                edges.push_back({std::min(prev, w), std::max(prev, w), 1});
                prev = w;
            }
            edges.push_back({std::min(prev, clause_v(j)), std::max(prev, clause_v(j)), 1});
            ++occurrence;
        }
    }
    std::vector<Int> terminals{anchor(0)};
    if (n > 0) terminals.push_back(anchor(n));
    for (Int j = 1; j <= m; ++j) terminals.push_back(clause_v(j));
    std::sort(terminals.begin(), terminals.end());
    std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return std::tie(a.a, a.b) < std::tie(b.a, b.b);
    });
    Int total_vertices = n + 1 + 2 * n + m + 3 * m * L;
    ReductionOutput out;
    out.instance = SspInstance{
        ProblemKind::SteinerTree,
        SteinerPayload{total_vertices, std::move(terminals), std::move(edges),
                       checked_add(L, checked_mul(m, L + 1))}};
    add_literal_embedding(out.embedding, n, [&](Int code) {
        Int i = literal_var(code);
        return edge_elem(anchor(i - 1), lit_v(code));
    });
    return out;
}

}  // namespace

const std::vector<SspReduction>& catalog() {
    static const std::vector<SspReduction> entries = [] {
        std::vector<SspReduction> v;
        auto add = [&v](const char* id, ProblemKind from, ProblemKind to,
                        SspReduction::ApplyFn fn) {
            v.emplace_back(id, from, to, std::move(fn));
        };
        using PK = ProblemKind;
        add("sat_to_3sat", PK::Satisfiability, PK::ThreeSatisfiability, r_sat_to_3sat);
        add("3sat_to_vertex_cover", PK::ThreeSatisfiability, PK::VertexCover,
            r_3sat_to_vertex_cover);
        add("3sat_to_independent_set", PK::ThreeSatisfiability, PK::IndependentSet,
            r_3sat_to_independent_set);
        add("independent_set_to_clique", PK::IndependentSet, PK::Clique,
            r_independent_set_to_clique);
        add("vertex_cover_to_dominating_set", PK::VertexCover, PK::DominatingSet,
            r_vertex_cover_to_dominating_set);
        add("vertex_cover_to_set_cover", PK::VertexCover, PK::SetCover,
            r_vertex_cover_to_set_cover);
        add("vertex_cover_to_hitting_set", PK::VertexCover, PK::HittingSet,
            r_vertex_cover_to_hitting_set);
        add("vertex_cover_to_feedback_vertex_set", PK::VertexCover, PK::FeedbackVertexSet,
            r_vertex_cover_to_feedback_vertex_set);
        add("vertex_cover_to_feedback_arc_set", PK::VertexCover, PK::FeedbackArcSet,
            r_vertex_cover_to_feedback_arc_set);
        add("vertex_cover_to_ufl", PK::VertexCover, PK::UncapacitatedFacilityLocation,
            r_vertex_cover_to_ufl);
        add("vertex_cover_to_p_center", PK::VertexCover, PK::PCenter,
            [](const SspInstance& x) { return vertex_cover_to_facility(x, PK::PCenter); });
        add("vertex_cover_to_p_median", PK::VertexCover, PK::PMedian,
            [](const SspInstance& x) { return vertex_cover_to_facility(x, PK::PMedian); });
        add("3sat_to_subset_sum", PK::ThreeSatisfiability, PK::SubsetSum,
            r_3sat_to_subset_sum);
        add("subset_sum_to_knapsack", PK::SubsetSum, PK::Knapsack, r_subset_sum_to_knapsack);
        add("subset_sum_to_partition", PK::SubsetSum, PK::Partition,
            r_subset_sum_to_partition);
        add("partition_to_two_machine_scheduling", PK::Partition, PK::TwoMachineScheduling,
            r_partition_to_scheduling);
        add("3sat_to_dham_path", PK::ThreeSatisfiability, PK::DirectedHamiltonianPath,
            r_3sat_to_dham_path);
        add("dham_path_to_dham_cycle", PK::DirectedHamiltonianPath,
            PK::DirectedHamiltonianCycle, r_dham_path_to_dham_cycle);
        add("dham_cycle_to_uham_cycle", PK::DirectedHamiltonianCycle,
            PK::UndirectedHamiltonianCycle, r_dham_cycle_to_uham_cycle);
        add("uham_cycle_to_tsp", PK::UndirectedHamiltonianCycle, PK::TravelingSalesman,
            r_uham_cycle_to_tsp);
        add("3sat_to_2ddp", PK::ThreeSatisfiability, PK::DirectedTwoDisjointPath,
            r_3sat_to_2ddp);
        add("2ddp_to_kddp", PK::DirectedTwoDisjointPath, PK::DirectedKDisjointPath,
            r_2ddp_to_kddp);
        add("3sat_to_steiner_tree", PK::ThreeSatisfiability, PK::SteinerTree,
            r_3sat_to_steiner_tree);
        return v;
    }();
    return entries;
}

}  // namespace ssp
