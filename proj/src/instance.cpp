#include "ssp/instance.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "ssp/ints.hpp"

namespace ssp {

namespace {

struct KindInfo {
    ProblemKind kind;
    const char* id;
    bool lop;
};

constexpr std::array<KindInfo, 24> kKinds{{
    {ProblemKind::Satisfiability, "sat", false},
    {ProblemKind::ThreeSatisfiability, "3sat", false},
    {ProblemKind::VertexCover, "vertex_cover", true},
    {ProblemKind::IndependentSet, "independent_set", true},
    {ProblemKind::Clique, "clique", true},
    {ProblemKind::DominatingSet, "dominating_set", true},
    {ProblemKind::SetCover, "set_cover", true},
    {ProblemKind::HittingSet, "hitting_set", true},
    {ProblemKind::FeedbackVertexSet, "feedback_vertex_set", true},
    {ProblemKind::FeedbackArcSet, "feedback_arc_set", true},
    {ProblemKind::UncapacitatedFacilityLocation, "ufl", false},
    {ProblemKind::PCenter, "p_center", false},
    {ProblemKind::PMedian, "p_median", false},
    {ProblemKind::SubsetSum, "subset_sum", false},
    {ProblemKind::Knapsack, "knapsack", true},
    {ProblemKind::Partition, "partition", false},
    {ProblemKind::TwoMachineScheduling, "two_machine_scheduling", false},
    {ProblemKind::DirectedHamiltonianPath, "dham_path", false},
    {ProblemKind::DirectedHamiltonianCycle, "dham_cycle", false},
    {ProblemKind::UndirectedHamiltonianCycle, "uham_cycle", false},
    {ProblemKind::TravelingSalesman, "tsp", true},
    {ProblemKind::DirectedTwoDisjointPath, "2ddp", false},
    {ProblemKind::DirectedKDisjointPath, "kddp", false},
    {ProblemKind::SteinerTree, "steiner_tree", true},
}};

const KindInfo& info(ProblemKind kind) {
    for (const auto& ki : kKinds)
        if (ki.kind == kind) return ki;
    throw Error("unknown problem kind");
}

bool literal_less(Int a, Int b) {
    Int va = a < 0 ? -a : a, vb = b < 0 ? -b : b;
    if (va != vb) return va < vb;
    return (a > 0) && (b < 0);
}

void check_vertex_range(Int v, Int n, std::vector<std::string>& out, const char* what) {
    if (v < 1 || v > n) out.push_back(std::string(what) + " out of range: " + std::to_string(v));
}

void check_edge_list(const std::vector<std::pair<Int, Int>>& edges, Int n,
                     std::vector<std::string>& out) {
    for (const auto& [a, b] : edges) {
        check_vertex_range(a, n, out, "edge endpoint");
        check_vertex_range(b, n, out, "edge endpoint");
        if (a == b) out.push_back("self-loop at vertex " + std::to_string(a));
        if (a > b) out.push_back("edge not stored as (min,max)");
    }
    if (!std::is_sorted(edges.begin(), edges.end())) out.push_back("edge list not sorted");
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        out.push_back("duplicate edge");
}

void check_arc_list(const std::vector<std::pair<Int, Int>>& arcs, Int n,
                    std::vector<std::string>& out) {
    for (const auto& [a, b] : arcs) {
        check_vertex_range(a, n, out, "arc endpoint");
        check_vertex_range(b, n, out, "arc endpoint");
        if (a == b) out.push_back("self-arc at vertex " + std::to_string(a));
    }
    if (!std::is_sorted(arcs.begin(), arcs.end())) out.push_back("arc list not sorted");
    if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
        out.push_back("duplicate arc");
}

// Walks kept vertices/arcs of a digraph looking for a directed cycle.
bool digraph_has_cycle(Int n, const std::vector<std::pair<Int, Int>>& arcs,
                       const std::vector<char>* vertex_kept,
                       const std::vector<char>* arc_kept) {
    std::vector<std::vector<Int>> out(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (arc_kept && !(*arc_kept)[i]) continue;
        auto [a, b] = arcs[i];
        if (vertex_kept && (!(*vertex_kept)[static_cast<std::size_t>(a)] ||
                            !(*vertex_kept)[static_cast<std::size_t>(b)]))
            continue;
        out[static_cast<std::size_t>(a)].push_back(b);
    }
    // 0 = unvisited, 1 = on stack, 2 = done
    std::vector<char> state(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::pair<Int, std::size_t>> stack;
    for (Int v = 1; v <= n; ++v) {
        if (state[static_cast<std::size_t>(v)] != 0) continue;
        if (vertex_kept && !(*vertex_kept)[static_cast<std::size_t>(v)]) continue;
        stack.push_back({v, 0});
        state[static_cast<std::size_t>(v)] = 1;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next < out[static_cast<std::size_t>(u)].size()) {
                Int w = out[static_cast<std::size_t>(u)][next++];
                char& st = state[static_cast<std::size_t>(w)];
                if (st == 1) return true;
                if (st == 0) {
                    st = 1;
                    stack.push_back({w, 0});
                }
            } else {
                state[static_cast<std::size_t>(u)] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

struct Dsu {
    std::vector<Int> parent;
    explicit Dsu(Int n) : parent(static_cast<std::size_t>(n) + 1) {
        std::iota(parent.begin(), parent.end(), Int{0});
    }
    Int find(Int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    }
    // Returns false when a and b were already joined.
    bool unite(Int a, Int b) {
        Int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[static_cast<std::size_t>(ra)] = rb;
        return true;
    }
};

// Decodes a subset of arc elements into (tail, head) pairs.
std::vector<std::pair<Int, Int>> arc_pairs(const Subset& s) {
    std::vector<std::pair<Int, Int>> out;
    out.reserve(s.size());
    for (const auto& e : s) out.push_back({e.idx[0], e.idx[1]});
    return out;
}

// True when `arcs` is exactly the arc set of one simple path from s to t
// covering `must_cover` vertices in total (Hamiltonicity when must_cover = n).
bool is_path_arc_set(const std::vector<std::pair<Int, Int>>& arcs, Int n, Int s, Int t,
                     Int must_cover) {
    if (s == t) return arcs.empty() && must_cover <= 1;
    std::vector<Int> succ(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> has_in(static_cast<std::size_t>(n) + 1, 0);
    for (auto [a, b] : arcs) {
        if (succ[static_cast<std::size_t>(a)] != 0) return false;
        if (has_in[static_cast<std::size_t>(b)]) return false;
        succ[static_cast<std::size_t>(a)] = b;
        has_in[static_cast<std::size_t>(b)] = 1;
    }
    Int cur = s, visited = 1;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    seen[static_cast<std::size_t>(s)] = 1;
    while (succ[static_cast<std::size_t>(cur)] != 0) {
        cur = succ[static_cast<std::size_t>(cur)];
        if (seen[static_cast<std::size_t>(cur)]) return false;
        seen[static_cast<std::size_t>(cur)] = 1;
        ++visited;
    }
    return cur == t && visited == must_cover &&
           static_cast<std::size_t>(must_cover - 1) == arcs.size();
}

// True when `edges` (as element ids) is a Hamiltonian cycle edge set of an
// n-vertex graph.
bool is_cycle_edge_set(const Subset& s, Int n) {
    if (n < 3 || static_cast<Int>(s.size()) != n) return false;
    std::vector<std::vector<Int>> adj(static_cast<std::size_t>(n) + 1);
    for (const auto& e : s) {
        adj[static_cast<std::size_t>(e.idx[0])].push_back(e.idx[1]);
        adj[static_cast<std::size_t>(e.idx[1])].push_back(e.idx[0]);
    }
    for (Int v = 1; v <= n; ++v)
        if (adj[static_cast<std::size_t>(v)].size() != 2) return false;
    Int prev = 1, cur = adj[1][0], steps = 1;
    while (cur != 1) {
        auto& nb = adj[static_cast<std::size_t>(cur)];
        Int nxt = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
        ++steps;
        if (steps > n) return false;
    }
    return steps == n;
}

Int sum_values(const std::vector<Int>& values, const Subset& s) {
    Int total = 0;
    for (const auto& e : s) total = checked_add(total, values[static_cast<std::size_t>(e.idx[0] - 1)]);
    return total;
}

}  // namespace

const std::string& kind_id(ProblemKind kind) {
    static std::map<ProblemKind, std::string> ids = [] {
        std::map<ProblemKind, std::string> m;
        for (const auto& ki : kKinds) m[ki.kind] = ki.id;
        return m;
    }();
    return ids.at(kind);
}

std::optional<ProblemKind> kind_from_id(const std::string& id) {
    for (const auto& ki : kKinds)
        if (id == ki.id) return ki.kind;
    return std::nullopt;
}

bool is_lop_kind(ProblemKind kind) { return info(kind).lop; }

// --- validation -----------------------------------------------------------

std::vector<std::string> validate(const SspInstance& x) {
    std::vector<std::string> out;
    switch (x.kind) {
        case ProblemKind::Satisfiability:
        case ProblemKind::ThreeSatisfiability: {
            const auto& p = x.as<CnfPayload>();
            if (p.num_vars < 0) out.push_back("negative variable count");
            for (const auto& cl : p.clauses) {
                if (x.kind == ProblemKind::ThreeSatisfiability && cl.size() != 3)
                    out.push_back("clause arity is " + std::to_string(cl.size()) +
                                  ", expected exactly 3");
                for (Int code : cl) {
                    Int v = code < 0 ? -code : code;
                    if (v < 1 || v > p.num_vars)
                        out.push_back("literal out of range: " + std::to_string(code));
                }
                if (!std::is_sorted(cl.begin(), cl.end(), literal_less))
                    out.push_back("clause literals not in canonical order");
                if (std::adjacent_find(cl.begin(), cl.end()) != cl.end())
                    out.push_back("duplicate literal in clause");
            }
            if (!std::is_sorted(p.clauses.begin(), p.clauses.end(),
                                [](const auto& a, const auto& b) {
                                    return std::lexicographical_compare(
                                        a.begin(), a.end(), b.begin(), b.end(), literal_less);
                                }))
                out.push_back("clause list not in canonical order");
            if (std::adjacent_find(p.clauses.begin(), p.clauses.end()) != p.clauses.end())
                out.push_back("duplicate clause");
            break;
        }
        case ProblemKind::VertexCover:
        case ProblemKind::IndependentSet:
        case ProblemKind::Clique:
        case ProblemKind::DominatingSet: {
            const auto& p = x.as<GraphKPayload>();
            if (p.n < 0) out.push_back("negative vertex count");
            check_edge_list(p.edges, p.n, out);
            break;
        }
        case ProblemKind::FeedbackVertexSet:
        case ProblemKind::FeedbackArcSet: {
            const auto& p = x.as<DigraphKPayload>();
            if (p.n < 0) out.push_back("negative vertex count");
            check_arc_list(p.arcs, p.n, out);
            break;
        }
        case ProblemKind::SetCover:
        case ProblemKind::HittingSet: {
            const auto& p = x.as<SetSystemPayload>();
            if (p.ground < 0) out.push_back("negative ground size");
            for (const auto& s : p.sets) {
                for (Int e : s)
                    if (e < 1 || e > p.ground)
                        out.push_back("set member out of range: " + std::to_string(e));
                if (!std::is_sorted(s.begin(), s.end()) ||
                    std::adjacent_find(s.begin(), s.end()) != s.end())
                    out.push_back("set not sorted or has duplicates");
            }
            break;
        }
        case ProblemKind::UncapacitatedFacilityLocation: {
            const auto& p = x.as<UflPayload>();
            if (p.clients < 0 || p.facilities < 0) out.push_back("negative dimension");
            if (static_cast<Int>(p.open_cost.size()) != p.facilities)
                out.push_back("opening cost row has wrong length");
            if (static_cast<Int>(p.service.size()) != p.clients)
                out.push_back("service matrix has wrong row count");
            for (const auto& row : p.service)
                if (static_cast<Int>(row.size()) != p.facilities)
                    out.push_back("service matrix row has wrong length");
            break;
        }
        case ProblemKind::PCenter:
        case ProblemKind::PMedian: {
            const auto& p = x.as<FacilityPayload>();
            if (p.clients < 0 || p.facilities < 0) out.push_back("negative dimension");
            if (p.p < 0) out.push_back("negative placement bound");
            if (static_cast<Int>(p.service.size()) != p.clients)
                out.push_back("service matrix has wrong row count");
            for (const auto& row : p.service)
                if (static_cast<Int>(row.size()) != p.facilities)
                    out.push_back("service matrix row has wrong length");
            break;
        }
        case ProblemKind::SubsetSum: {
            const auto& p = x.as<SubsetSumPayload>();
            for (Int v : p.values)
                if (v < 0) out.push_back("negative number: " + std::to_string(v));
            break;
        }
        case ProblemKind::Knapsack: {
            const auto& p = x.as<KnapsackPayload>();
            for (const auto& [profit, weight] : p.items) {
                if (profit < 0) out.push_back("negative profit");
                if (weight < 0) out.push_back("negative weight");
            }
            break;
        }
        case ProblemKind::Partition: {
            const auto& p = x.as<PartitionPayload>();
            for (Int v : p.values)
                if (v < 0) out.push_back("negative number: " + std::to_string(v));
            break;
        }
        case ProblemKind::TwoMachineScheduling: {
            const auto& p = x.as<SchedulingPayload>();
            for (Int v : p.times)
                if (v < 0) out.push_back("negative processing time");
            break;
        }
        case ProblemKind::DirectedHamiltonianPath: {
            const auto& p = x.as<DhamPathPayload>();
            if (p.n < 2) out.push_back("path problem needs distinct endpoints");
            check_arc_list(p.arcs, p.n, out);
            check_vertex_range(p.s, p.n, out, "start vertex");
            check_vertex_range(p.t, p.n, out, "end vertex");
            if (p.s == p.t) out.push_back("start equals end");
            break;
        }
        case ProblemKind::DirectedHamiltonianCycle: {
            const auto& p = x.as<DigraphPayload>();
            if (p.n < 0) out.push_back("negative vertex count");
            check_arc_list(p.arcs, p.n, out);
            break;
        }
        case ProblemKind::UndirectedHamiltonianCycle: {
            const auto& p = x.as<GraphPayload>();
            if (p.n < 0) out.push_back("negative vertex count");
            check_edge_list(p.edges, p.n, out);
            break;
        }
        case ProblemKind::TravelingSalesman: {
            const auto& p = x.as<TspPayload>();
            if (p.n < 3) out.push_back("tour needs at least three vertices");
            std::set<std::pair<Int, Int>> seen;
            for (const auto& e : p.edges) {
                check_vertex_range(e.a, p.n, out, "edge endpoint");
                check_vertex_range(e.b, p.n, out, "edge endpoint");
                if (e.a >= e.b) out.push_back("edge not stored as (min,max)");
                if (e.w < 0) out.push_back("negative edge weight");
                seen.insert({e.a, e.b});
            }
            if (static_cast<Int>(seen.size()) != p.n * (p.n - 1) / 2 ||
                seen.size() != p.edges.size())
                out.push_back("graph is not complete");
            break;
        }
        case ProblemKind::DirectedTwoDisjointPath: {
            const auto& p = x.as<TwoDppPayload>();
            if (p.n < 0) out.push_back("negative vertex count");
            check_arc_list(p.arcs, p.n, out);
            for (Int v : {p.s1, p.t1, p.s2, p.t2}) check_vertex_range(v, p.n, out, "terminal");
            std::set<Int> terms{p.s1, p.t1, p.s2, p.t2};
            if (terms.size() != 4) out.push_back("terminals not pairwise distinct");
            break;
        }
        case ProblemKind::DirectedKDisjointPath: {
            const auto& p = x.as<KDppPayload>();
            if (p.n < 0) out.push_back("negative vertex count");
            if (p.pairs.empty()) out.push_back("needs at least one terminal pair");
            check_arc_list(p.arcs, p.n, out);
            std::set<Int> terms;
            for (const auto& [s, t] : p.pairs) {
                check_vertex_range(s, p.n, out, "terminal");
                check_vertex_range(t, p.n, out, "terminal");
                terms.insert(s);
                terms.insert(t);
            }
            if (terms.size() != 2 * p.pairs.size()) out.push_back("terminals not pairwise distinct");
            break;
        }
        case ProblemKind::SteinerTree: {
            const auto& p = x.as<SteinerPayload>();
            if (p.n < 0) out.push_back("negative vertex count");
            if (p.terminals.empty()) out.push_back("needs at least one terminal");
            for (Int v : p.terminals) check_vertex_range(v, p.n, out, "terminal");
            if (!std::is_sorted(p.terminals.begin(), p.terminals.end()) ||
                std::adjacent_find(p.terminals.begin(), p.terminals.end()) != p.terminals.end())
                out.push_back("terminal list not sorted or has duplicates");
            std::set<std::pair<Int, Int>> seen;
            for (const auto& e : p.edges) {
                check_vertex_range(e.a, p.n, out, "edge endpoint");
                check_vertex_range(e.b, p.n, out, "edge endpoint");
                if (e.a >= e.b) out.push_back("edge not stored as (min,max) or self-loop");
                if (e.w < 0) out.push_back("negative edge cost");
                if (!seen.insert({e.a, e.b}).second) out.push_back("duplicate edge");
            }
            break;
        }
    }
    return out;
}

void require_valid(const SspInstance& x) {
    auto diags = validate(x);
    if (diags.empty()) return;
    std::string msg = kind_id(x.kind) + " instance invalid:";
    for (const auto& d : diags) msg += " " + d + ";";
    throw ValidationError(msg);
}

// --- universe -------------------------------------------------------------

Universe universe_of(const SspInstance& x) {
    std::vector<ElementId> elems;
    switch (x.kind) {
        case ProblemKind::Satisfiability:
        case ProblemKind::ThreeSatisfiability: {
            const auto& p = x.as<CnfPayload>();
            for (Int v = 1; v <= p.num_vars; ++v) {
                elems.push_back(lit_elem(v, false));
                elems.push_back(lit_elem(v, true));
            }
            break;
        }
        case ProblemKind::VertexCover:
        case ProblemKind::IndependentSet:
        case ProblemKind::Clique:
        case ProblemKind::DominatingSet: {
            const auto& p = x.as<GraphKPayload>();
            for (Int v = 1; v <= p.n; ++v) elems.push_back(vertex_elem(v));
            break;
        }
        case ProblemKind::FeedbackVertexSet: {
            const auto& p = x.as<DigraphKPayload>();
            for (Int v = 1; v <= p.n; ++v) elems.push_back(vertex_elem(v));
            break;
        }
        case ProblemKind::FeedbackArcSet: {
            const auto& p = x.as<DigraphKPayload>();
            for (auto [a, b] : p.arcs) elems.push_back(arc_elem(a, b));
            break;
        }
        case ProblemKind::SetCover: {
            const auto& p = x.as<SetSystemPayload>();
            for (Int i = 1; i <= static_cast<Int>(p.sets.size()); ++i)
                elems.push_back(set_elem(i));
            break;
        }
        case ProblemKind::HittingSet: {
            const auto& p = x.as<SetSystemPayload>();
            for (Int i = 1; i <= p.ground; ++i) elems.push_back(ground_elem(i));
            break;
        }
        case ProblemKind::UncapacitatedFacilityLocation: {
            const auto& p = x.as<UflPayload>();
            for (Int j = 1; j <= p.facilities; ++j) elems.push_back(facility_elem(j));
            break;
        }
        case ProblemKind::PCenter:
        case ProblemKind::PMedian: {
            const auto& p = x.as<FacilityPayload>();
            for (Int j = 1; j <= p.facilities; ++j) elems.push_back(facility_elem(j));
            break;
        }
        case ProblemKind::SubsetSum: {
            const auto& p = x.as<SubsetSumPayload>();
            for (Int i = 1; i <= static_cast<Int>(p.values.size()); ++i)
                elems.push_back(num_elem(i));
            break;
        }
        case ProblemKind::Knapsack: {
            const auto& p = x.as<KnapsackPayload>();
            for (Int i = 1; i <= static_cast<Int>(p.items.size()); ++i)
                elems.push_back(item_elem(i));
            break;
        }
        case ProblemKind::Partition: {
            const auto& p = x.as<PartitionPayload>();
            for (Int i = 1; i <= static_cast<Int>(p.values.size()); ++i)
                elems.push_back(num_elem(i));
            break;
        }
        case ProblemKind::TwoMachineScheduling: {
            const auto& p = x.as<SchedulingPayload>();
            for (Int i = 1; i <= static_cast<Int>(p.times.size()); ++i)
                elems.push_back(job_elem(i));
            break;
        }
        case ProblemKind::DirectedHamiltonianPath: {
            const auto& p = x.as<DhamPathPayload>();
            for (auto [a, b] : p.arcs) elems.push_back(arc_elem(a, b));
            break;
        }
        case ProblemKind::DirectedHamiltonianCycle: {
            const auto& p = x.as<DigraphPayload>();
            for (auto [a, b] : p.arcs) elems.push_back(arc_elem(a, b));
            break;
        }
        case ProblemKind::UndirectedHamiltonianCycle: {
            const auto& p = x.as<GraphPayload>();
            for (auto [a, b] : p.edges) elems.push_back(edge_elem(a, b));
            break;
        }
        case ProblemKind::TravelingSalesman: {
            const auto& p = x.as<TspPayload>();
            for (const auto& e : p.edges) elems.push_back(edge_elem(e.a, e.b));
            break;
        }
        case ProblemKind::DirectedTwoDisjointPath: {
            const auto& p = x.as<TwoDppPayload>();
            for (auto [a, b] : p.arcs) elems.push_back(arc_elem(a, b));
            break;
        }
        case ProblemKind::DirectedKDisjointPath: {
            const auto& p = x.as<KDppPayload>();
            for (auto [a, b] : p.arcs) elems.push_back(arc_elem(a, b));
            break;
        }
        case ProblemKind::SteinerTree: {
            const auto& p = x.as<SteinerPayload>();
            for (const auto& e : p.edges) elems.push_back(edge_elem(e.a, e.b));
            break;
        }
    }
    return Universe(std::move(elems));
}

// --- solution predicates ----------------------------------------------------

namespace {

bool cnf_solution(const CnfPayload& p, const Subset& s) {
    std::vector<char> chosen(static_cast<std::size_t>(p.num_vars) * 2 + 2, 0);
    std::vector<Int> per_var(static_cast<std::size_t>(p.num_vars) + 1, 0);
    for (const auto& e : s) {
        std::size_t slot = static_cast<std::size_t>(e.idx[0]) * 2 + static_cast<std::size_t>(e.idx[1]);
        chosen[slot] = 1;
        ++per_var[static_cast<std::size_t>(e.idx[0])];
    }
    for (Int v = 1; v <= p.num_vars; ++v)
        if (per_var[static_cast<std::size_t>(v)] != 1) return false;
    for (const auto& cl : p.clauses) {
        bool hit = false;
        for (Int code : cl) {
            Int v = code < 0 ? -code : code;
            std::size_t slot = static_cast<std::size_t>(v) * 2 + (code < 0 ? 1 : 0);
            if (chosen[slot]) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

bool covers_edges(const GraphKPayload& p, const std::vector<char>& in) {
    for (auto [a, b] : p.edges)
        if (!in[static_cast<std::size_t>(a)] && !in[static_cast<std::size_t>(b)]) return false;
    return true;
}

bool independent(const GraphKPayload& p, const std::vector<char>& in) {
    for (auto [a, b] : p.edges)
        if (in[static_cast<std::size_t>(a)] && in[static_cast<std::size_t>(b)]) return false;
    return true;
}

bool clique(const GraphKPayload& p, const Subset& s) {
    std::set<std::pair<Int, Int>> edges(p.edges.begin(), p.edges.end());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            Int a = s[i].idx[0], b = s[j].idx[0];
            if (!edges.count({std::min(a, b), std::max(a, b)})) return false;
        }
    return true;
}

bool dominates(const GraphKPayload& p, const std::vector<char>& in) {
    std::vector<char> dom = in;
    for (auto [a, b] : p.edges) {
        if (in[static_cast<std::size_t>(a)]) dom[static_cast<std::size_t>(b)] = 1;
        if (in[static_cast<std::size_t>(b)]) dom[static_cast<std::size_t>(a)] = 1;
    }
    for (Int v = 1; v <= p.n; ++v)
        if (!dom[static_cast<std::size_t>(v)]) return false;
    return true;
}

std::vector<char> membership(const Subset& s, Int n, std::size_t idx_slot = 0) {
    std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& e : s) in[static_cast<std::size_t>(e.idx[idx_slot])] = 1;
    return in;
}

bool set_cover_feasible(const SetSystemPayload& p, const Subset& s) {
    std::vector<char> covered(static_cast<std::size_t>(p.ground) + 1, 0);
    for (const auto& e : s)
        for (Int g : p.sets[static_cast<std::size_t>(e.idx[0] - 1)])
            covered[static_cast<std::size_t>(g)] = 1;
    for (Int g = 1; g <= p.ground; ++g)
        if (!covered[static_cast<std::size_t>(g)]) return false;
    return true;
}

bool hitting_feasible(const SetSystemPayload& p, const Subset& s) {
    std::vector<char> in = membership(s, p.ground);
    for (const auto& constraint : p.sets) {
        bool hit = false;
        for (Int g : constraint)
            if (in[static_cast<std::size_t>(g)]) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

// Total service cost with min-over-open assignment; nullopt when some client
// has no open facility.
std::optional<Int> ufl_cost(const UflPayload& p, const Subset& s) {
    Int total = 0;
    for (const auto& e : s)
        total = checked_add(total, p.open_cost[static_cast<std::size_t>(e.idx[0] - 1)]);
    for (Int i = 0; i < p.clients; ++i) {
        std::optional<Int> best;
        for (const auto& e : s) {
            Int c = p.service[static_cast<std::size_t>(i)][static_cast<std::size_t>(e.idx[0] - 1)];
            if (!best || c < *best) best = c;
        }
        if (!best) return std::nullopt;
        total = checked_add(total, *best);
    }
    return total;
}

bool facility_solution(const FacilityPayload& p, const Subset& s, bool median) {
    if (static_cast<Int>(s.size()) > p.p) return false;
    Int sum = 0;
    Int worst = 0;
    for (Int i = 0; i < p.clients; ++i) {
        std::optional<Int> best;
        for (const auto& e : s) {
            Int c = p.service[static_cast<std::size_t>(i)][static_cast<std::size_t>(e.idx[0] - 1)];
            if (!best || c < *best) best = c;
        }
        if (!best) return false;
        sum = checked_add(sum, *best);
        worst = std::max(worst, *best);
    }
    if (p.clients == 0) return true;
    return median ? sum <= p.k : worst <= p.k;
}

bool two_dpp_solution(const TwoDppPayload& p, const Subset& s) {
    auto arcs = arc_pairs(s);
    std::vector<Int> succ(static_cast<std::size_t>(p.n) + 1, 0);
    std::vector<char> has_in(static_cast<std::size_t>(p.n) + 1, 0);
    for (auto [a, b] : arcs) {
        if (succ[static_cast<std::size_t>(a)] != 0) return false;
        if (has_in[static_cast<std::size_t>(b)]) return false;
        succ[static_cast<std::size_t>(a)] = b;
        has_in[static_cast<std::size_t>(b)] = 1;
    }
    std::vector<char> used(static_cast<std::size_t>(p.n) + 1, 0);
    std::size_t consumed = 0;
    auto walk = [&](Int from, Int to) {
        if (used[static_cast<std::size_t>(from)]) return false;
        used[static_cast<std::size_t>(from)] = 1;
        Int cur = from;
        while (cur != to) {
            Int nxt = succ[static_cast<std::size_t>(cur)];
            if (nxt == 0) return false;
            if (used[static_cast<std::size_t>(nxt)]) return false;
            used[static_cast<std::size_t>(nxt)] = 1;
            cur = nxt;
            ++consumed;
        }
        // Endpoint must terminate its path.
        return succ[static_cast<std::size_t>(to)] == 0;
    };
    if (!walk(p.s1, p.t1)) return false;
    if (!walk(p.s2, p.t2)) return false;
    return consumed == arcs.size();
}

bool k_dpp_solution(const KDppPayload& p, const Subset& s) {
    auto arcs = arc_pairs(s);
    std::vector<Int> succ(static_cast<std::size_t>(p.n) + 1, 0);
    std::vector<char> has_in(static_cast<std::size_t>(p.n) + 1, 0);
    for (auto [a, b] : arcs) {
        if (succ[static_cast<std::size_t>(a)] != 0) return false;
        if (has_in[static_cast<std::size_t>(b)]) return false;
        succ[static_cast<std::size_t>(a)] = b;
        has_in[static_cast<std::size_t>(b)] = 1;
    }
    std::vector<char> used(static_cast<std::size_t>(p.n) + 1, 0);
    std::size_t consumed = 0;
    for (const auto& [from, to] : p.pairs) {
        if (used[static_cast<std::size_t>(from)]) return false;
        used[static_cast<std::size_t>(from)] = 1;
        Int cur = from;
        while (cur != to) {
            Int nxt = succ[static_cast<std::size_t>(cur)];
            if (nxt == 0) return false;
            if (used[static_cast<std::size_t>(nxt)]) return false;
            used[static_cast<std::size_t>(nxt)] = 1;
            cur = nxt;
            ++consumed;
        }
        if (succ[static_cast<std::size_t>(to)] != 0) return false;
    }
    return consumed == arcs.size();
}

bool steiner_tree_feasible(const SteinerPayload& p, const Subset& s) {
    if (s.empty()) return p.terminals.size() <= 1;
    Dsu dsu(p.n);
    std::vector<char> touched(static_cast<std::size_t>(p.n) + 1, 0);
    for (const auto& e : s) {
        touched[static_cast<std::size_t>(e.idx[0])] = 1;
        touched[static_cast<std::size_t>(e.idx[1])] = 1;
        if (!dsu.unite(e.idx[0], e.idx[1])) return false;  // cycle
    }
    Int root = dsu.find(s.front().idx[0]);
    for (Int v = 1; v <= p.n; ++v)
        if (touched[static_cast<std::size_t>(v)] && dsu.find(v) != root) return false;
    for (Int t : p.terminals)
        if (!touched[static_cast<std::size_t>(t)] || dsu.find(t) != root) return false;
    return true;
}

Int tsp_weight(const TspPayload& p, const Subset& s) {
    std::map<std::pair<Int, Int>, Int> w;
    for (const auto& e : p.edges) w[{e.a, e.b}] = e.w;
    Int total = 0;
    for (const auto& e : s) total = checked_add(total, w.at({e.idx[0], e.idx[1]}));
    return total;
}

Int steiner_weight(const SteinerPayload& p, const Subset& s) {
    std::map<std::pair<Int, Int>, Int> w;
    for (const auto& e : p.edges) w[{e.a, e.b}] = e.w;
    Int total = 0;
    for (const auto& e : s) total = checked_add(total, w.at({e.idx[0], e.idx[1]}));
    return total;
}

void require_in_universe(const SspInstance& x, const Subset& s) {
    Universe u = universe_of(x);
    for (const auto& e : s)
        if (!u.contains(e)) throw ForeignElement("element outside universe: " + to_string(e));
}

}  // namespace

bool is_solution(const SspInstance& x, const Subset& s) {
    require_in_universe(x, s);
    switch (x.kind) {
        case ProblemKind::Satisfiability:
        case ProblemKind::ThreeSatisfiability:
            return cnf_solution(x.as<CnfPayload>(), s);
        case ProblemKind::VertexCover: {
            const auto& p = x.as<GraphKPayload>();
            return static_cast<Int>(s.size()) <= p.k && covers_edges(p, membership(s, p.n));
        }
        case ProblemKind::IndependentSet: {
            const auto& p = x.as<GraphKPayload>();
            return static_cast<Int>(s.size()) >= p.k && independent(p, membership(s, p.n));
        }
        case ProblemKind::Clique: {
            const auto& p = x.as<GraphKPayload>();
            return static_cast<Int>(s.size()) >= p.k && clique(p, s);
        }
        case ProblemKind::DominatingSet: {
            const auto& p = x.as<GraphKPayload>();
            return static_cast<Int>(s.size()) <= p.k && dominates(p, membership(s, p.n));
        }
        case ProblemKind::SetCover: {
            const auto& p = x.as<SetSystemPayload>();
            return static_cast<Int>(s.size()) <= p.k && set_cover_feasible(p, s);
        }
        case ProblemKind::HittingSet: {
            const auto& p = x.as<SetSystemPayload>();
            return static_cast<Int>(s.size()) <= p.k && hitting_feasible(p, s);
        }
        case ProblemKind::FeedbackVertexSet: {
            const auto& p = x.as<DigraphKPayload>();
            if (static_cast<Int>(s.size()) > p.k) return false;
            std::vector<char> kept(static_cast<std::size_t>(p.n) + 1, 1);
            for (const auto& e : s) kept[static_cast<std::size_t>(e.idx[0])] = 0;
            return !digraph_has_cycle(p.n, p.arcs, &kept, nullptr);
        }
        case ProblemKind::FeedbackArcSet: {
            const auto& p = x.as<DigraphKPayload>();
            if (static_cast<Int>(s.size()) > p.k) return false;
            std::set<std::pair<Int, Int>> del;
            for (const auto& e : s) del.insert({e.idx[0], e.idx[1]});
            std::vector<char> kept(p.arcs.size(), 1);
            for (std::size_t i = 0; i < p.arcs.size(); ++i)
                if (del.count(p.arcs[i])) kept[i] = 0;
            return !digraph_has_cycle(p.n, p.arcs, nullptr, &kept);
        }
        case ProblemKind::UncapacitatedFacilityLocation: {
            const auto& p = x.as<UflPayload>();
            auto cost = ufl_cost(p, s);
            return cost && *cost <= p.k;
        }
        case ProblemKind::PCenter:
            return facility_solution(x.as<FacilityPayload>(), s, false);
        case ProblemKind::PMedian:
            return facility_solution(x.as<FacilityPayload>(), s, true);
        case ProblemKind::SubsetSum: {
            const auto& p = x.as<SubsetSumPayload>();
            return sum_values(p.values, s) == p.target;
        }
        case ProblemKind::Knapsack: {
            const auto& p = x.as<KnapsackPayload>();
            Int profit = 0, weight = 0;
            for (const auto& e : s) {
                const auto& [pi, wi] = p.items[static_cast<std::size_t>(e.idx[0] - 1)];
                profit = checked_add(profit, pi);
                weight = checked_add(weight, wi);
            }
            return weight <= p.max_weight && profit >= p.min_profit;
        }
        case ProblemKind::Partition: {
            const auto& p = x.as<PartitionPayload>();
            Int n = static_cast<Int>(p.values.size());
            if (n == 0) return false;
            std::vector<char> in = membership(s, n);
            if (!in[static_cast<std::size_t>(n)]) return false;
            Int total = 0;
            for (Int v : p.values) total = checked_add(total, v);
            Int picked = sum_values(p.values, s);
            return checked_mul(picked, 2) == total;
        }
        case ProblemKind::TwoMachineScheduling: {
            const auto& p = x.as<SchedulingPayload>();
            Int n = static_cast<Int>(p.times.size());
            if (n == 0) return false;
            std::vector<char> in = membership(s, n);
            if (!in[static_cast<std::size_t>(n)]) return false;
            Int total = 0;
            for (Int v : p.times) total = checked_add(total, v);
            Int first = sum_values(p.times, s);
            return first <= p.deadline && checked_sub(total, first) <= p.deadline;
        }
        case ProblemKind::DirectedHamiltonianPath: {
            const auto& p = x.as<DhamPathPayload>();
            return is_path_arc_set(arc_pairs(s), p.n, p.s, p.t, p.n);
        }
        case ProblemKind::DirectedHamiltonianCycle: {
            const auto& p = x.as<DigraphPayload>();
            auto arcs = arc_pairs(s);
            if (p.n < 2 || static_cast<Int>(arcs.size()) != p.n) return false;
            std::vector<Int> succ(static_cast<std::size_t>(p.n) + 1, 0);
            std::vector<char> has_in(static_cast<std::size_t>(p.n) + 1, 0);
            for (auto [a, b] : arcs) {
                if (succ[static_cast<std::size_t>(a)] != 0 || has_in[static_cast<std::size_t>(b)])
                    return false;
                succ[static_cast<std::size_t>(a)] = b;
                has_in[static_cast<std::size_t>(b)] = 1;
            }
            Int cur = 1, steps = 0;
            do {
                cur = succ[static_cast<std::size_t>(cur)];
                if (cur == 0) return false;
                ++steps;
            } while (cur != 1 && steps <= p.n);
            return cur == 1 && steps == p.n;
        }
        case ProblemKind::UndirectedHamiltonianCycle: {
            const auto& p = x.as<GraphPayload>();
            return is_cycle_edge_set(s, p.n);
        }
        case ProblemKind::TravelingSalesman: {
            const auto& p = x.as<TspPayload>();
            return is_cycle_edge_set(s, p.n) && tsp_weight(p, s) <= p.k;
        }
        case ProblemKind::DirectedTwoDisjointPath:
            return two_dpp_solution(x.as<TwoDppPayload>(), s);
        case ProblemKind::DirectedKDisjointPath:
            return k_dpp_solution(x.as<KDppPayload>(), s);
        case ProblemKind::SteinerTree: {
            const auto& p = x.as<SteinerPayload>();
            return steiner_tree_feasible(p, s) && steiner_weight(p, s) <= p.k;
        }
    }
    return false;
}

bool is_feasible(const SspInstance& x, const Subset& s) {
    if (!is_lop_kind(x.kind))
        throw NotAnLop(kind_id(x.kind) + " has no feasible-set structure");
    require_in_universe(x, s);
    switch (x.kind) {
        case ProblemKind::VertexCover: {
            const auto& p = x.as<GraphKPayload>();
            return covers_edges(p, membership(s, p.n));
        }
        case ProblemKind::IndependentSet: {
            const auto& p = x.as<GraphKPayload>();
            return independent(p, membership(s, p.n));
        }
        case ProblemKind::Clique:
            return clique(x.as<GraphKPayload>(), s);
        case ProblemKind::DominatingSet: {
            const auto& p = x.as<GraphKPayload>();
            return dominates(p, membership(s, p.n));
        }
        case ProblemKind::SetCover:
            return set_cover_feasible(x.as<SetSystemPayload>(), s);
        case ProblemKind::HittingSet:
            return hitting_feasible(x.as<SetSystemPayload>(), s);
        case ProblemKind::FeedbackVertexSet: {
            const auto& p = x.as<DigraphKPayload>();
            std::vector<char> kept(static_cast<std::size_t>(p.n) + 1, 1);
            for (const auto& e : s) kept[static_cast<std::size_t>(e.idx[0])] = 0;
            return !digraph_has_cycle(p.n, p.arcs, &kept, nullptr);
        }
        case ProblemKind::FeedbackArcSet: {
            const auto& p = x.as<DigraphKPayload>();
            std::set<std::pair<Int, Int>> del;
            for (const auto& e : s) del.insert({e.idx[0], e.idx[1]});
            std::vector<char> kept(p.arcs.size(), 1);
            for (std::size_t i = 0; i < p.arcs.size(); ++i)
                if (del.count(p.arcs[i])) kept[i] = 0;
            return !digraph_has_cycle(p.n, p.arcs, nullptr, &kept);
        }
        case ProblemKind::Knapsack: {
            const auto& p = x.as<KnapsackPayload>();
            Int weight = 0;
            for (const auto& e : s)
                weight = checked_add(weight, p.items[static_cast<std::size_t>(e.idx[0] - 1)].second);
            return weight <= p.max_weight;
        }
        case ProblemKind::TravelingSalesman: {
            const auto& p = x.as<TspPayload>();
            return is_cycle_edge_set(s, p.n);
        }
        case ProblemKind::SteinerTree:
            return steiner_tree_feasible(x.as<SteinerPayload>(), s);
        default:
            throw NotAnLop(kind_id(x.kind) + " has no feasible-set structure");
    }
}

Int lop_cost(const SspInstance& x, const ElementId& e) {
    if (!is_lop_kind(x.kind))
        throw NotAnLop(kind_id(x.kind) + " has no cost structure");
    universe_of(x).index_of(e);
    switch (x.kind) {
        case ProblemKind::VertexCover:
        case ProblemKind::DominatingSet:
        case ProblemKind::SetCover:
        case ProblemKind::HittingSet:
        case ProblemKind::FeedbackVertexSet:
        case ProblemKind::FeedbackArcSet:
            return 1;
        case ProblemKind::IndependentSet:
        case ProblemKind::Clique:
            return -1;
        case ProblemKind::Knapsack:
            return -x.as<KnapsackPayload>().items[static_cast<std::size_t>(e.idx[0] - 1)].first;
        case ProblemKind::TravelingSalesman: {
            for (const auto& we : x.as<TspPayload>().edges)
                if (we.a == e.idx[0] && we.b == e.idx[1]) return we.w;
            throw ForeignElement("edge not found");
        }
        case ProblemKind::SteinerTree: {
            for (const auto& we : x.as<SteinerPayload>().edges)
                if (we.a == e.idx[0] && we.b == e.idx[1]) return we.w;
            throw ForeignElement("edge not found");
        }
        default:
            throw NotAnLop(kind_id(x.kind) + " has no cost structure");
    }
}

Int lop_cost(const SspInstance& x, const Subset& s) {
    Int total = 0;
    for (const auto& e : s) total = checked_add(total, lop_cost(x, e));
    return total;
}

Int lop_threshold(const SspInstance& x) {
    if (!is_lop_kind(x.kind))
        throw NotAnLop(kind_id(x.kind) + " has no cost structure");
    switch (x.kind) {
        case ProblemKind::VertexCover:
        case ProblemKind::DominatingSet:
            return x.as<GraphKPayload>().k;
        case ProblemKind::IndependentSet:
        case ProblemKind::Clique:
            return -x.as<GraphKPayload>().k;
        case ProblemKind::SetCover:
        case ProblemKind::HittingSet:
            return x.as<SetSystemPayload>().k;
        case ProblemKind::FeedbackVertexSet:
        case ProblemKind::FeedbackArcSet:
            return x.as<DigraphKPayload>().k;
        case ProblemKind::Knapsack:
            return -x.as<KnapsackPayload>().min_profit;
        case ProblemKind::TravelingSalesman:
            return x.as<TspPayload>().k;
        case ProblemKind::SteinerTree:
            return x.as<SteinerPayload>().k;
        default:
            throw NotAnLop(kind_id(x.kind) + " has no cost structure");
    }
}

CnfPayload make_cnf(Int num_vars, std::vector<std::vector<Int>> clauses) {
    auto lex_literal_less = [](const std::vector<Int>& a, const std::vector<Int>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            literal_less);
    };
    for (auto& cl : clauses) {
        std::sort(cl.begin(), cl.end(), literal_less);
        cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
    }
    std::sort(clauses.begin(), clauses.end(), lex_literal_less);
    clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
    return CnfPayload{num_vars, std::move(clauses)};
}

std::vector<std::pair<Int, Int>> normalize_edges(std::vector<std::pair<Int, Int>> edges) {
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

std::vector<std::pair<Int, Int>> normalize_arcs(std::vector<std::pair<Int, Int>> arcs) {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return arcs;
}

bool has_solution(const SspInstance& x, Budget& budget) {
    SolutionFamily fam = enumerate_solutions(x, budget);
    if (!fam.empty()) return true;
    if (!fam.complete())
        throw BudgetExceeded("cannot certify empty solution set within budget");
    return false;
}

}  // namespace ssp
