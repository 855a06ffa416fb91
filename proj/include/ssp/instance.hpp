#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "ssp/element.hpp"
#include "ssp/family.hpp"

namespace ssp {

enum class ProblemKind {
    Satisfiability,
    ThreeSatisfiability,
    VertexCover,
    IndependentSet,
    Clique,
    DominatingSet,
    SetCover,
    HittingSet,
    FeedbackVertexSet,
    FeedbackArcSet,
    UncapacitatedFacilityLocation,
    PCenter,
    PMedian,
    SubsetSum,
    Knapsack,
    Partition,
    TwoMachineScheduling,
    DirectedHamiltonianPath,
    DirectedHamiltonianCycle,
    UndirectedHamiltonianCycle,
    TravelingSalesman,
    DirectedTwoDisjointPath,
    DirectedKDisjointPath,
    SteinerTree,
};

/// Stable textual id used by the CLI and the reduction catalog.
const std::string& kind_id(ProblemKind kind);
std::optional<ProblemKind> kind_from_id(const std::string& id);

/// Kinds whose solution set is derived from a feasible set, an additive cost
/// and a threshold. Everything else is subset-search only.
bool is_lop_kind(ProblemKind kind);

// --- payload shapes -------------------------------------------------------

/// Clause list over variables 1..num_vars; clauses are sets of signed
/// DIMACS-style literal codes, each sorted by (variable, sign).
struct CnfPayload {
    Int num_vars = 0;
    std::vector<std::vector<Int>> clauses;
};

/// Undirected graph with a cardinality bound (cover/independent-set style).
struct GraphKPayload {
    Int n = 0;
    std::vector<std::pair<Int, Int>> edges;
    Int k = 0;
};

/// Digraph with a cardinality bound (feedback-set style).
struct DigraphKPayload {
    Int n = 0;
    std::vector<std::pair<Int, Int>> arcs;
    Int k = 0;
};

/// Set system over ground elements 1..ground with a cardinality bound.
struct SetSystemPayload {
    Int ground = 0;
    std::vector<std::vector<Int>> sets;
    Int k = 0;
};

struct UflPayload {
    Int clients = 0;
    Int facilities = 0;
    std::vector<Int> open_cost;                // per facility
    std::vector<std::vector<Int>> service;     // clients x facilities
    Int k = 0;
};

/// Shared by p-center and p-median.
struct FacilityPayload {
    Int clients = 0;
    Int facilities = 0;
    std::vector<std::vector<Int>> service;     // clients x facilities
    Int p = 0;
    Int k = 0;
};

struct SubsetSumPayload {
    std::vector<Int> values;
    Int target = 0;
};

struct KnapsackPayload {
    std::vector<std::pair<Int, Int>> items;    // (profit, weight)
    Int min_profit = 0;
    Int max_weight = 0;
};

struct PartitionPayload {
    std::vector<Int> values;
};

struct SchedulingPayload {
    std::vector<Int> times;
    Int deadline = 0;
};

struct DhamPathPayload {
    Int n = 0;
    std::vector<std::pair<Int, Int>> arcs;
    Int s = 0;
    Int t = 0;
};

struct DigraphPayload {
    Int n = 0;
    std::vector<std::pair<Int, Int>> arcs;
};

struct GraphPayload {
    Int n = 0;
    std::vector<std::pair<Int, Int>> edges;
};

struct WeightedEdge {
    Int a = 0;
    Int b = 0;
    Int w = 0;
};

/// Complete weighted graph with a tour budget.
struct TspPayload {
    Int n = 0;
    std::vector<WeightedEdge> edges;
    Int k = 0;
};

struct TwoDppPayload {
    Int n = 0;
    std::vector<std::pair<Int, Int>> arcs;
    Int s1 = 0, t1 = 0, s2 = 0, t2 = 0;
};

struct KDppPayload {
    Int n = 0;
    std::vector<std::pair<Int, Int>> arcs;
    std::vector<std::pair<Int, Int>> pairs;    // (s_i, t_i)
};

struct SteinerPayload {
    Int n = 0;
    std::vector<Int> terminals;                // sorted vertex ids
    std::vector<WeightedEdge> edges;
    Int k = 0;
};

using Payload = std::variant<CnfPayload, GraphKPayload, DigraphKPayload, SetSystemPayload,
                             UflPayload, FacilityPayload, SubsetSumPayload, KnapsackPayload,
                             PartitionPayload, SchedulingPayload, DhamPathPayload, DigraphPayload,
                             GraphPayload, TspPayload, TwoDppPayload, KDppPayload, SteinerPayload>;

/// One problem instance: a kind plus the matching payload shape.
struct SspInstance {
    ProblemKind kind;
    Payload payload;

    template <class T>
    const T& as() const {
        if (const T* p = std::get_if<T>(&payload)) return *p;
        throw KindMismatch("payload shape does not match " + kind_id(kind));
    }
    template <class T>
    T& as() {
        if (T* p = std::get_if<T>(&payload)) return *p;
        throw KindMismatch("payload shape does not match " + kind_id(kind));
    }
};

// --- operations -----------------------------------------------------------

/// Structural diagnostics; empty means the instance is well formed. All other
/// operations assume a validated instance.
std::vector<std::string> validate(const SspInstance& x);

/// Throws ValidationError with joined diagnostics when validate() is nonempty.
void require_valid(const SspInstance& x);

/// Universe in canonical element order, derived deterministically from the
/// payload.
Universe universe_of(const SspInstance& x);

/// Membership test for the solution set. Throws ForeignElement when s
/// mentions anything outside the universe.
bool is_solution(const SspInstance& x, const Subset& s);

/// Feasible-set membership for cost-structured kinds; throws NotAnLop for
/// subset-search-only kinds.
bool is_feasible(const SspInstance& x, const Subset& s);

/// Additive element cost of the derived cost structure; throws NotAnLop.
Int lop_cost(const SspInstance& x, const ElementId& e);
Int lop_cost(const SspInstance& x, const Subset& s);

/// Threshold of the derived cost structure; throws NotAnLop.
Int lop_threshold(const SspInstance& x);

/// Exhaustive, kind-structured enumeration of the solution set.
SolutionFamily enumerate_solutions(const SspInstance& x, Budget& budget);

/// Exhaustive enumeration of the feasible set (cost-structured kinds only).
SolutionFamily enumerate_feasible(const SspInstance& x, Budget& budget);

/// Yes-instance test; either resolved exactly within the budget or throws
/// BudgetExceeded to avoid a wrong verdict.
bool has_solution(const SspInstance& x, Budget& budget);

/// Canonicalizes a raw clause list: literal order (variable, polarity) inside
/// each clause, duplicate literals dropped, clause list sorted and deduped.
CnfPayload make_cnf(Int num_vars, std::vector<std::vector<Int>> clauses);

/// Normalizes an undirected edge list: endpoints as (min,max), sorted, deduped.
std::vector<std::pair<Int, Int>> normalize_edges(std::vector<std::pair<Int, Int>> edges);

/// Sorts and dedupes an arc list.
std::vector<std::pair<Int, Int>> normalize_arcs(std::vector<std::pair<Int, Int>> arcs);

/// Minimal read-only view shared by catalog instances and robust-variant
/// wrappers: a universe, a membership predicate and an enumerator.
class SspView {
  public:
    virtual ~SspView() = default;
    virtual Universe universe() const = 0;
    virtual bool contains(const Subset& s) const = 0;
    virtual SolutionFamily enumerate(Budget& budget) const = 0;
};

class InstanceView final : public SspView {
  public:
    explicit InstanceView(const SspInstance& x) : x_(&x) {}
    Universe universe() const override { return universe_of(*x_); }
    bool contains(const Subset& s) const override { return is_solution(*x_, s); }
    SolutionFamily enumerate(Budget& budget) const override {
        return enumerate_solutions(*x_, budget);
    }

  private:
    const SspInstance* x_;
};

}  // namespace ssp
