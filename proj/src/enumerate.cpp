#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>

#include "ssp/instance.hpp"
#include "ssp/ints.hpp"

namespace ssp {

namespace {

// Shared state for one enumeration run.  Every search node ticks the budget;
// when it runs out the walk unwinds and the partial family is returned with
// BudgetExceeded status.
struct Run {
    explicit Run(Budget& b) : budget(b) {}

    Budget& budget;
    std::vector<Subset> out;
    bool exceeded = false;

    bool tick() {
        if (budget.tick()) return true;
        exceeded = true;
        return false;
    }
};

void enumerate_cnf(const CnfPayload& p, Run& run) {
    for (const auto& cl : p.clauses)
        if (cl.empty()) return;
    // Clauses indexed by the variable that decides them last.
    std::vector<std::vector<const std::vector<Int>*>> by_last(
        static_cast<std::size_t>(p.num_vars) + 1);
    for (const auto& cl : p.clauses) {
        Int last = 0;
        for (Int code : cl) last = std::max(last, code < 0 ? -code : code);
        by_last[static_cast<std::size_t>(last)].push_back(&cl);
    }
    std::vector<char> value(static_cast<std::size_t>(p.num_vars) + 1, 0);
    std::function<void(Int)> rec = [&](Int v) {
        if (!run.tick()) return;
        if (v > p.num_vars) {
            Subset s;
            for (Int i = 1; i <= p.num_vars; ++i)
                s.push_back(lit_elem(i, value[static_cast<std::size_t>(i)] == 0));
            run.out.push_back(std::move(s));
            return;
        }
        for (char val : {char(1), char(0)}) {
            value[static_cast<std::size_t>(v)] = val;
            bool ok = true;
            for (const auto* cl : by_last[static_cast<std::size_t>(v)]) {
                bool hit = false;
                for (Int code : *cl) {
                    Int var = code < 0 ? -code : code;
                    bool want_true = code > 0;
                    if ((value[static_cast<std::size_t>(var)] != 0) == want_true) {
                        hit = true;
                        break;
                    }
                }
                if (!hit) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(v + 1);
            if (run.exceeded) return;
        }
    };
    rec(1);
}

void enumerate_vertex_cover(const GraphKPayload& p, Run& run) {
    if (p.k < 0) return;
    // Edges keyed by their later endpoint: once that endpoint is rejected the
    // earlier one must already be in the cover.
    std::vector<std::vector<Int>> other_by_max(static_cast<std::size_t>(p.n) + 1);
    for (auto [a, b] : p.edges) other_by_max[static_cast<std::size_t>(b)].push_back(a);
    std::vector<char> in(static_cast<std::size_t>(p.n) + 1, 0);
    std::function<void(Int, Int)> rec = [&](Int pos, Int chosen) {
        if (!run.tick()) return;
        if (pos > p.n) {
            Subset s;
            for (Int v = 1; v <= p.n; ++v)
                if (in[static_cast<std::size_t>(v)]) s.push_back(vertex_elem(v));
            run.out.push_back(std::move(s));
            return;
        }
        if (chosen < p.k) {
            in[static_cast<std::size_t>(pos)] = 1;
            rec(pos + 1, chosen + 1);
            in[static_cast<std::size_t>(pos)] = 0;
            if (run.exceeded) return;
        }
        bool dead = false;
        for (Int a : other_by_max[static_cast<std::size_t>(pos)])
            if (!in[static_cast<std::size_t>(a)]) {
                dead = true;
                break;
            }
        if (!dead) rec(pos + 1, chosen);
    };
    rec(1, 0);
}

void enumerate_packing(const GraphKPayload& p, Run& run, bool want_clique) {
    std::vector<std::set<Int>> adj(static_cast<std::size_t>(p.n) + 1);
    for (auto [a, b] : p.edges) {
        adj[static_cast<std::size_t>(a)].insert(b);
        adj[static_cast<std::size_t>(b)].insert(a);
    }
    std::vector<Int> chosen;
    std::function<void(Int)> rec = [&](Int pos) {
        if (!run.tick()) return;
        if (static_cast<Int>(chosen.size()) + (p.n - pos + 1) < p.k) return;
        if (pos > p.n) {
            Subset s;
            for (Int v : chosen) s.push_back(vertex_elem(v));
            run.out.push_back(std::move(s));
            return;
        }
        bool compatible = true;
        for (Int c : chosen) {
            bool edge = adj[static_cast<std::size_t>(c)].count(pos) > 0;
            if (edge != want_clique) {
                compatible = false;
                break;
            }
        }
        if (compatible) {
            chosen.push_back(pos);
            rec(pos + 1);
            chosen.pop_back();
            if (run.exceeded) return;
        }
        rec(pos + 1);
    };
    rec(1);
}

void enumerate_dominating_set(const GraphKPayload& p, Run& run) {
    if (p.k < 0) return;
    std::vector<std::vector<Int>> adj(static_cast<std::size_t>(p.n) + 1);
    for (auto [a, b] : p.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    // Vertices whose entire closed neighbourhood is decided at position pos.
    std::vector<std::vector<Int>> sealed_at(static_cast<std::size_t>(p.n) + 2);
    for (Int v = 1; v <= p.n; ++v) {
        Int last = v;
        for (Int w : adj[static_cast<std::size_t>(v)]) last = std::max(last, w);
        sealed_at[static_cast<std::size_t>(last)].push_back(v);
    }
    std::vector<char> in(static_cast<std::size_t>(p.n) + 1, 0);
    std::vector<Int> dominated(static_cast<std::size_t>(p.n) + 1, 0);
    auto add = [&](Int v, Int delta) {
        dominated[static_cast<std::size_t>(v)] += delta;
        for (Int w : adj[static_cast<std::size_t>(v)])
            dominated[static_cast<std::size_t>(w)] += delta;
    };
    std::function<void(Int, Int)> rec = [&](Int pos, Int chosen) {
        if (!run.tick()) return;
        if (pos > p.n) {
            Subset s;
            for (Int v = 1; v <= p.n; ++v)
                if (in[static_cast<std::size_t>(v)]) s.push_back(vertex_elem(v));
            run.out.push_back(std::move(s));
            return;
        }
        for (char take : {char(1), char(0)}) {
            if (take && chosen >= p.k) continue;
            if (take) {
                in[static_cast<std::size_t>(pos)] = 1;
                add(pos, 1);
            }
            bool dead = false;
            for (Int v : sealed_at[static_cast<std::size_t>(pos)])
                if (dominated[static_cast<std::size_t>(v)] == 0) {
                    dead = true;
                    break;
                }
            if (!dead) rec(pos + 1, chosen + (take ? 1 : 0));
            if (take) {
                in[static_cast<std::size_t>(pos)] = 0;
                add(pos, -1);
            }
            if (run.exceeded) return;
        }
    };
    rec(1, 0);
}

void enumerate_set_cover(const SetSystemPayload& p, Run& run) {
    if (p.k < 0) return;
    Int m = static_cast<Int>(p.sets.size());
    // For each ground element, the last set that could still cover it.
    std::vector<std::vector<Int>> sealed_at(static_cast<std::size_t>(m) + 2);
    for (Int g = 1; g <= p.ground; ++g) {
        Int last = 0;
        for (Int i = 0; i < m; ++i) {
            const auto& s = p.sets[static_cast<std::size_t>(i)];
            if (std::binary_search(s.begin(), s.end(), g)) last = i + 1;
        }
        if (last == 0) return;  // uncoverable element
        sealed_at[static_cast<std::size_t>(last)].push_back(g);
    }
    std::vector<Int> covered(static_cast<std::size_t>(p.ground) + 1, 0);
    std::vector<Int> chosen;
    std::function<void(Int)> rec = [&](Int pos) {
        if (!run.tick()) return;
        if (pos > m) {
            Subset s;
            for (Int i : chosen) s.push_back(set_elem(i));
            run.out.push_back(std::move(s));
            return;
        }
        for (char take : {char(1), char(0)}) {
            if (take && static_cast<Int>(chosen.size()) >= p.k) continue;
            if (take) {
                chosen.push_back(pos);
                for (Int g : p.sets[static_cast<std::size_t>(pos - 1)])
                    ++covered[static_cast<std::size_t>(g)];
            }
            bool dead = false;
            for (Int g : sealed_at[static_cast<std::size_t>(pos)])
                if (covered[static_cast<std::size_t>(g)] == 0) {
                    dead = true;
                    break;
                }
            if (!dead) rec(pos + 1);
            if (take) {
                for (Int g : p.sets[static_cast<std::size_t>(pos - 1)])
                    --covered[static_cast<std::size_t>(g)];
                chosen.pop_back();
            }
            if (run.exceeded) return;
        }
    };
    rec(1);
}

void enumerate_hitting_set(const SetSystemPayload& p, Run& run) {
    if (p.k < 0) return;
    std::vector<std::vector<const std::vector<Int>*>> sealed_at(
        static_cast<std::size_t>(p.ground) + 2);
    for (const auto& constraint : p.sets) {
        if (constraint.empty()) return;
        sealed_at[static_cast<std::size_t>(constraint.back())].push_back(&constraint);
    }
    std::vector<char> in(static_cast<std::size_t>(p.ground) + 1, 0);
    std::function<void(Int, Int)> rec = [&](Int pos, Int chosen) {
        if (!run.tick()) return;
        if (pos > p.ground) {
            Subset s;
            for (Int g = 1; g <= p.ground; ++g)
                if (in[static_cast<std::size_t>(g)]) s.push_back(ground_elem(g));
            run.out.push_back(std::move(s));
            return;
        }
        for (char take : {char(1), char(0)}) {
            if (take && chosen >= p.k) continue;
            in[static_cast<std::size_t>(pos)] = take;
            bool dead = false;
            for (const auto* constraint : sealed_at[static_cast<std::size_t>(pos)]) {
                bool hit = false;
                for (Int g : *constraint)
                    if (in[static_cast<std::size_t>(g)]) {
                        hit = true;
                        break;
                    }
                if (!hit) {
                    dead = true;
                    break;
                }
            }
            if (!dead) rec(pos + 1, chosen + (take ? 1 : 0));
            in[static_cast<std::size_t>(pos)] = 0;
            if (run.exceeded) return;
        }
    };
    rec(1, 0);
}

bool kept_has_cycle(Int n, const std::vector<std::pair<Int, Int>>& arcs,
                    const std::vector<char>& vertex_kept) {
    std::vector<std::vector<Int>> out(static_cast<std::size_t>(n) + 1);
    for (auto [a, b] : arcs)
        if (vertex_kept[static_cast<std::size_t>(a)] && vertex_kept[static_cast<std::size_t>(b)])
            out[static_cast<std::size_t>(a)].push_back(b);
    std::vector<char> state(static_cast<std::size_t>(n) + 1, 0);
    std::function<bool(Int)> dfs = [&](Int v) -> bool {
        state[static_cast<std::size_t>(v)] = 1;
        for (Int w : out[static_cast<std::size_t>(v)]) {
            if (state[static_cast<std::size_t>(w)] == 1) return true;
            if (state[static_cast<std::size_t>(w)] == 0 && dfs(w)) return true;
        }
        state[static_cast<std::size_t>(v)] = 2;
        return false;
    };
    for (Int v = 1; v <= n; ++v)
        if (vertex_kept[static_cast<std::size_t>(v)] && state[static_cast<std::size_t>(v)] == 0 &&
            dfs(v))
            return true;
    return false;
}

void enumerate_feedback_vertex_set(const DigraphKPayload& p, Run& run) {
    if (p.k < 0) return;
    // kept[v] = 1 while v is undecided or decided to stay.
    std::vector<char> kept(static_cast<std::size_t>(p.n) + 1, 0);
    std::vector<Int> deleted;
    std::function<void(Int)> rec = [&](Int pos) {
        if (!run.tick()) return;
        if (pos > p.n) {
            Subset s;
            for (Int v : deleted) s.push_back(vertex_elem(v));
            run.out.push_back(std::move(s));
            return;
        }
        if (static_cast<Int>(deleted.size()) < p.k) {
            deleted.push_back(pos);
            rec(pos + 1);
            deleted.pop_back();
            if (run.exceeded) return;
        }
        kept[static_cast<std::size_t>(pos)] = 1;
        if (!kept_has_cycle(p.n, p.arcs, kept)) rec(pos + 1);
        kept[static_cast<std::size_t>(pos)] = 0;
    };
    rec(1);
}

void enumerate_feedback_arc_set(const DigraphKPayload& p, Run& run) {
    if (p.k < 0) return;
    Int m = static_cast<Int>(p.arcs.size());
    std::vector<char> kept(p.arcs.size(), 0);
    auto kept_cycle = [&](Int upto) {
        std::vector<std::vector<Int>> out(static_cast<std::size_t>(p.n) + 1);
        for (Int i = 0; i < upto; ++i)
            if (kept[static_cast<std::size_t>(i)])
                out[static_cast<std::size_t>(p.arcs[static_cast<std::size_t>(i)].first)].push_back(
                    p.arcs[static_cast<std::size_t>(i)].second);
        std::vector<char> state(static_cast<std::size_t>(p.n) + 1, 0);
        std::function<bool(Int)> dfs = [&](Int v) -> bool {
            state[static_cast<std::size_t>(v)] = 1;
            for (Int w : out[static_cast<std::size_t>(v)]) {
                if (state[static_cast<std::size_t>(w)] == 1) return true;
                if (state[static_cast<std::size_t>(w)] == 0 && dfs(w)) return true;
            }
            state[static_cast<std::size_t>(v)] = 2;
            return false;
        };
        for (Int v = 1; v <= p.n; ++v)
            if (state[static_cast<std::size_t>(v)] == 0 && dfs(v)) return true;
        return false;
    };
    std::vector<Int> deleted;
    std::function<void(Int)> rec = [&](Int pos) {
        if (!run.tick()) return;
        if (pos > m) {
            Subset s;
            for (Int i : deleted) {
                auto [a, b] = p.arcs[static_cast<std::size_t>(i - 1)];
                s.push_back(arc_elem(a, b));
            }
            run.out.push_back(std::move(s));
            return;
        }
        if (static_cast<Int>(deleted.size()) < p.k) {
            deleted.push_back(pos);
            rec(pos + 1);
            deleted.pop_back();
            if (run.exceeded) return;
        }
        kept[static_cast<std::size_t>(pos - 1)] = 1;
        if (!kept_cycle(pos)) rec(pos + 1);
        kept[static_cast<std::size_t>(pos - 1)] = 0;
    };
    rec(1);
}

// Plain subset walk over facilities with the membership predicate applied at
// the leaves; facility counts stay tiny at desk scale.
void enumerate_by_predicate(const SspInstance& x, Int count,
                            const std::function<ElementId(Int)>& make, Run& run) {
    std::vector<Int> chosen;
    std::function<void(Int)> rec = [&](Int pos) {
        if (!run.tick()) return;
        if (pos > count) {
            Subset s;
            for (Int i : chosen) s.push_back(make(i));
            if (is_solution(x, s)) run.out.push_back(std::move(s));
            return;
        }
        chosen.push_back(pos);
        rec(pos + 1);
        chosen.pop_back();
        if (run.exceeded) return;
        rec(pos + 1);
    };
    rec(1);
}

// Subset walk over nonnegative numbers, pruned with running and suffix sums.
// lo/hi bound the admissible final total; force (when >= 1) is an index that
// must be picked.
void enumerate_numbers(const std::vector<Int>& values, Int lo, Int hi, Int force,
                       const std::function<ElementId(Int)>& make, Run& run) {
    Int n = static_cast<Int>(values.size());
    std::vector<Int> suffix(static_cast<std::size_t>(n) + 1, 0);
    for (Int i = n - 1; i >= 0; --i)
        suffix[static_cast<std::size_t>(i)] =
            checked_add(suffix[static_cast<std::size_t>(i) + 1], values[static_cast<std::size_t>(i)]);
    std::vector<Int> chosen;
    std::function<void(Int, Int)> rec = [&](Int pos, Int sum) {
        if (!run.tick()) return;
        if (sum > hi) return;
        if (checked_add(sum, suffix[static_cast<std::size_t>(pos - 1)]) < lo) return;
        if (pos > n) {
            if (sum < lo) return;
            Subset s;
            for (Int i : chosen) s.push_back(make(i));
            run.out.push_back(std::move(s));
            return;
        }
        chosen.push_back(pos);
        rec(pos + 1, checked_add(sum, values[static_cast<std::size_t>(pos - 1)]));
        chosen.pop_back();
        if (run.exceeded) return;
        if (pos != force) rec(pos + 1, sum);
    };
    rec(1, 0);
}

void enumerate_knapsack(const KnapsackPayload& p, Run& run) {
    Int n = static_cast<Int>(p.items.size());
    std::vector<Int> profit_suffix(static_cast<std::size_t>(n) + 1, 0);
    for (Int i = n - 1; i >= 0; --i)
        profit_suffix[static_cast<std::size_t>(i)] = checked_add(
            profit_suffix[static_cast<std::size_t>(i) + 1], p.items[static_cast<std::size_t>(i)].first);
    std::vector<Int> chosen;
    std::function<void(Int, Int, Int)> rec = [&](Int pos, Int profit, Int weight) {
        if (!run.tick()) return;
        if (weight > p.max_weight) return;
        if (checked_add(profit, profit_suffix[static_cast<std::size_t>(pos - 1)]) < p.min_profit)
            return;
        if (pos > n) {
            Subset s;
            for (Int i : chosen) s.push_back(item_elem(i));
            run.out.push_back(std::move(s));
            return;
        }
        const auto& [pi, wi] = p.items[static_cast<std::size_t>(pos - 1)];
        chosen.push_back(pos);
        rec(pos + 1, checked_add(profit, pi), checked_add(weight, wi));
        chosen.pop_back();
        if (run.exceeded) return;
        rec(pos + 1, profit, weight);
    };
    rec(1, 0, 0);
}

struct OutAdj {
    std::vector<std::vector<Int>> out;
    explicit OutAdj(Int n, const std::vector<std::pair<Int, Int>>& arcs)
        : out(static_cast<std::size_t>(n) + 1) {
        for (auto [a, b] : arcs) out[static_cast<std::size_t>(a)].push_back(b);
        for (auto& row : out) std::sort(row.begin(), row.end());
    }
};

void enumerate_dham_path(const DhamPathPayload& p, Run& run) {
    if (p.n == 1) {
        if (run.tick()) run.out.push_back({});
        return;
    }
    OutAdj adj(p.n, p.arcs);
    std::vector<char> visited(static_cast<std::size_t>(p.n) + 1, 0);
    std::vector<std::pair<Int, Int>> path;
    std::function<void(Int, Int)> rec = [&](Int v, Int depth) {
        if (!run.tick()) return;
        if (depth == p.n) {
            if (v == p.t) {
                Subset s;
                for (auto [a, b] : path) s.push_back(arc_elem(a, b));
                run.out.push_back(std::move(s));
            }
            return;
        }
        if (v == p.t) return;
        for (Int w : adj.out[static_cast<std::size_t>(v)]) {
            if (visited[static_cast<std::size_t>(w)]) continue;
            visited[static_cast<std::size_t>(w)] = 1;
            path.push_back({v, w});
            rec(w, depth + 1);
            path.pop_back();
            visited[static_cast<std::size_t>(w)] = 0;
            if (run.exceeded) return;
        }
    };
    visited[static_cast<std::size_t>(p.s)] = 1;
    rec(p.s, 1);
}

void enumerate_dham_cycle(const DigraphPayload& p, Run& run) {
    if (p.n < 2) return;
    OutAdj adj(p.n, p.arcs);
    std::set<std::pair<Int, Int>> arcset(p.arcs.begin(), p.arcs.end());
    std::vector<char> visited(static_cast<std::size_t>(p.n) + 1, 0);
    std::vector<std::pair<Int, Int>> path;
    std::function<void(Int, Int)> rec = [&](Int v, Int depth) {
        if (!run.tick()) return;
        if (depth == p.n) {
            if (arcset.count({v, 1})) {
                Subset s;
                for (auto [a, b] : path) s.push_back(arc_elem(a, b));
                s.push_back(arc_elem(v, 1));
                run.out.push_back(std::move(s));
            }
            return;
        }
        for (Int w : adj.out[static_cast<std::size_t>(v)]) {
            if (visited[static_cast<std::size_t>(w)]) continue;
            visited[static_cast<std::size_t>(w)] = 1;
            path.push_back({v, w});
            rec(w, depth + 1);
            path.pop_back();
            visited[static_cast<std::size_t>(w)] = 0;
            if (run.exceeded) return;
        }
    };
    visited[1] = 1;
    rec(1, 1);
}

void enumerate_uham_cycle(Int n, const std::vector<std::pair<Int, Int>>& edges,
                          const std::map<std::pair<Int, Int>, Int>* weight, Int cap, Run& run) {
    if (n < 3) return;
    std::vector<std::vector<Int>> adj(static_cast<std::size_t>(n) + 1);
    for (auto [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    auto edge_cost = [&](Int a, Int b) {
        if (!weight) return Int{0};
        return weight->at({std::min(a, b), std::max(a, b)});
    };
    std::set<std::pair<Int, Int>> edgeset(edges.begin(), edges.end());
    Int floor_step = 0;
    if (weight && !weight->empty()) {
        floor_step = weight->begin()->second;
        for (const auto& [e, w] : *weight) floor_step = std::min(floor_step, w);
        floor_step = std::max(floor_step, Int{0});
    }
    std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::pair<Int, Int>> path;
    // Cycles start at vertex 1; requiring first neighbour < last neighbour
    // emits each cycle in one direction only. A partial tour still needs
    // n - depth + 1 edges, each at least floor_step, so prune on that bound.
    std::function<void(Int, Int, Int)> rec = [&](Int v, Int depth, Int cost) {
        if (!run.tick()) return;
        if (weight &&
            checked_add(cost, checked_mul(n - depth + 1, floor_step)) > cap)
            return;
        if (depth == n) {
            auto close = std::make_pair(std::min(v, Int{1}), std::max(v, Int{1}));
            if (!edgeset.count(close)) return;
            if (path.front().second > v) return;
            if (weight && checked_add(cost, edge_cost(v, 1)) > cap) return;
            Subset s;
            for (auto [a, b] : path) s.push_back(edge_elem(a, b));
            s.push_back(edge_elem(v, 1));
            run.out.push_back(std::move(s));
            return;
        }
        for (Int w : adj[static_cast<std::size_t>(v)]) {
            if (visited[static_cast<std::size_t>(w)]) continue;
            visited[static_cast<std::size_t>(w)] = 1;
            path.push_back({v, w});
            rec(w, depth + 1, checked_add(cost, edge_cost(v, w)));
            path.pop_back();
            visited[static_cast<std::size_t>(w)] = 0;
            if (run.exceeded) return;
        }
    };
    visited[1] = 1;
    rec(1, 1, 0);
}

void enumerate_disjoint_paths(Int n, const std::vector<std::pair<Int, Int>>& arcs,
                              const std::vector<std::pair<Int, Int>>& pairs, Run& run) {
    OutAdj adj(n, arcs);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::pair<Int, Int>> chosen;
    std::function<void(std::size_t)> next_pair = [&](std::size_t pi) {
        if (pi == pairs.size()) {
            Subset s;
            for (auto [a, b] : chosen) s.push_back(arc_elem(a, b));
            run.out.push_back(std::move(s));
            return;
        }
        auto [from, to] = pairs[pi];
        if (used[static_cast<std::size_t>(from)] || used[static_cast<std::size_t>(to)]) return;
        std::function<void(Int)> walk = [&](Int v) {
            if (!run.tick()) return;
            if (v == to) {
                next_pair(pi + 1);
                return;
            }
            for (Int w : adj.out[static_cast<std::size_t>(v)]) {
                if (used[static_cast<std::size_t>(w)]) continue;
                used[static_cast<std::size_t>(w)] = 1;
                chosen.push_back({v, w});
                walk(w);
                chosen.pop_back();
                used[static_cast<std::size_t>(w)] = 0;
                if (run.exceeded) return;
            }
        };
        used[static_cast<std::size_t>(from)] = 1;
        walk(from);
        used[static_cast<std::size_t>(from)] = 0;
    };
    next_pair(0);
}

void enumerate_steiner(const SteinerPayload& p, Run& run) {
    Int m = static_cast<Int>(p.edges.size());
    std::vector<std::vector<std::pair<Int, Int>>> incident(static_cast<std::size_t>(p.n) + 1);
    for (Int i = 0; i < m; ++i) {
        const auto& e = p.edges[static_cast<std::size_t>(i)];
        incident[static_cast<std::size_t>(e.a)].push_back({e.b, i});
        incident[static_cast<std::size_t>(e.b)].push_back({e.a, i});
    }
    Int root = p.terminals.front();
    std::vector<char> in_tree(static_cast<std::size_t>(p.n) + 1, 0);
    std::vector<char> edge_used(p.edges.size(), 0);
    std::vector<char> banned(p.edges.size(), 0);
    std::vector<Int> tree_vertices{root};
    std::vector<Int> tree_edges;
    in_tree[static_cast<std::size_t>(root)] = 1;

    // Largest single-terminal distance from the current tree, ignoring bans;
    // admissible as a completion-cost bound.
    auto completion_bound = [&]() -> std::optional<Int> {
        std::vector<Int> dist(static_cast<std::size_t>(p.n) + 1, -1);
        std::priority_queue<std::pair<Int, Int>, std::vector<std::pair<Int, Int>>,
                            std::greater<>> pq;
        for (Int v : tree_vertices) {
            dist[static_cast<std::size_t>(v)] = 0;
            pq.push({0, v});
        }
        while (!pq.empty()) {
            auto [d, v] = pq.top();
            pq.pop();
            if (d != dist[static_cast<std::size_t>(v)]) continue;
            for (auto [w, ei] : incident[static_cast<std::size_t>(v)]) {
                Int nd = checked_add(d, p.edges[static_cast<std::size_t>(ei)].w);
                if (dist[static_cast<std::size_t>(w)] == -1 ||
                    nd < dist[static_cast<std::size_t>(w)]) {
                    dist[static_cast<std::size_t>(w)] = nd;
                    pq.push({nd, w});
                }
            }
        }
        Int worst = 0;
        for (Int t : p.terminals) {
            if (dist[static_cast<std::size_t>(t)] == -1) return std::nullopt;
            worst = std::max(worst, dist[static_cast<std::size_t>(t)]);
        }
        return worst;
    };

    std::function<void(Int)> rec = [&](Int cost) {
        if (!run.tick()) return;
        bool all_terminals = true;
        for (Int t : p.terminals)
            if (!in_tree[static_cast<std::size_t>(t)]) {
                all_terminals = false;
                break;
            }
        if (all_terminals && cost <= p.k) {
            Subset s;
            for (Int ei : tree_edges) {
                const auto& e = p.edges[static_cast<std::size_t>(ei)];
                s.push_back(edge_elem(e.a, e.b));
            }
            run.out.push_back(std::move(s));
        }
        auto bound = completion_bound();
        if (!bound || checked_add(cost, *bound) > p.k) return;
        std::vector<Int> frontier;
        for (Int ei = 0; ei < m; ++ei) {
            if (edge_used[static_cast<std::size_t>(ei)] || banned[static_cast<std::size_t>(ei)])
                continue;
            const auto& e = p.edges[static_cast<std::size_t>(ei)];
            bool a_in = in_tree[static_cast<std::size_t>(e.a)];
            bool b_in = in_tree[static_cast<std::size_t>(e.b)];
            if (a_in != b_in) frontier.push_back(ei);
        }
        std::vector<Int> newly_banned;
        for (Int ei : frontier) {
            const auto& e = p.edges[static_cast<std::size_t>(ei)];
            bool a_in = in_tree[static_cast<std::size_t>(e.a)];
            bool b_in = in_tree[static_cast<std::size_t>(e.b)];
            if (a_in == b_in) {
                // Both endpoints joined the tree while processing earlier
                // frontier edges; adding ei now would close a cycle.
                banned[static_cast<std::size_t>(ei)] = 1;
                newly_banned.push_back(ei);
                continue;
            }
            Int fresh = a_in ? e.b : e.a;
            edge_used[static_cast<std::size_t>(ei)] = 1;
            in_tree[static_cast<std::size_t>(fresh)] = 1;
            tree_vertices.push_back(fresh);
            tree_edges.push_back(ei);
            rec(checked_add(cost, e.w));
            tree_edges.pop_back();
            tree_vertices.pop_back();
            in_tree[static_cast<std::size_t>(fresh)] = 0;
            edge_used[static_cast<std::size_t>(ei)] = 0;
            if (run.exceeded) break;
            banned[static_cast<std::size_t>(ei)] = 1;
            newly_banned.push_back(ei);
        }
        for (Int ei : newly_banned) banned[static_cast<std::size_t>(ei)] = 0;
    };
    rec(0);
}

}  // namespace

SolutionFamily enumerate_solutions(const SspInstance& x, Budget& budget) {
    Run run(budget);
    switch (x.kind) {
        case ProblemKind::Satisfiability:
        case ProblemKind::ThreeSatisfiability:
            enumerate_cnf(x.as<CnfPayload>(), run);
            break;
        case ProblemKind::VertexCover:
            enumerate_vertex_cover(x.as<GraphKPayload>(), run);
            break;
        case ProblemKind::IndependentSet:
            enumerate_packing(x.as<GraphKPayload>(), run, false);
            break;
        case ProblemKind::Clique:
            enumerate_packing(x.as<GraphKPayload>(), run, true);
            break;
        case ProblemKind::DominatingSet:
            enumerate_dominating_set(x.as<GraphKPayload>(), run);
            break;
        case ProblemKind::SetCover:
            enumerate_set_cover(x.as<SetSystemPayload>(), run);
            break;
        case ProblemKind::HittingSet:
            enumerate_hitting_set(x.as<SetSystemPayload>(), run);
            break;
        case ProblemKind::FeedbackVertexSet:
            enumerate_feedback_vertex_set(x.as<DigraphKPayload>(), run);
            break;
        case ProblemKind::FeedbackArcSet:
            enumerate_feedback_arc_set(x.as<DigraphKPayload>(), run);
            break;
        case ProblemKind::UncapacitatedFacilityLocation:
            enumerate_by_predicate(x, x.as<UflPayload>().facilities,
                                   [](Int j) { return facility_elem(j); }, run);
            break;
        case ProblemKind::PCenter:
        case ProblemKind::PMedian:
            enumerate_by_predicate(x, x.as<FacilityPayload>().facilities,
                                   [](Int j) { return facility_elem(j); }, run);
            break;
        case ProblemKind::SubsetSum: {
            const auto& p = x.as<SubsetSumPayload>();
            enumerate_numbers(p.values, p.target, p.target, 0,
                              [](Int i) { return num_elem(i); }, run);
            break;
        }
        case ProblemKind::Knapsack:
            enumerate_knapsack(x.as<KnapsackPayload>(), run);
            break;
        case ProblemKind::Partition: {
            const auto& p = x.as<PartitionPayload>();
            Int n = static_cast<Int>(p.values.size());
            if (n == 0) break;
            Int total = 0;
            for (Int v : p.values) total = checked_add(total, v);
            if (total % 2 != 0) break;
            enumerate_numbers(p.values, total / 2, total / 2, n,
                              [](Int i) { return num_elem(i); }, run);
            break;
        }
        case ProblemKind::TwoMachineScheduling: {
            const auto& p = x.as<SchedulingPayload>();
            Int n = static_cast<Int>(p.times.size());
            if (n == 0) break;
            Int total = 0;
            for (Int v : p.times) total = checked_add(total, v);
            Int lo = std::max(Int{0}, checked_sub(total, p.deadline));
            if (p.deadline < 0) break;
            enumerate_numbers(p.times, lo, p.deadline, n, [](Int i) { return job_elem(i); },
                              run);
            break;
        }
        case ProblemKind::DirectedHamiltonianPath:
            enumerate_dham_path(x.as<DhamPathPayload>(), run);
            break;
        case ProblemKind::DirectedHamiltonianCycle:
            enumerate_dham_cycle(x.as<DigraphPayload>(), run);
            break;
        case ProblemKind::UndirectedHamiltonianCycle: {
            const auto& p = x.as<GraphPayload>();
            enumerate_uham_cycle(p.n, p.edges, nullptr, 0, run);
            break;
        }
        case ProblemKind::TravelingSalesman: {
            const auto& p = x.as<TspPayload>();
            std::vector<std::pair<Int, Int>> edges;
            std::map<std::pair<Int, Int>, Int> weight;
            for (const auto& e : p.edges) {
                edges.push_back({e.a, e.b});
                weight[{e.a, e.b}] = e.w;
            }
            std::sort(edges.begin(), edges.end());
            enumerate_uham_cycle(p.n, edges, &weight, p.k, run);
            break;
        }
        case ProblemKind::DirectedTwoDisjointPath: {
            const auto& p = x.as<TwoDppPayload>();
            enumerate_disjoint_paths(p.n, p.arcs, {{p.s1, p.t1}, {p.s2, p.t2}}, run);
            break;
        }
        case ProblemKind::DirectedKDisjointPath: {
            const auto& p = x.as<KDppPayload>();
            enumerate_disjoint_paths(p.n, p.arcs, p.pairs, run);
            break;
        }
        case ProblemKind::SteinerTree:
            enumerate_steiner(x.as<SteinerPayload>(), run);
            break;
    }
    return SolutionFamily(std::move(run.out),
                          run.exceeded ? EnumerationStatus::BudgetExceeded
                                       : EnumerationStatus::Complete);
}

SolutionFamily enumerate_feasible(const SspInstance& x, Budget& budget) {
    if (!is_lop_kind(x.kind))
        throw NotAnLop(kind_id(x.kind) + " has no feasible-set structure");
    Universe u = universe_of(x);
    Run run(budget);
    const auto& elems = u.elements();
    Subset current;
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (!run.tick()) return;
        if (pos == elems.size()) {
            if (is_feasible(x, current)) run.out.push_back(current);
            return;
        }
        current.push_back(elems[pos]);
        rec(pos + 1);
        current.pop_back();
        if (run.exceeded) return;
        rec(pos + 1);
    };
    rec(0);
    return SolutionFamily(std::move(run.out),
                          run.exceeded ? EnumerationStatus::BudgetExceeded
                                       : EnumerationStatus::Complete);
}

}  // namespace ssp
