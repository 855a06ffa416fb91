#include "ssp/variants.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "ssp/errors.hpp"

namespace ssp {

std::string family_id(VariantFamily family) {
    switch (family) {
        case VariantFamily::Interdiction:
            return "interdiction";
        case VariantFamily::RestrictedRegret:
            return "restricted-regret";
        case VariantFamily::TwoStage:
            return "two-stage";
    }
    throw Error("unknown variant family");
}

VariantFamily family_from_id(const std::string& id) {
    if (id == "interdiction") return VariantFamily::Interdiction;
    if (id == "restricted-regret") return VariantFamily::RestrictedRegret;
    if (id == "two-stage") return VariantFamily::TwoStage;
    throw FamilyMismatch("unknown variant family: " + id);
}

// --- validation -------------------------------------------------------------

namespace {

void check_total(const CostMap& cost, const Universe& u, const char* name,
                 std::vector<std::string>& out) {
    for (const auto& [e, v] : cost) {
        if (!u.contains(e))
            out.push_back(std::string(name) +
                          " assigns a value outside the universe: " + to_string(e));
        if (v >= kIntLimit || v < -kIntLimit)
            out.push_back(std::string(name) + " value out of range at " + to_string(e));
    }
    if (cost.size() != u.size())
        out.push_back(std::string(name) + " must assign a value to every universe element");
}

void check_interval(const CostMap& lower, const CostMap& upper, const char* name,
                    std::vector<std::string>& out) {
    for (const auto& [e, lo] : lower) {
        auto it = upper.find(e);
        if (it != upper.end() && lo > it->second)
            out.push_back(std::string(name) + " interval inverted at " + to_string(e));
    }
}

void check_binary(const CostMap& bounds, const char* name,
                  std::vector<std::string>& out) {
    for (const auto& [e, v] : bounds)
        if (v != 0 && v != 1)
            out.push_back(std::string(name) + " bound outside {0,1} at " + to_string(e));
}

void check_canonical_subset(const Subset& s, const Universe& u, const char* name,
                            std::vector<std::string>& out) {
    Subset copy = s;
    canonicalize(copy);
    if (copy != s)
        out.push_back(std::string(name) + " is not in canonical form");
    else if (!is_subset_of(s, u))
        out.push_back(std::string(name) + " leaves the universe");
}

void check_base(const SspInstance& base, std::vector<std::string>& out) {
    for (auto& d : validate(base)) out.push_back("base: " + d);
}

void check_lop_base(const SspInstance& base, std::vector<std::string>& out) {
    if (!is_lop_kind(base.kind))
        out.push_back("base kind " + kind_id(base.kind) + " has no cost structure");
}

void throw_if_invalid(const std::vector<std::string>& diags, const char* what) {
    if (diags.empty()) return;
    std::string msg = std::string("invalid ") + what + ":";
    for (const auto& d : diags) msg += " " + d + ";";
    throw ValidationError(msg);
}

}  // namespace

std::vector<std::string> validate(const InterdictionInstance& v) {
    std::vector<std::string> out;
    check_base(v.base, out);
    if (out.empty()) check_total(v.cost, universe_of(v.base), "cost", out);
    return out;
}

std::vector<std::string> validate(const CombInterdictionInstance& v) {
    std::vector<std::string> out;
    check_base(v.base, out);
    if (out.empty())
        check_canonical_subset(v.blockable, universe_of(v.base), "blockable set", out);
    return out;
}

std::vector<std::string> validate(const RegretInstance& v) {
    std::vector<std::string> out;
    check_base(v.base, out);
    check_lop_base(v.base, out);
    if (out.empty()) {
        Universe u = universe_of(v.base);
        check_total(v.lower, u, "lower bounds", out);
        check_total(v.upper, u, "upper bounds", out);
        check_interval(v.lower, v.upper, "cost", out);
    }
    return out;
}

std::vector<std::string> validate(const RestrictedRegretInstance& v) {
    std::vector<std::string> out;
    check_base(v.base, out);
    if (out.empty()) {
        Universe u = universe_of(v.base);
        check_total(v.lower, u, "lower bounds", out);
        check_total(v.upper, u, "upper bounds", out);
        check_binary(v.lower, "lower", out);
        check_binary(v.upper, "upper", out);
        check_interval(v.lower, v.upper, "bound", out);
    }
    return out;
}

std::vector<std::string> validate(const TwoStageInstance& v) {
    std::vector<std::string> out;
    check_base(v.base, out);
    check_lop_base(v.base, out);
    if (v.gamma < 0) out.push_back("gamma must be nonnegative");
    if (out.empty()) {
        Universe u = universe_of(v.base);
        check_total(v.first_cost, u, "first-stage costs", out);
        check_total(v.second_lower, u, "second-stage lower bounds", out);
        check_total(v.second_upper, u, "second-stage upper bounds", out);
    }
    return out;
}

std::vector<std::string> validate(const CombTwoStageInstance& v) {
    std::vector<std::string> out;
    check_base(v.base, out);
    if (v.gamma < 0) out.push_back("gamma must be nonnegative");
    if (out.empty()) {
        Universe u = universe_of(v.base);
        check_canonical_subset(v.first_stage, u, "first-stage set", out);
        check_canonical_subset(v.blockable, u, "blockable set", out);
        Subset overlap;
        std::set_intersection(v.first_stage.begin(), v.first_stage.end(),
                              v.blockable.begin(), v.blockable.end(),
                              std::back_inserter(overlap));
        if (!overlap.empty())
            out.push_back("blockable elements must be second-stage elements");
    }
    return out;
}

void require_valid(const InterdictionInstance& v) {
    throw_if_invalid(validate(v), "interdiction instance");
}
void require_valid(const CombInterdictionInstance& v) {
    throw_if_invalid(validate(v), "combinatorial interdiction instance");
}
void require_valid(const RegretInstance& v) {
    throw_if_invalid(validate(v), "regret instance");
}
void require_valid(const RestrictedRegretInstance& v) {
    throw_if_invalid(validate(v), "restricted regret instance");
}
void require_valid(const TwoStageInstance& v) {
    throw_if_invalid(validate(v), "two-stage instance");
}
void require_valid(const CombTwoStageInstance& v) {
    throw_if_invalid(validate(v), "combinatorial two-stage instance");
}

Int effective_gamma(const TwoStageInstance& v) {
    Int n = static_cast<Int>(universe_of(v.base).size());
    return std::min(v.gamma, n);
}

Int effective_gamma(const CombTwoStageInstance& v) {
    return std::min(v.gamma, static_cast<Int>(v.blockable.size()));
}

// --- regret arithmetic ------------------------------------------------------

CostMap canonical_scenario(const CostMap& lower, const CostMap& upper,
                           const Subset& s) {
    CostMap out;
    for (const auto& [e, lo] : lower) {
        bool in_s = std::binary_search(s.begin(), s.end(), e);
        out.emplace(e, in_s ? upper.at(e) : lo);
    }
    return out;
}

CostMap canonical_scenario(const RegretInstance& v, const Subset& s) {
    return canonical_scenario(v.lower, v.upper, s);
}

CostMap canonical_scenario(const RestrictedRegretInstance& v, const Subset& s) {
    return canonical_scenario(v.lower, v.upper, s);
}

Int cost_under(const CostMap& cost, const Subset& s) {
    Int total = 0;
    for (const auto& e : s) {
        auto it = cost.find(e);
        if (it == cost.end())
            throw ForeignElement("no cost assigned to " + to_string(e));
        total = checked_add(total, it->second);
    }
    return total;
}

Int max_regret(const CostMap& lower, const CostMap& upper, const Subset& s,
               const std::vector<Subset>& rivals) {
    if (rivals.empty())
        throw UndefinedRegret("regret is undefined against an empty family");
    CostMap scenario = canonical_scenario(lower, upper, s);
    Int mine = cost_under(scenario, s);
    Int best = cost_under(scenario, rivals.front());
    for (std::size_t i = 1; i < rivals.size(); ++i)
        best = std::min(best, cost_under(scenario, rivals[i]));
    return checked_sub(mine, best);
}

// --- subset-search views ----------------------------------------------------

namespace {

void require_within(const Subset& s, const Universe& u) {
    for (const auto& e : s)
        if (!u.contains(e))
            throw ForeignElement("element outside the universe: " + to_string(e));
}

std::vector<Subset> complete_members(const SspInstance& base, Budget& budget) {
    SolutionFamily fam = enumerate_solutions(base, budget);
    if (!fam.complete())
        throw BudgetExceeded("base enumeration exceeded the node budget");
    return fam.members();
}

class CombInterdictionView final : public SspView {
  public:
    CombInterdictionView(CombInterdictionInstance v, long long nodes)
        : v_(std::move(v)), contains_nodes_(nodes) {}

    Universe universe() const override { return universe_of(v_.base); }

    bool contains(const Subset& s) const override {
        require_within(s, universe());
        if (static_cast<Int>(s.size()) > v_.threshold) return false;
        if (!std::includes(v_.blockable.begin(), v_.blockable.end(), s.begin(),
                           s.end()))
            return false;
        Budget budget(contains_nodes_);
        for (const auto& sol : complete_members(v_.base, budget))
            if (!intersects(s, sol)) return false;
        return true;
    }

    SolutionFamily enumerate(Budget& budget) const override {
        SolutionFamily base_fam = enumerate_solutions(v_.base, budget);
        if (!base_fam.complete())
            return SolutionFamily({}, EnumerationStatus::BudgetExceeded);
        std::vector<Subset> out;
        if (v_.threshold >= 0) {
            Subset chosen;
            if (!walk(0, chosen, base_fam.members(), out, budget))
                return SolutionFamily(std::move(out),
                                      EnumerationStatus::BudgetExceeded);
        }
        return SolutionFamily(std::move(out), EnumerationStatus::Complete);
    }

  private:
    bool walk(std::size_t pos, Subset& chosen,
              const std::vector<Subset>& solutions, std::vector<Subset>& out,
              Budget& budget) const {
        if (!budget.tick()) return false;
        bool hits_all = true;
        for (const auto& sol : solutions) {
            if (!budget.tick()) return false;
            if (!intersects(chosen, sol)) {
                hits_all = false;
                break;
            }
        }
        if (hits_all) out.push_back(chosen);
        if (static_cast<Int>(chosen.size()) == v_.threshold) return true;
        for (std::size_t i = pos; i < v_.blockable.size(); ++i) {
            chosen.push_back(v_.blockable[i]);
            if (!walk(i + 1, chosen, solutions, out, budget)) return false;
            chosen.pop_back();
        }
        return true;
    }

    CombInterdictionInstance v_;
    long long contains_nodes_;
};

class RestrictedRegretView final : public SspView {
  public:
    RestrictedRegretView(RestrictedRegretInstance v, long long nodes)
        : v_(std::move(v)), contains_nodes_(nodes) {}

    Universe universe() const override { return universe_of(v_.base); }

    bool contains(const Subset& s) const override {
        require_within(s, universe());
        if (!is_solution(v_.base, s)) return false;
        Budget budget(contains_nodes_);
        auto members = complete_members(v_.base, budget);
        return max_regret(v_.lower, v_.upper, s, members) <= v_.quota;
    }

    SolutionFamily enumerate(Budget& budget) const override {
        SolutionFamily base_fam = enumerate_solutions(v_.base, budget);
        if (!base_fam.complete())
            return SolutionFamily({}, EnumerationStatus::BudgetExceeded);
        const auto& members = base_fam.members();
        std::vector<Subset> out;
        for (const auto& s : members) {
            CostMap scenario = canonical_scenario(v_.lower, v_.upper, s);
            Int mine = cost_under(scenario, s);
            Int best = mine;
            for (const auto& rival : members) {
                if (!budget.tick())
                    return SolutionFamily(std::move(out),
                                          EnumerationStatus::BudgetExceeded);
                best = std::min(best, cost_under(scenario, rival));
            }
            if (checked_sub(mine, best) <= v_.quota) out.push_back(s);
        }
        return SolutionFamily(std::move(out), EnumerationStatus::Complete);
    }

  private:
    RestrictedRegretInstance v_;
    long long contains_nodes_;
};

class CombTwoStageView final : public SspView {
  public:
    CombTwoStageView(CombTwoStageInstance v, long long nodes)
        : v_(std::move(v)), contains_nodes_(nodes) {}

    Universe universe() const override { return universe_of(v_.base); }

    bool contains(const Subset& s) const override {
        require_within(s, universe());
        if (!std::includes(v_.first_stage.begin(), v_.first_stage.end(),
                           s.begin(), s.end()))
            return false;
        Budget budget(contains_nodes_);
        auto groups = group_completions(complete_members(v_.base, budget));
        bool ok = false;
        if (!survives(s, groups, budget, ok))
            throw BudgetExceeded("membership test exceeded the node budget");
        return ok;
    }

    SolutionFamily enumerate(Budget& budget) const override {
        SolutionFamily base_fam = enumerate_solutions(v_.base, budget);
        if (!base_fam.complete())
            return SolutionFamily({}, EnumerationStatus::BudgetExceeded);
        auto groups = group_completions(base_fam.members());
        std::vector<Subset> out;
        Subset chosen;
        if (!walk(0, chosen, groups, out, budget))
            return SolutionFamily(std::move(out),
                                  EnumerationStatus::BudgetExceeded);
        return SolutionFamily(std::move(out), EnumerationStatus::Complete);
    }

  private:
    using Groups = std::map<Subset, std::vector<Subset>>;

    Groups group_completions(const std::vector<Subset>& members) const {
        Groups groups;
        for (const auto& s : members) {
            Subset part1, part2;
            for (const auto& e : s) {
                if (std::binary_search(v_.first_stage.begin(),
                                       v_.first_stage.end(), e))
                    part1.push_back(e);
                else
                    part2.push_back(e);
            }
            groups[std::move(part1)].push_back(std::move(part2));
        }
        return groups;
    }

    // Whether some completion of s1 avoids every admissible blocker; result in
    // ok, returns false when the budget dies.
    bool survives(const Subset& s1, const Groups& groups, Budget& budget,
                  bool& ok) const {
        ok = false;
        auto it = groups.find(s1);
        if (it == groups.end()) return true;
        Subset blocker;
        bool defeated = false;
        if (!blockers(0, blocker, it->second, budget, defeated)) return false;
        ok = !defeated;
        return true;
    }

    // DFS over blockable subsets of size at most gamma; sets defeated when one
    // admits no disjoint completion. Returns false when the budget dies.
    bool blockers(std::size_t pos, Subset& blocker,
                  const std::vector<Subset>& completions, Budget& budget,
                  bool& defeated) const {
        if (!budget.tick()) return false;
        bool some = false;
        for (const auto& s2 : completions) {
            if (!budget.tick()) return false;
            if (!intersects(blocker, s2)) {
                some = true;
                break;
            }
        }
        if (!some) {
            defeated = true;
            return true;
        }
        if (static_cast<Int>(blocker.size()) == effective_gamma(v_)) return true;
        for (std::size_t i = pos; i < v_.blockable.size() && !defeated; ++i) {
            blocker.push_back(v_.blockable[i]);
            if (!blockers(i + 1, blocker, completions, budget, defeated))
                return false;
            blocker.pop_back();
        }
        return true;
    }

    bool walk(std::size_t pos, Subset& chosen, const Groups& groups,
              std::vector<Subset>& out, Budget& budget) const {
        if (!budget.tick()) return false;
        bool ok = false;
        if (!survives(chosen, groups, budget, ok)) return false;
        if (ok) out.push_back(chosen);
        for (std::size_t i = pos; i < v_.first_stage.size(); ++i) {
            chosen.push_back(v_.first_stage[i]);
            if (!walk(i + 1, chosen, groups, out, budget)) return false;
            chosen.pop_back();
        }
        return true;
    }

    CombTwoStageInstance v_;
    long long contains_nodes_;
};

}  // namespace

std::unique_ptr<SspView> wrap_as_ssp(CombInterdictionInstance v,
                                     long long contains_nodes) {
    require_valid(v);
    return std::make_unique<CombInterdictionView>(std::move(v), contains_nodes);
}

std::unique_ptr<SspView> wrap_as_ssp(RestrictedRegretInstance v,
                                     long long contains_nodes) {
    require_valid(v);
    return std::make_unique<RestrictedRegretView>(std::move(v), contains_nodes);
}

std::unique_ptr<SspView> wrap_as_ssp(CombTwoStageInstance v,
                                     long long contains_nodes) {
    require_valid(v);
    return std::make_unique<CombTwoStageView>(std::move(v), contains_nodes);
}

}  // namespace ssp
