#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssp/element.hpp"

namespace ssp {

/// Result status of an exhaustive enumeration.
enum class EnumerationStatus { Complete, BudgetExceeded };

/// Canonical family of subsets: every member sorted, members sorted
/// lexicographically, no duplicates. A family whose enumeration ran out of
/// budget is marked and must never be treated as the full solution set.
class SolutionFamily {
  public:
    SolutionFamily() = default;
    SolutionFamily(std::vector<Subset> members, EnumerationStatus status);

    const std::vector<Subset>& members() const { return members_; }
    EnumerationStatus status() const { return status_; }
    bool complete() const { return status_ == EnumerationStatus::Complete; }
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }
    bool contains(const Subset& s) const;

    /// Byte-stable text form, one subset per line.
    std::string to_text() const;

    friend bool operator==(const SolutionFamily&, const SolutionFamily&) = default;

  private:
    std::vector<Subset> members_;
    EnumerationStatus status_ = EnumerationStatus::Complete;
};

/// Node budget for exhaustive routines. tick() accounts one search node and
/// reports false once the budget is spent (callers then mark the result).
class Budget {
  public:
    static constexpr long long kDefault = 1LL << 20;
    /// Refusal threshold for nested exhaustive games.
    static constexpr long long kNestingCap = 1LL << 22;

    explicit Budget(long long nodes = kDefault) : remaining_(nodes) {}

    bool tick() {
        if (remaining_ <= 0) {
            exhausted_ = true;
            return false;
        }
        --remaining_;
        return true;
    }
    bool exhausted() const { return exhausted_; }
    long long remaining() const { return remaining_; }

  private:
    long long remaining_;
    bool exhausted_ = false;
};

}  // namespace ssp
