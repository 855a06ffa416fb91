#include "ssp/family.hpp"

#include <algorithm>

namespace ssp {

SolutionFamily::SolutionFamily(std::vector<Subset> members, EnumerationStatus status)
    : members_(std::move(members)), status_(status) {
    for (auto& m : members_) canonicalize(m);
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SolutionFamily::contains(const Subset& s) const {
    Subset key = s;
    canonicalize(key);
    return std::binary_search(members_.begin(), members_.end(), key);
}

std::string SolutionFamily::to_text() const {
    std::string out;
    for (const auto& m : members_) {
        out += to_string(m);
        out += '\n';
    }
    if (!complete()) out += "[budget exceeded]\n";
    return out;
}

}  // namespace ssp
