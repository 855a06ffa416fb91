#include "ssp/reduction.hpp"

#include <algorithm>
#include <set>

namespace ssp {

namespace {

struct PairKeyLess {
    bool operator()(const std::pair<ElementId, ElementId>& p, const ElementId& k) const {
        return p.first < k;
    }
    bool operator()(const ElementId& k, const std::pair<ElementId, ElementId>& p) const {
        return k < p.first;
    }
};

}  // namespace

void Embedding::add(ElementId from, ElementId to) {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), from, PairKeyLess{});
    if (it != pairs_.end() && it->first == from)
        throw ValidationError("embedding maps " + to_string(from) + " twice");
    for (const auto& [src, dst] : pairs_)
        if (dst == to)
            throw ValidationError("embedding not injective: " + to_string(src) + " and " +
                                  to_string(from) + " both map to " + to_string(to));
    pairs_.insert(it, {std::move(from), std::move(to)});
}

bool Embedding::maps(const ElementId& from) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), from, PairKeyLess{});
}

const ElementId& Embedding::map(const ElementId& from) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), from, PairKeyLess{});
    if (it == pairs_.end() || !(it->first == from))
        throw ForeignElement("embedding undefined on " + to_string(from));
    return it->second;
}

Subset Embedding::map_subset(const Subset& s) const {
    Subset out;
    out.reserve(s.size());
    for (const auto& e : s) out.push_back(map(e));
    canonicalize(out);
    return out;
}

Subset Embedding::restrict_to_image(const Subset& target) const {
    Subset img = image();
    Subset out;
    for (const auto& e : target)
        if (std::binary_search(img.begin(), img.end(), e)) out.push_back(e);
    canonicalize(out);
    return out;
}

Subset Embedding::pull_back(const Subset& target) const {
    Subset out;
    for (const auto& e : target) {
        bool found = false;
        for (const auto& [src, dst] : pairs_)
            if (dst == e) {
                out.push_back(src);
                found = true;
                break;
            }
        if (!found) throw ForeignElement("element outside embedding image: " + to_string(e));
    }
    canonicalize(out);
    return out;
}

Subset Embedding::domain() const {
    Subset out;
    out.reserve(pairs_.size());
    for (const auto& [src, dst] : pairs_) out.push_back(src);
    return out;
}

Subset Embedding::image() const {
    Subset out;
    out.reserve(pairs_.size());
    for (const auto& [src, dst] : pairs_) out.push_back(dst);
    canonicalize(out);
    return out;
}

SspReduction::SspReduction(std::string id, ProblemKind from, ProblemKind to, ApplyFn apply)
    : id_(std::move(id)), from_(from), to_(to), apply_(std::move(apply)) {}

ReductionOutput SspReduction::operator()(const SspInstance& x) const {
    if (x.kind != from_)
        throw KindMismatch("reduction " + id_ + " expects " + kind_id(from_) + ", got " +
                           kind_id(x.kind));
    require_valid(x);
    ReductionOutput out = apply_(x);
    if (out.instance.kind != to_)
        throw KindMismatch("reduction " + id_ + " produced " + kind_id(out.instance.kind) +
                           ", declared " + kind_id(to_));
    require_valid(out.instance);
    Universe src = universe_of(x);
    Universe dst = universe_of(out.instance);
    if (out.embedding.size() != src.size())
        throw ValidationError("reduction " + id_ + " embedding does not cover the universe");
    for (const auto& [from_elem, to_elem] : out.embedding.pairs()) {
        if (!src.contains(from_elem))
            throw ForeignElement("embedding key outside source universe: " +
                                 to_string(from_elem));
        if (!dst.contains(to_elem))
            throw ForeignElement("embedding value outside target universe: " +
                                 to_string(to_elem));
    }
    return out;
}

const SspReduction& reduction_by_id(const std::string& id) {
    for (const auto& r : catalog())
        if (r.id() == id) return r;
    throw Error("no catalog reduction named " + id);
}

const SspReduction* find_reduction(ProblemKind from, ProblemKind to) {
    for (const auto& r : catalog())
        if (r.from() == from && r.to() == to) return &r;
    return nullptr;
}

SspReduction compose(std::vector<SspReduction> steps, std::string id) {
    if (steps.empty()) throw Error("cannot compose an empty chain");
    for (std::size_t i = 0; i + 1 < steps.size(); ++i)
        if (steps[i].to() != steps[i + 1].from())
            throw KindMismatch("chain breaks between " + steps[i].id() + " and " +
                               steps[i + 1].id());
    if (id.empty()) {
        for (const auto& s : steps) {
            if (!id.empty()) id += "+";
            id += s.id();
        }
    }
    ProblemKind from = steps.front().from();
    ProblemKind to = steps.back().to();
    auto apply = [steps = std::move(steps)](const SspInstance& x) {
        ReductionOutput acc = steps.front()(x);
        for (std::size_t i = 1; i < steps.size(); ++i) {
            ReductionOutput next = steps[i](acc.instance);
            Embedding chained;
            for (const auto& [src, mid] : acc.embedding.pairs())
                chained.add(src, next.embedding.map(mid));
            acc.instance = std::move(next.instance);
            acc.embedding = std::move(chained);
        }
        return acc;
    };
    return SspReduction(std::move(id), from, to, std::move(apply));
}

std::string VerificationReport::summary() const {
    std::string s;
    s += "left: " + std::to_string(left_count) + " solutions (" +
         (yes_left ? "yes" : "no") + ")\n";
    s += "right: " + std::to_string(right_count) + " solutions (" +
         (yes_right ? "yes" : "no") + ")\n";
    if (!conclusive) {
        s += "verdict: inconclusive (budget exceeded)\n";
        return s;
    }
    s += std::string("equal: ") + (equal ? "true" : "false") + "\n";
    s += std::string("yes-agreement: ") + (yes_left == yes_right ? "true" : "false") + "\n";
    for (const auto& w : only_left) s += "unmatched mapped solution: " + to_string(w) + "\n";
    for (const auto& w : only_right) s += "unmatched restriction: " + to_string(w) + "\n";
    return s;
}

VerificationReport verify_embedding(const SspView& left, const SspView& right,
                                    const Embedding& f, Budget& budget) {
    VerificationReport rep;
    SolutionFamily ls = left.enumerate(budget);
    SolutionFamily rs = right.enumerate(budget);
    rep.yes_left = !ls.empty();
    rep.yes_right = !rs.empty();
    rep.left_count = ls.size();
    rep.right_count = rs.size();
    rep.conclusive = ls.complete() && rs.complete();
    if (!rep.conclusive) return rep;

    std::set<Subset> mapped;
    for (const auto& s : ls.members()) mapped.insert(f.map_subset(s));
    std::set<Subset> restricted;
    for (const auto& s : rs.members()) restricted.insert(f.restrict_to_image(s));

    rep.equal = mapped == restricted;
    if (!rep.equal) {
        constexpr std::size_t kWitnessCap = 3;
        for (const auto& s : mapped) {
            if (rep.only_left.size() >= kWitnessCap) break;
            if (!restricted.count(s)) rep.only_left.push_back(s);
        }
        for (const auto& s : restricted) {
            if (rep.only_right.size() >= kWitnessCap) break;
            if (!mapped.count(s)) rep.only_right.push_back(s);
        }
    }
    return rep;
}

VerificationReport verify_ssp(const SspReduction& r, const SspInstance& x, Budget& budget) {
    ReductionOutput out = r(x);
    InstanceView left(x);
    InstanceView right(out.instance);
    return verify_embedding(left, right, out.embedding, budget);
}

}  // namespace ssp
