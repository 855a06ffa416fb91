#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ssp/errors.hpp"
#include "ssp/ints.hpp"

namespace ssp {

/// Identity of one universe element: a namespace tag plus an integer index
/// tuple. Total order is (tag, indices) lexicographic; equality coincides
/// with byte equality of the canonical serialization.
struct ElementId {
    std::string tag;
    std::vector<Int> idx;

    friend auto operator<=>(const ElementId&, const ElementId&) = default;
};

/// Canonical text form: `tag` for an empty index tuple, else `tag(i1,i2)`.
std::string to_string(const ElementId& e);

/// Inverse of to_string. Throws ParseError on malformed text.
ElementId parse_element(const std::string& text);

inline ElementId elem(std::string tag, std::vector<Int> idx = {}) {
    return ElementId{std::move(tag), std::move(idx)};
}

/// Literal of variable v (1-based); sign 0 = positive, 1 = negated.
inline ElementId lit_elem(Int v, bool negated) {
    return ElementId{"lit", {v, negated ? 1 : 0}};
}
/// Literal from a signed DIMACS-style code (+v / -v).
inline ElementId lit_elem(Int code) { return lit_elem(code < 0 ? -code : code, code < 0); }

inline ElementId vertex_elem(Int v) { return ElementId{"v", {v}}; }
inline ElementId arc_elem(Int a, Int b) { return ElementId{"arc", {a, b}}; }
inline ElementId edge_elem(Int a, Int b) {
    return ElementId{"edge", {a < b ? a : b, a < b ? b : a}};
}
inline ElementId num_elem(Int i) { return ElementId{"num", {i}}; }
inline ElementId item_elem(Int i) { return ElementId{"item", {i}}; }
inline ElementId job_elem(Int i) { return ElementId{"job", {i}}; }
inline ElementId set_elem(Int i) { return ElementId{"set", {i}}; }
inline ElementId ground_elem(Int i) { return ElementId{"elem", {i}}; }
inline ElementId facility_elem(Int i) { return ElementId{"fac", {i}}; }

/// Ordered set of distinct elements. Construction sorts and rejects
/// duplicates, so iteration order is the canonical element order.
class Universe {
  public:
    Universe() = default;
    explicit Universe(std::vector<ElementId> elems);

    const std::vector<ElementId>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool contains(const ElementId& e) const;
    /// Position in canonical order; throws ForeignElement when absent.
    std::size_t index_of(const ElementId& e) const;

    friend bool operator==(const Universe&, const Universe&) = default;

  private:
    std::vector<ElementId> elems_;
};

/// Subset of a universe in canonical form: sorted, duplicate-free.
using Subset = std::vector<ElementId>;

/// Sorts and dedupes in place.
void canonicalize(Subset& s);

bool is_subset_of(const Subset& s, const Universe& u);

/// Whether two canonical subsets share an element.
bool intersects(const Subset& a, const Subset& b);

std::string to_string(const Subset& s);

}  // namespace ssp
