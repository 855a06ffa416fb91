#include "ssp/element.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ssp {

std::string to_string(const ElementId& e) {
    if (e.idx.empty()) return e.tag;
    std::string out = e.tag;
    out += '(';
    for (std::size_t i = 0; i < e.idx.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(e.idx[i]);
    }
    out += ')';
    return out;
}

ElementId parse_element(const std::string& text) {
    std::size_t open = text.find('(');
    if (open == std::string::npos) {
        if (text.empty()) throw ParseError("empty element id");
        for (char c : text)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw ParseError("bad element tag: " + text);
        return ElementId{text, {}};
    }
    if (open == 0 || text.back() != ')')
        throw ParseError("bad element id: " + text);
    ElementId e;
    e.tag = text.substr(0, open);
    for (char c : e.tag)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            throw ParseError("bad element tag: " + text);
    std::string body = text.substr(open + 1, text.size() - open - 2);
    if (body.empty()) throw ParseError("empty index list: " + text);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw ParseError("bad index list: " + text);
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad index in element id: " + text);
        }
        if (pos != tok.size()) throw ParseError("bad index in element id: " + text);
        e.idx.push_back(v);
    }
    return e;
}

Universe::Universe(std::vector<ElementId> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    auto dup = std::adjacent_find(elems_.begin(), elems_.end());
    if (dup != elems_.end())
        throw ValidationError("duplicate universe element: " + to_string(*dup));
}

bool Universe::contains(const ElementId& e) const {
    return std::binary_search(elems_.begin(), elems_.end(), e);
}

std::size_t Universe::index_of(const ElementId& e) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
    if (it == elems_.end() || *it != e)
        throw ForeignElement("element outside universe: " + to_string(e));
    return static_cast<std::size_t>(it - elems_.begin());
}

void canonicalize(Subset& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool is_subset_of(const Subset& s, const Universe& u) {
    for (const auto& e : s)
        if (!u.contains(e)) return false;
    return true;
}

bool intersects(const Subset& a, const Subset& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else
            return true;
    }
    return false;
}

std::string to_string(const Subset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += to_string(s[i]);
    }
    out += '}';
    return out;
}

}  // namespace ssp
