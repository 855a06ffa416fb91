#include "ssp/io.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

#include "ssp/errors.hpp"
#include "ssp/ints.hpp"

namespace ssp {

namespace {

// --- tokenizing -------------------------------------------------------------

struct Token {
    std::string text;
    int line = 0;
    int col = 0;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
        } else if (c == ' ' || c == '\t' || c == '\r') {
            ++col;
            ++i;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else {
            Token t{{}, line, col};
            while (i < text.size() && text[i] != ' ' && text[i] != '\t' &&
                   text[i] != '\r' && text[i] != '\n' && text[i] != '#') {
                t.text += text[i];
                ++i;
                ++col;
            }
            out.push_back(std::move(t));
        }
    }
    return out;
}

class Cursor {
  public:
    explicit Cursor(const std::string& text) : toks_(tokenize(text)) {}

    bool at_end() const { return pos_ >= toks_.size(); }

    const Token& peek() const {
        if (at_end()) throw ParseError("unexpected end of input", last_line(), last_col());
        return toks_[pos_];
    }

    Token next() {
        Token t = peek();
        ++pos_;
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        if (at_end()) throw ParseError(msg, last_line(), last_col());
        throw ParseError(msg, toks_[pos_].line, toks_[pos_].col);
    }

    void expect(const std::string& keyword) {
        Token t = next();
        if (t.text != keyword)
            throw ParseError("expected '" + keyword + "', got '" + t.text + "'", t.line, t.col);
    }

    Int take_int(const char* what) {
        Token t = next();
        Int v = 0;
        auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{} || end != t.text.data() + t.text.size())
            throw ParseError(std::string("bad ") + what + ": '" + t.text + "'", t.line, t.col);
        if (v >= kIntLimit || v < -kIntLimit)
            throw ParseError(std::string(what) + " out of range: '" + t.text + "'", t.line, t.col);
        return v;
    }

    Int take_count(const char* what) {
        Token t = peek();
        Int v = take_int(what);
        if (v < 0) throw ParseError(std::string("negative ") + what, t.line, t.col);
        return v;
    }

    ElementId take_element() {
        Token t = next();
        try {
            return parse_element(t.text);
        } catch (const ParseError&) {
            throw ParseError("bad element id: '" + t.text + "'", t.line, t.col);
        }
    }

    void finish() const {
        if (!at_end()) fail("trailing garbage: '" + toks_[pos_].text + "'");
    }

  private:
    int last_line() const { return toks_.empty() ? 1 : toks_.back().line; }
    int last_col() const {
        return toks_.empty() ? 1
                             : toks_.back().col + static_cast<int>(toks_.back().text.size());
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// --- body parsers -----------------------------------------------------------

std::vector<std::vector<Int>> read_clauses(Cursor& c, Int count) {
    std::vector<std::vector<Int>> clauses;
    clauses.reserve(static_cast<std::size_t>(count));
    for (Int j = 0; j < count; ++j) {
        std::vector<Int> clause;
        for (;;) {
            Int lit = c.take_int("literal");
            if (lit == 0) break;
            clause.push_back(lit);
        }
        clauses.push_back(std::move(clause));
    }
    return clauses;
}

std::vector<std::pair<Int, Int>> read_pairs(Cursor& c, Int count, const char* what) {
    std::vector<std::pair<Int, Int>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (Int i = 0; i < count; ++i) {
        Int a = c.take_int(what);
        Int b = c.take_int(what);
        out.emplace_back(a, b);
    }
    return out;
}

std::vector<Int> read_values(Cursor& c, Int count, const char* what) {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(count));
    for (Int i = 0; i < count; ++i) out.push_back(c.take_int(what));
    return out;
}

std::vector<WeightedEdge> read_weighted_edges(Cursor& c, Int count) {
    std::vector<WeightedEdge> out;
    out.reserve(static_cast<std::size_t>(count));
    for (Int i = 0; i < count; ++i) {
        Int a = c.take_int("edge endpoint");
        Int b = c.take_int("edge endpoint");
        Int w = c.take_int("edge weight");
        if (a > b) std::swap(a, b);
        out.push_back({a, b, w});
    }
    std::sort(out.begin(), out.end(), [](const WeightedEdge& x, const WeightedEdge& y) {
        return std::tie(x.a, x.b, x.w) < std::tie(y.a, y.b, y.w);
    });
    return out;
}

Payload parse_body(Cursor& c, ProblemKind kind) {
    switch (kind) {
        case ProblemKind::Satisfiability:
        case ProblemKind::ThreeSatisfiability: {
            c.expect("p");
            c.expect("cnf");
            Int vars = c.take_int("variable count");
            Int count = c.take_count("clause count");
            return make_cnf(vars, read_clauses(c, count));
        }
        case ProblemKind::VertexCover:
        case ProblemKind::IndependentSet:
        case ProblemKind::Clique:
        case ProblemKind::DominatingSet: {
            GraphKPayload p;
            c.expect("vertices");
            p.n = c.take_int("vertex count");
            c.expect("k");
            p.k = c.take_int("k");
            c.expect("edges");
            Int m = c.take_count("edge count");
            p.edges = normalize_edges(read_pairs(c, m, "edge endpoint"));
            return p;
        }
        case ProblemKind::FeedbackVertexSet:
        case ProblemKind::FeedbackArcSet: {
            DigraphKPayload p;
            c.expect("vertices");
            p.n = c.take_int("vertex count");
            c.expect("k");
            p.k = c.take_int("k");
            c.expect("arcs");
            Int m = c.take_count("arc count");
            p.arcs = normalize_arcs(read_pairs(c, m, "arc endpoint"));
            return p;
        }
        case ProblemKind::SetCover:
        case ProblemKind::HittingSet: {
            SetSystemPayload p;
            c.expect("ground");
            p.ground = c.take_int("ground size");
            c.expect("k");
            p.k = c.take_int("k");
            c.expect("sets");
            Int m = c.take_count("set count");
            for (Int i = 0; i < m; ++i) {
                Int size = c.take_count("set size");
                auto members = read_values(c, size, "set member");
                std::sort(members.begin(), members.end());
                members.erase(std::unique(members.begin(), members.end()), members.end());
                p.sets.push_back(std::move(members));
            }
            return p;
        }
        case ProblemKind::UncapacitatedFacilityLocation: {
            UflPayload p;
            c.expect("clients");
            p.clients = c.take_count("client count");
            c.expect("facilities");
            p.facilities = c.take_count("facility count");
            c.expect("k");
            p.k = c.take_int("k");
            c.expect("open");
            p.open_cost = read_values(c, p.facilities, "opening cost");
            c.expect("service");
            for (Int i = 0; i < p.clients; ++i)
                p.service.push_back(read_values(c, p.facilities, "service cost"));
            return p;
        }
        case ProblemKind::PCenter:
        case ProblemKind::PMedian: {
            FacilityPayload p;
            c.expect("clients");
            p.clients = c.take_count("client count");
            c.expect("facilities");
            p.facilities = c.take_count("facility count");
            c.expect("p");
            p.p = c.take_int("p");
            c.expect("k");
            p.k = c.take_int("k");
            c.expect("service");
            for (Int i = 0; i < p.clients; ++i)
                p.service.push_back(read_values(c, p.facilities, "service cost"));
            return p;
        }
        case ProblemKind::SubsetSum: {
            SubsetSumPayload p;
            c.expect("numbers");
            Int m = c.take_count("number count");
            p.values = read_values(c, m, "number");
            c.expect("target");
            p.target = c.take_int("target");
            return p;
        }
        case ProblemKind::Knapsack: {
            KnapsackPayload p;
            c.expect("items");
            Int m = c.take_count("item count");
            p.items = read_pairs(c, m, "item value");
            c.expect("min_profit");
            p.min_profit = c.take_int("min profit");
            c.expect("max_weight");
            p.max_weight = c.take_int("max weight");
            return p;
        }
        case ProblemKind::Partition: {
            PartitionPayload p;
            c.expect("numbers");
            Int m = c.take_count("number count");
            p.values = read_values(c, m, "number");
            return p;
        }
        case ProblemKind::TwoMachineScheduling: {
            SchedulingPayload p;
            c.expect("jobs");
            Int m = c.take_count("job count");
            p.times = read_values(c, m, "processing time");
            c.expect("deadline");
            p.deadline = c.take_int("deadline");
            return p;
        }
        case ProblemKind::DirectedHamiltonianPath: {
            DhamPathPayload p;
            c.expect("vertices");
            p.n = c.take_int("vertex count");
            c.expect("s");
            p.s = c.take_int("start vertex");
            c.expect("t");
            p.t = c.take_int("end vertex");
            c.expect("arcs");
            Int m = c.take_count("arc count");
            p.arcs = normalize_arcs(read_pairs(c, m, "arc endpoint"));
            return p;
        }
        case ProblemKind::DirectedHamiltonianCycle: {
            DigraphPayload p;
            c.expect("vertices");
            p.n = c.take_int("vertex count");
            c.expect("arcs");
            Int m = c.take_count("arc count");
            p.arcs = normalize_arcs(read_pairs(c, m, "arc endpoint"));
            return p;
        }
        case ProblemKind::UndirectedHamiltonianCycle: {
            GraphPayload p;
            c.expect("vertices");
            p.n = c.take_int("vertex count");
            c.expect("edges");
            Int m = c.take_count("edge count");
            p.edges = normalize_edges(read_pairs(c, m, "edge endpoint"));
            return p;
        }
        case ProblemKind::TravelingSalesman: {
            TspPayload p;
            c.expect("vertices");
            p.n = c.take_int("vertex count");
            c.expect("k");
            p.k = c.take_int("k");
            c.expect("edges");
            Int m = c.take_count("edge count");
            p.edges = read_weighted_edges(c, m);
            return p;
        }
        case ProblemKind::DirectedTwoDisjointPath: {
            TwoDppPayload p;
            c.expect("vertices");
            p.n = c.take_int("vertex count");
            c.expect("pair");
            p.s1 = c.take_int("terminal");
            p.t1 = c.take_int("terminal");
            c.expect("pair");
            p.s2 = c.take_int("terminal");
            p.t2 = c.take_int("terminal");
            c.expect("arcs");
            Int m = c.take_count("arc count");
            p.arcs = normalize_arcs(read_pairs(c, m, "arc endpoint"));
            return p;
        }
        case ProblemKind::DirectedKDisjointPath: {
            KDppPayload p;
            c.expect("vertices");
            p.n = c.take_int("vertex count");
            c.expect("pairs");
            Int m = c.take_count("pair count");
            p.pairs = read_pairs(c, m, "terminal");
            c.expect("arcs");
            Int m2 = c.take_count("arc count");
            p.arcs = normalize_arcs(read_pairs(c, m2, "arc endpoint"));
            return p;
        }
        case ProblemKind::SteinerTree: {
            SteinerPayload p;
            c.expect("vertices");
            p.n = c.take_int("vertex count");
            c.expect("k");
            p.k = c.take_int("k");
            c.expect("terminals");
            Int m = c.take_count("terminal count");
            p.terminals = read_values(c, m, "terminal");
            std::sort(p.terminals.begin(), p.terminals.end());
            p.terminals.erase(std::unique(p.terminals.begin(), p.terminals.end()),
                              p.terminals.end());
            c.expect("edges");
            Int m2 = c.take_count("edge count");
            p.edges = read_weighted_edges(c, m2);
            return p;
        }
    }
    c.fail("unhandled problem kind");
}

// --- variant sections -------------------------------------------------------

Subset read_subset(Cursor& c, const char* what) {
    Int m = c.take_count(what);
    Subset out;
    out.reserve(static_cast<std::size_t>(m));
    for (Int i = 0; i < m; ++i) out.push_back(c.take_element());
    canonicalize(out);
    return out;
}

void put_cost(CostMap& map, const ElementId& e, Int v, Cursor& c) {
    if (!map.emplace(e, v).second)
        c.fail("duplicate entry for element " + to_string(e));
}

FileContent parse_variant(Cursor& c, SspInstance base) {
    Token fam = c.next();
    if (fam.text == "interdiction") {
        InterdictionInstance v;
        v.base = std::move(base);
        c.expect("threshold");
        v.threshold = c.take_int("threshold");
        c.expect("costs");
        Int m = c.take_count("cost count");
        for (Int i = 0; i < m; ++i) {
            ElementId e = c.take_element();
            Int cost = c.take_int("cost");
            put_cost(v.cost, e, cost, c);
        }
        return v;
    }
    if (fam.text == "comb-interdiction") {
        CombInterdictionInstance v;
        v.base = std::move(base);
        c.expect("threshold");
        v.threshold = c.take_int("threshold");
        c.expect("blockable");
        v.blockable = read_subset(c, "blockable count");
        return v;
    }
    if (fam.text == "regret" || fam.text == "restricted-regret") {
        CostMap lower, upper;
        c.expect(fam.text == "regret" ? "threshold" : "quota");
        Int bound = c.take_int(fam.text == "regret" ? "threshold" : "quota");
        c.expect("bounds");
        Int m = c.take_count("bound count");
        for (Int i = 0; i < m; ++i) {
            ElementId e = c.take_element();
            Int lo = c.take_int("lower bound");
            Int hi = c.take_int("upper bound");
            put_cost(lower, e, lo, c);
            upper.emplace(e, hi);
        }
        if (fam.text == "regret") {
            RegretInstance v;
            v.base = std::move(base);
            v.lower = std::move(lower);
            v.upper = std::move(upper);
            v.threshold = bound;
            return v;
        }
        RestrictedRegretInstance v;
        v.base = std::move(base);
        v.lower = std::move(lower);
        v.upper = std::move(upper);
        v.quota = bound;
        return v;
    }
    if (fam.text == "two-stage") {
        TwoStageInstance v;
        v.base = std::move(base);
        c.expect("threshold");
        v.threshold = c.take_int("threshold");
        c.expect("gamma");
        v.gamma = c.take_int("gamma");
        c.expect("costs");
        Int m = c.take_count("cost count");
        for (Int i = 0; i < m; ++i) {
            ElementId e = c.take_element();
            Int first = c.take_int("first-stage cost");
            Int lo = c.take_int("second-stage lower bound");
            Int hi = c.take_int("second-stage upper bound");
            put_cost(v.first_cost, e, first, c);
            v.second_lower.emplace(e, lo);
            v.second_upper.emplace(e, hi);
        }
        return v;
    }
    if (fam.text == "comb-two-stage") {
        CombTwoStageInstance v;
        v.base = std::move(base);
        c.expect("gamma");
        v.gamma = c.take_int("gamma");
        c.expect("first");
        v.first_stage = read_subset(c, "first-stage count");
        c.expect("blockable");
        v.blockable = read_subset(c, "blockable count");
        return v;
    }
    throw ParseError("unknown variant family: '" + fam.text + "'", fam.line, fam.col);
}

// --- serializers ------------------------------------------------------------

void put_line(std::string& out, std::initializer_list<std::string> toks) {
    bool first = true;
    for (const auto& t : toks) {
        if (!first) out += ' ';
        out += t;
        first = false;
    }
    out += '\n';
}

std::string num(Int v) { return std::to_string(v); }

void put_values(std::string& out, const std::vector<Int>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += num(values[i]);
    }
    out += '\n';
}

void put_pair_lines(std::string& out, const std::vector<std::pair<Int, Int>>& pairs) {
    for (const auto& [a, b] : pairs) put_line(out, {num(a), num(b)});
}

void put_weighted_edges(std::string& out, const std::vector<WeightedEdge>& edges) {
    for (const auto& e : edges) put_line(out, {num(e.a), num(e.b), num(e.w)});
}

void serialize_body(std::string& out, const SspInstance& x) {
    switch (x.kind) {
        case ProblemKind::Satisfiability:
        case ProblemKind::ThreeSatisfiability: {
            const auto& p = x.as<CnfPayload>();
            put_line(out, {"p", "cnf", num(p.num_vars),
                           num(static_cast<Int>(p.clauses.size()))});
            for (const auto& cl : p.clauses) {
                for (Int lit : cl) {
                    out += num(lit);
                    out += ' ';
                }
                out += "0\n";
            }
            break;
        }
        case ProblemKind::VertexCover:
        case ProblemKind::IndependentSet:
        case ProblemKind::Clique:
        case ProblemKind::DominatingSet: {
            const auto& p = x.as<GraphKPayload>();
            put_line(out, {"vertices", num(p.n)});
            put_line(out, {"k", num(p.k)});
            put_line(out, {"edges", num(static_cast<Int>(p.edges.size()))});
            put_pair_lines(out, p.edges);
            break;
        }
        case ProblemKind::FeedbackVertexSet:
        case ProblemKind::FeedbackArcSet: {
            const auto& p = x.as<DigraphKPayload>();
            put_line(out, {"vertices", num(p.n)});
            put_line(out, {"k", num(p.k)});
            put_line(out, {"arcs", num(static_cast<Int>(p.arcs.size()))});
            put_pair_lines(out, p.arcs);
            break;
        }
        case ProblemKind::SetCover:
        case ProblemKind::HittingSet: {
            const auto& p = x.as<SetSystemPayload>();
            put_line(out, {"ground", num(p.ground)});
            put_line(out, {"k", num(p.k)});
            put_line(out, {"sets", num(static_cast<Int>(p.sets.size()))});
            for (const auto& s : p.sets) {
                out += num(static_cast<Int>(s.size()));
                for (Int e : s) {
                    out += ' ';
                    out += num(e);
                }
                out += '\n';
            }
            break;
        }
        case ProblemKind::UncapacitatedFacilityLocation: {
            const auto& p = x.as<UflPayload>();
            put_line(out, {"clients", num(p.clients)});
            put_line(out, {"facilities", num(p.facilities)});
            put_line(out, {"k", num(p.k)});
            out += "open";
            for (Int v : p.open_cost) {
                out += ' ';
                out += num(v);
            }
            out += "\nservice\n";
            for (const auto& row : p.service) put_values(out, row);
            break;
        }
        case ProblemKind::PCenter:
        case ProblemKind::PMedian: {
            const auto& p = x.as<FacilityPayload>();
            put_line(out, {"clients", num(p.clients)});
            put_line(out, {"facilities", num(p.facilities)});
            put_line(out, {"p", num(p.p)});
            put_line(out, {"k", num(p.k)});
            out += "service\n";
            for (const auto& row : p.service) put_values(out, row);
            break;
        }
        case ProblemKind::SubsetSum: {
            const auto& p = x.as<SubsetSumPayload>();
            put_line(out, {"numbers", num(static_cast<Int>(p.values.size()))});
            for (Int v : p.values) put_line(out, {num(v)});
            put_line(out, {"target", num(p.target)});
            break;
        }
        case ProblemKind::Knapsack: {
            const auto& p = x.as<KnapsackPayload>();
            put_line(out, {"items", num(static_cast<Int>(p.items.size()))});
            put_pair_lines(out, p.items);
            put_line(out, {"min_profit", num(p.min_profit)});
            put_line(out, {"max_weight", num(p.max_weight)});
            break;
        }
        case ProblemKind::Partition: {
            const auto& p = x.as<PartitionPayload>();
            put_line(out, {"numbers", num(static_cast<Int>(p.values.size()))});
            for (Int v : p.values) put_line(out, {num(v)});
            break;
        }
        case ProblemKind::TwoMachineScheduling: {
            const auto& p = x.as<SchedulingPayload>();
            put_line(out, {"jobs", num(static_cast<Int>(p.times.size()))});
            for (Int v : p.times) put_line(out, {num(v)});
            put_line(out, {"deadline", num(p.deadline)});
            break;
        }
        case ProblemKind::DirectedHamiltonianPath: {
            const auto& p = x.as<DhamPathPayload>();
            put_line(out, {"vertices", num(p.n)});
            put_line(out, {"s", num(p.s)});
            put_line(out, {"t", num(p.t)});
            put_line(out, {"arcs", num(static_cast<Int>(p.arcs.size()))});
            put_pair_lines(out, p.arcs);
            break;
        }
        case ProblemKind::DirectedHamiltonianCycle: {
            const auto& p = x.as<DigraphPayload>();
            put_line(out, {"vertices", num(p.n)});
            put_line(out, {"arcs", num(static_cast<Int>(p.arcs.size()))});
            put_pair_lines(out, p.arcs);
            break;
        }
        case ProblemKind::UndirectedHamiltonianCycle: {
            const auto& p = x.as<GraphPayload>();
            put_line(out, {"vertices", num(p.n)});
            put_line(out, {"edges", num(static_cast<Int>(p.edges.size()))});
            put_pair_lines(out, p.edges);
            break;
        }
        case ProblemKind::TravelingSalesman: {
            const auto& p = x.as<TspPayload>();
            put_line(out, {"vertices", num(p.n)});
            put_line(out, {"k", num(p.k)});
            put_line(out, {"edges", num(static_cast<Int>(p.edges.size()))});
            put_weighted_edges(out, p.edges);
            break;
        }
        case ProblemKind::DirectedTwoDisjointPath: {
            const auto& p = x.as<TwoDppPayload>();
            put_line(out, {"vertices", num(p.n)});
            put_line(out, {"pair", num(p.s1), num(p.t1)});
            put_line(out, {"pair", num(p.s2), num(p.t2)});
            put_line(out, {"arcs", num(static_cast<Int>(p.arcs.size()))});
            put_pair_lines(out, p.arcs);
            break;
        }
        case ProblemKind::DirectedKDisjointPath: {
            const auto& p = x.as<KDppPayload>();
            put_line(out, {"vertices", num(p.n)});
            put_line(out, {"pairs", num(static_cast<Int>(p.pairs.size()))});
            put_pair_lines(out, p.pairs);
            put_line(out, {"arcs", num(static_cast<Int>(p.arcs.size()))});
            put_pair_lines(out, p.arcs);
            break;
        }
        case ProblemKind::SteinerTree: {
            const auto& p = x.as<SteinerPayload>();
            put_line(out, {"vertices", num(p.n)});
            put_line(out, {"k", num(p.k)});
            put_line(out, {"terminals", num(static_cast<Int>(p.terminals.size()))});
            put_values(out, p.terminals);
            put_line(out, {"edges", num(static_cast<Int>(p.edges.size()))});
            put_weighted_edges(out, p.edges);
            break;
        }
    }
}

void put_subset_lines(std::string& out, const char* keyword, const Subset& s) {
    put_line(out, {keyword, num(static_cast<Int>(s.size()))});
    for (const auto& e : s) put_line(out, {to_string(e)});
}

struct VariantSerializer {
    std::string& out;

    void operator()(const SspInstance&) const {}
    void operator()(const InterdictionInstance& v) const {
        put_line(out, {"variant", "interdiction"});
        put_line(out, {"threshold", num(v.threshold)});
        put_line(out, {"costs", num(static_cast<Int>(v.cost.size()))});
        for (const auto& [e, cost] : v.cost) put_line(out, {to_string(e), num(cost)});
    }
    void operator()(const CombInterdictionInstance& v) const {
        put_line(out, {"variant", "comb-interdiction"});
        put_line(out, {"threshold", num(v.threshold)});
        put_subset_lines(out, "blockable", v.blockable);
    }
    void operator()(const RegretInstance& v) const {
        put_line(out, {"variant", "regret"});
        put_line(out, {"threshold", num(v.threshold)});
        put_bounds(v.lower, v.upper);
    }
    void operator()(const RestrictedRegretInstance& v) const {
        put_line(out, {"variant", "restricted-regret"});
        put_line(out, {"quota", num(v.quota)});
        put_bounds(v.lower, v.upper);
    }
    void operator()(const TwoStageInstance& v) const {
        put_line(out, {"variant", "two-stage"});
        put_line(out, {"threshold", num(v.threshold)});
        put_line(out, {"gamma", num(v.gamma)});
        put_line(out, {"costs", num(static_cast<Int>(v.first_cost.size()))});
        for (const auto& [e, first] : v.first_cost)
            put_line(out, {to_string(e), num(first), num(v.second_lower.at(e)),
                           num(v.second_upper.at(e))});
    }
    void operator()(const CombTwoStageInstance& v) const {
        put_line(out, {"variant", "comb-two-stage"});
        put_line(out, {"gamma", num(v.gamma)});
        put_subset_lines(out, "first", v.first_stage);
        put_subset_lines(out, "blockable", v.blockable);
    }

    void put_bounds(const CostMap& lower, const CostMap& upper) const {
        put_line(out, {"bounds", num(static_cast<Int>(lower.size()))});
        for (const auto& [e, lo] : lower)
            put_line(out, {to_string(e), num(lo), num(upper.at(e))});
    }
};

}  // namespace

// --- instance files ---------------------------------------------------------

FileContent parse_instance_file(const std::string& text) {
    Cursor c(text);
    c.expect("ssp");
    Token kind_tok = c.next();
    auto kind = kind_from_id(kind_tok.text);
    if (!kind)
        throw ParseError("unknown problem kind: '" + kind_tok.text + "'", kind_tok.line,
                         kind_tok.col);
    c.expect("v1");
    SspInstance x{*kind, parse_body(c, *kind)};
    if (c.at_end()) return x;
    c.expect("variant");
    FileContent content = parse_variant(c, std::move(x));
    c.finish();
    return content;
}

SspInstance parse_instance(const std::string& text) {
    FileContent content = parse_instance_file(text);
    if (auto* x = std::get_if<SspInstance>(&content)) return std::move(*x);
    throw ParseError("unexpected variant section in plain instance file");
}

const SspInstance& base_of(const FileContent& content) {
    return std::visit(
        [](const auto& v) -> const SspInstance& {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, SspInstance>)
                return v;
            else
                return v.base;
        },
        content);
}

std::string serialize_instance(const SspInstance& x) {
    std::string out;
    put_line(out, {"ssp", kind_id(x.kind), "v1"});
    serialize_body(out, x);
    return out;
}

std::string serialize_instance_file(const FileContent& content) {
    std::string out = serialize_instance(base_of(content));
    std::visit(VariantSerializer{out}, content);
    return out;
}

// --- quantified formulas ----------------------------------------------------

namespace {

Int read_block(Cursor& c, const char* quantifier, Int next_var) {
    c.expect(quantifier);
    Int count = 0;
    for (;;) {
        Int v = c.take_int("prefix variable");
        if (v == 0) break;
        if (v != next_var + count)
            c.fail("prefix variables must be contiguous ascending; expected " +
                   std::to_string(next_var + count));
        ++count;
    }
    return count;
}

void put_block(std::string& out, char quantifier, Int from, Int count) {
    out += quantifier;
    for (Int v = from; v < from + count; ++v) {
        out += ' ';
        out += std::to_string(v);
    }
    out += " 0\n";
}

}  // namespace

QuantifiedFormula parse_qbf(const std::string& text) {
    Cursor c(text);
    c.expect("qbf");
    Token shape_tok = c.next();
    QbfShape shape;
    if (shape_tok.text == "dnf")
        shape = QbfShape::ExistsForallDnf;
    else if (shape_tok.text == "cnf")
        shape = QbfShape::ExistsForallExistsCnf;
    else
        throw ParseError("unknown matrix form: '" + shape_tok.text + "'", shape_tok.line,
                         shape_tok.col);
    c.expect("v1");
    c.expect("p");
    c.expect(shape_tok.text);
    Int vars = c.take_count("variable count");
    Int rows = c.take_count("row count");
    Int nx = read_block(c, "e", 1);
    Int ny = read_block(c, "a", nx + 1);
    Int nz = 0;
    if (shape == QbfShape::ExistsForallExistsCnf) nz = read_block(c, "e", nx + ny + 1);
    if (nx + ny + nz != vars)
        c.fail("prefix covers " + std::to_string(nx + ny + nz) + " variables, header says " +
               std::to_string(vars));
    QuantifiedFormula f = make_qbf(shape, nx, ny, nz, read_clauses(c, rows));
    c.finish();
    return f;
}

std::string serialize_qbf(const QuantifiedFormula& f) {
    std::string out;
    const char* form = f.shape == QbfShape::ExistsForallDnf ? "dnf" : "cnf";
    put_line(out, {"qbf", form, "v1"});
    put_line(out, {"p", form, num(f.num_vars()), num(static_cast<Int>(f.rows.size()))});
    put_block(out, 'e', 1, f.num_x);
    put_block(out, 'a', f.num_x + 1, f.num_y);
    if (f.shape == QbfShape::ExistsForallExistsCnf)
        put_block(out, 'e', f.num_x + f.num_y + 1, f.num_z);
    for (const auto& row : f.rows) {
        for (Int lit : row) {
            out += num(lit);
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

// --- embedding maps ---------------------------------------------------------

Embedding parse_embedding(const std::string& text) {
    Cursor c(text);
    c.expect("embedding");
    c.expect("v1");
    c.expect("map");
    Int m = c.take_count("pair count");
    Embedding f;
    for (Int i = 0; i < m; ++i) {
        ElementId from = c.take_element();
        ElementId to = c.take_element();
        try {
            f.add(std::move(from), std::move(to));
        } catch (const ValidationError& e) {
            c.fail(e.what());
        }
    }
    c.finish();
    return f;
}

std::string serialize_embedding(const Embedding& f) {
    std::string out;
    put_line(out, {"embedding", "v1"});
    put_line(out, {"map", num(static_cast<Int>(f.size()))});
    for (const auto& [from, to] : f.pairs()) put_line(out, {to_string(from), to_string(to)});
    return out;
}

// --- reports ----------------------------------------------------------------

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest(std::string_view bytes) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a(bytes);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

void Report::add(std::string key, std::string value) {
    if (key.empty() || key.find(':') != std::string::npos ||
        key.find('\n') != std::string::npos)
        throw Error("bad report key: '" + key + "'");
    if (value.find('\n') != std::string::npos)
        throw Error("report value for '" + key + "' contains a newline");
    fields_.emplace_back(std::move(key), std::move(value));
}

void Report::add(std::string key, Int value) { add(std::move(key), std::to_string(value)); }

void Report::add(std::string key, bool value) {
    add(std::move(key), std::string(value ? "true" : "false"));
}

void Report::add(const GameValue& g) {
    add("decision", g.yes);
    add("value", g.value ? std::to_string(*g.value) : "none");
    add("witness", g.witness ? to_string(*g.witness) : "none");
}

std::string Report::to_text() const {
    std::string out = "report-v1\n";
    for (const auto& [key, value] : fields_) {
        out += key;
        out += ": ";
        out += value;
        out += '\n';
    }
    std::string h = digest(out);
    out += "digest: ";
    out += h;
    out += '\n';
    return out;
}

}  // namespace ssp
