#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "ssp/acceptance.hpp"
#include "ssp/errors.hpp"
#include "ssp/gadgets.hpp"
#include "ssp/generators.hpp"
#include "ssp/instance.hpp"
#include "ssp/io.hpp"
#include "ssp/lift.hpp"
#include "ssp/qbf.hpp"
#include "ssp/reduction.hpp"
#include "ssp/solvers.hpp"
#include "ssp/variants.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;
constexpr int kKindMismatch = 3;
constexpr int kOverflow = 4;
constexpr int kBudgetExhausted = 5;
constexpr int kUndefinedRegret = 6;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ssp::ParseError("cannot open " + path, 0, 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw ssp::ParseError("cannot write " + path, 0, 0);
}

// Serialized payload goes to --out when given, otherwise to stdout; the
// report is printed only when the payload went to a file.
void emit(const std::string& out_path, const std::string& payload, ssp::Report report) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    write_file(out_path, payload);
    std::cout << report.to_text();
}

std::vector<std::string> split_ids(const std::string& text) {
    std::vector<std::string> ids;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) ids.push_back(item);
    return ids;
}

ssp::VariantFamily family_from_name(const std::string& name) {
    if (name == "interdiction") return ssp::VariantFamily::Interdiction;
    if (name == "regret") return ssp::VariantFamily::RestrictedRegret;
    if (name == "two-stage") return ssp::VariantFamily::TwoStage;
    throw ssp::Error("unknown family " + name);
}

ssp::SspInstance plain_instance(const ssp::FileContent& content) {
    if (const auto* x = std::get_if<ssp::SspInstance>(&content)) return *x;
    throw ssp::KindMismatch("input carries a variant section; expected a plain instance");
}

struct ReduceArgs {
    std::string via, from, to, in, out, embedding_out;
};

int run_reduce(const ReduceArgs& a) {
    ssp::SspReduction step = [&] {
        if (!a.via.empty()) {
            std::vector<ssp::SspReduction> steps;
            for (const std::string& id : split_ids(a.via))
                steps.push_back(ssp::reduction_by_id(id));
            if (steps.empty()) throw ssp::Error("--via names no reductions");
            return ssp::compose(std::move(steps));
        }
        if (a.from.empty() || a.to.empty())
            throw ssp::Error("pass --via, or both --from and --to");
        auto from_kind = ssp::kind_from_id(a.from);
        auto to_kind = ssp::kind_from_id(a.to);
        if (!from_kind) throw ssp::Error("unknown problem kind " + a.from);
        if (!to_kind) throw ssp::Error("unknown problem kind " + a.to);
        const ssp::SspReduction* found = ssp::find_reduction(*from_kind, *to_kind);
        if (!found) throw ssp::Error("no catalog reduction from " + a.from + " to " + a.to);
        return *found;
    }();

    std::string text = read_file(a.in);
    ssp::SspInstance x = plain_instance(ssp::parse_instance_file(text));
    ssp::ReductionOutput out = step(x);
    if (!a.embedding_out.empty())
        write_file(a.embedding_out, ssp::serialize_embedding(out.embedding));

    ssp::Report report;
    report.add("command", std::string("reduce"));
    report.add("reduction", step.id());
    report.add("source-kind", ssp::kind_id(x.kind));
    report.add("target-kind", ssp::kind_id(out.instance.kind));
    report.add("source-universe", static_cast<ssp::Int>(ssp::universe_of(x).size()));
    report.add("target-universe",
               static_cast<ssp::Int>(ssp::universe_of(out.instance).size()));
    report.add("mapped-elements", static_cast<ssp::Int>(out.embedding.size()));
    report.add("input-digest", ssp::digest(text));
    emit(a.out, ssp::serialize_instance_file(ssp::FileContent{std::move(out.instance)}),
         std::move(report));
    return kOk;
}

struct VerifyArgs {
    std::string reduction, in;
    long long budget = ssp::Budget::kDefault;
};

int run_verify(const VerifyArgs& a) {
    const ssp::SspReduction& step = ssp::reduction_by_id(a.reduction);
    std::string text = read_file(a.in);
    ssp::SspInstance x = plain_instance(ssp::parse_instance_file(text));
    ssp::Budget budget(a.budget);
    ssp::VerificationReport rep = ssp::verify_ssp(step, x, budget);

    ssp::Report report;
    report.add("command", std::string("verify"));
    report.add("reduction", step.id());
    report.add("input-digest", ssp::digest(text));
    report.add("yes-left", rep.yes_left);
    report.add("yes-right", rep.yes_right);
    report.add("equal", rep.equal);
    report.add("conclusive", rep.conclusive);
    report.add("left-count", static_cast<ssp::Int>(rep.left_count));
    report.add("right-count", static_cast<ssp::Int>(rep.right_count));
    if (!rep.only_left.empty())
        report.add("only-left", ssp::to_string(rep.only_left.front()));
    if (!rep.only_right.empty())
        report.add("only-right", ssp::to_string(rep.only_right.front()));
    report.add("verdict", std::string(rep.ok() ? "solution-preserving"
                                               : (rep.conclusive ? "mismatch" : "inconclusive")));
    std::cout << report.to_text();
    if (rep.ok()) return kOk;
    return rep.conclusive ? kVerifyFailed : kBudgetExhausted;
}

struct SolveArgs {
    std::string game, in;
    long long budget = ssp::Budget::kNestingCap;
};

int run_solve(const SolveArgs& a) {
    std::string text = read_file(a.in);
    ssp::FileContent content = ssp::parse_instance_file(text);
    ssp::Budget budget(a.budget);

    std::string form;
    ssp::GameValue value;
    if (a.game == "interdiction") {
        if (auto* v = std::get_if<ssp::InterdictionInstance>(&content)) {
            ssp::require_valid(*v);
            form = "cost";
            value = ssp::solve_interdiction(*v, budget);
        } else if (auto* w = std::get_if<ssp::CombInterdictionInstance>(&content)) {
            ssp::require_valid(*w);
            form = "combinatorial";
            value = ssp::solve_interdiction(*w, budget);
        } else {
            throw ssp::KindMismatch("input is not an interdiction instance");
        }
    } else if (a.game == "regret") {
        if (auto* v = std::get_if<ssp::RegretInstance>(&content)) {
            ssp::require_valid(*v);
            form = "interval";
            value = ssp::solve_min_max_regret(*v, budget);
        } else if (auto* w = std::get_if<ssp::RestrictedRegretInstance>(&content)) {
            ssp::require_valid(*w);
            form = "restricted";
            value = ssp::solve_min_max_regret(*w, budget);
        } else {
            throw ssp::KindMismatch("input is not a regret instance");
        }
    } else {
        if (auto* v = std::get_if<ssp::TwoStageInstance>(&content)) {
            ssp::require_valid(*v);
            form = "cost";
            value = ssp::solve_two_stage(*v, budget);
        } else if (auto* w = std::get_if<ssp::CombTwoStageInstance>(&content)) {
            ssp::require_valid(*w);
            form = "combinatorial";
            value = ssp::solve_two_stage(*w, budget);
        } else {
            throw ssp::KindMismatch("input is not a two-stage instance");
        }
    }

    ssp::Report report;
    report.add("command", std::string("solve"));
    report.add("game", a.game);
    report.add("form", form);
    report.add("base-kind", ssp::kind_id(ssp::base_of(content).kind));
    report.add("input-digest", ssp::digest(text));
    report.add(value);
    std::cout << report.to_text();
    return kOk;
}

struct GadgetArgs {
    std::string family, in, out;
};

int run_gadget(const GadgetArgs& a) {
    std::string text = read_file(a.in);
    ssp::QuantifiedFormula f = ssp::parse_qbf(text);
    ssp::require_valid(f);

    ssp::FileContent content = [&]() -> ssp::FileContent {
        switch (family_from_name(a.family)) {
            case ssp::VariantFamily::Interdiction: return ssp::gadget_interdiction(f);
            case ssp::VariantFamily::RestrictedRegret: return ssp::gadget_regret(f);
            case ssp::VariantFamily::TwoStage: return ssp::gadget_two_stage(f);
        }
        throw ssp::Error("unknown family " + a.family);
    }();

    ssp::Report report;
    report.add("command", std::string("gadget"));
    report.add("family", a.family);
    report.add("variables", f.num_vars());
    report.add("rows", static_cast<ssp::Int>(f.rows.size()));
    report.add("base-kind", ssp::kind_id(ssp::base_of(content).kind));
    report.add("base-universe",
               static_cast<ssp::Int>(ssp::universe_of(ssp::base_of(content)).size()));
    report.add("input-digest", ssp::digest(text));
    emit(a.out, ssp::serialize_instance_file(content), std::move(report));
    return kOk;
}

struct LiftArgs {
    std::string reduction, family, in, out, embedding_out;
};

int run_lift(const LiftArgs& a) {
    ssp::VariantFamily family = family_from_name(a.family);
    ssp::LiftedReduction step = ssp::lift(ssp::reduction_by_id(a.reduction), family);
    std::string text = read_file(a.in);
    ssp::FileContent content = ssp::parse_instance_file(text);

    ssp::FileContent lifted_content{ssp::SspInstance{}};
    ssp::Embedding embedding;
    switch (family) {
        case ssp::VariantFamily::Interdiction: {
            auto* v = std::get_if<ssp::CombInterdictionInstance>(&content);
            if (!v)
                throw ssp::KindMismatch("input is not a combinatorial interdiction instance");
            ssp::LiftedInterdiction out = step.apply(*v);
            embedding = std::move(out.embedding);
            lifted_content = std::move(out.instance);
            break;
        }
        case ssp::VariantFamily::RestrictedRegret: {
            auto* v = std::get_if<ssp::RestrictedRegretInstance>(&content);
            if (!v) throw ssp::KindMismatch("input is not a restricted regret instance");
            ssp::LiftedRegret out = step.apply(*v);
            embedding = std::move(out.embedding);
            lifted_content = std::move(out.instance);
            break;
        }
        case ssp::VariantFamily::TwoStage: {
            auto* v = std::get_if<ssp::CombTwoStageInstance>(&content);
            if (!v) throw ssp::KindMismatch("input is not a combinatorial two-stage instance");
            ssp::LiftedTwoStage out = step.apply(*v);
            embedding = std::move(out.embedding);
            lifted_content = std::move(out.instance);
            break;
        }
    }
    if (!a.embedding_out.empty())
        write_file(a.embedding_out, ssp::serialize_embedding(embedding));

    ssp::Report report;
    report.add("command", std::string("lift"));
    report.add("reduction", a.reduction);
    report.add("family", a.family);
    report.add("target-kind", ssp::kind_id(ssp::base_of(lifted_content).kind));
    report.add("mapped-elements", static_cast<ssp::Int>(embedding.size()));
    report.add("input-digest", ssp::digest(text));
    emit(a.out, ssp::serialize_instance_file(lifted_content), std::move(report));
    return kOk;
}

int run_selftest(std::uint64_t seed) {
    bool passed = ssp::run_acceptance(seed, [](const std::string& line) {
        std::cout << line << "\n";
    });
    std::cout << (passed ? "selftest: PASS" : "selftest: FAIL") << "\n";
    return passed ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subset-search reductions, robust variants, and exhaustive game solvers"};
    app.require_subcommand(1);
    std::uint64_t seed = ssp::kDefaultSeed;
    app.add_option("--seed", seed, "seed for the selftest fixture generators");

    ReduceArgs reduce_args;
    CLI::App* reduce = app.add_subcommand("reduce", "apply catalog reductions to an instance");
    reduce->add_option("--via", reduce_args.via, "comma-separated reduction ids, composed");
    reduce->add_option("--from", reduce_args.from, "source kind id");
    reduce->add_option("--to", reduce_args.to, "target kind id");
    reduce->add_option("--in", reduce_args.in, "input instance file")->required();
    reduce->add_option("--out", reduce_args.out, "output instance file (default stdout)");
    reduce->add_option("--emit-embedding", reduce_args.embedding_out,
                       "also write the solution embedding");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "check a reduction by dual enumeration");
    verify->add_option("--reduction", verify_args.reduction, "catalog reduction id")->required();
    verify->add_option("--in", verify_args.in, "input instance file")->required();
    verify->add_option("--budget", verify_args.budget, "enumeration node budget");

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "solve a robust variant exhaustively");
    solve->add_option("--game", solve_args.game, "interdiction, regret, or two-stage")
        ->required()
        ->check(CLI::IsMember({"interdiction", "regret", "two-stage"}));
    solve->add_option("--in", solve_args.in, "variant instance file")->required();
    solve->add_option("--budget", solve_args.budget, "enumeration node budget");

    GadgetArgs gadget_args;
    CLI::App* gadget = app.add_subcommand("gadget", "build a game from a quantified formula");
    gadget->add_option("--family", gadget_args.family, "interdiction, regret, or two-stage")
        ->required()
        ->check(CLI::IsMember({"interdiction", "regret", "two-stage"}));
    gadget->add_option("--in", gadget_args.in, "quantified formula file")->required();
    gadget->add_option("--out", gadget_args.out, "output instance file (default stdout)");

    LiftArgs lift_args;
    CLI::App* lift = app.add_subcommand("lift", "push a variant through a catalog reduction");
    lift->add_option("--reduction", lift_args.reduction, "catalog reduction id")->required();
    lift->add_option("--family", lift_args.family, "interdiction, regret, or two-stage")
        ->required()
        ->check(CLI::IsMember({"interdiction", "regret", "two-stage"}));
    lift->add_option("--in", lift_args.in, "variant instance file")->required();
    lift->add_option("--out", lift_args.out, "output instance file (default stdout)");
    lift->add_option("--emit-embedding", lift_args.embedding_out,
                     "also write the solution embedding");

    CLI::App* selftest =
        app.add_subcommand("selftest", "run the built-in acceptance criteria");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (reduce->parsed()) return run_reduce(reduce_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (solve->parsed()) return run_solve(solve_args);
        if (gadget->parsed()) return run_gadget(gadget_args);
        if (lift->parsed()) return run_lift(lift_args);
        if (selftest->parsed()) return run_selftest(seed);
    } catch (const ssp::UndefinedRegret& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUndefinedRegret;
    } catch (const ssp::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudgetExhausted;
    } catch (const ssp::OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOverflow;
    } catch (const ssp::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOverflow;
    } catch (const ssp::KindMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kKindMismatch;
    } catch (const ssp::FamilyMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kKindMismatch;
    } catch (const ssp::PrefixMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kKindMismatch;
    } catch (const ssp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kOk;
}
