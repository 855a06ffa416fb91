#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ssp/instance.hpp"
#include "ssp/qbf.hpp"
#include "ssp/reduction.hpp"
#include "ssp/solvers.hpp"
#include "ssp/variants.hpp"

namespace ssp {

// --- instance files ---------------------------------------------------------
//
// Line-oriented, whitespace-separated tokens, '#' starts a comment. The header
// line is `ssp <kind-id> v1`, followed by a kind-specific body:
//
//   sat, 3sat            p cnf <vars> <clauses>, then DIMACS clause lines
//                        terminated by 0
//   graph kinds          vertices <n> / k <k> / edges|arcs <m>, then endpoint
//                        lines `a b` (weighted kinds append the weight)
//   set_cover,
//   hitting_set          ground <g> / k <k> / sets <m>, then size-prefixed
//                        member lines
//   ufl, p_center,
//   p_median             dimension lines, then the service matrix row by row
//   number kinds         numbers|items|jobs <m>, then one value line each,
//                        plus the scalar lines of the kind
//   path kinds           vertices / terminal lines / arcs
//
// A robust variant extends the body with a trailing section opened by
// `variant <family-id>`; element references inside use the canonical
// ElementId text form.

/// A parsed file: either a plain instance or one of the six variant forms.
using FileContent =
    std::variant<SspInstance, InterdictionInstance, CombInterdictionInstance,
                 RegretInstance, RestrictedRegretInstance, TwoStageInstance,
                 CombTwoStageInstance>;

/// Parses a full instance file, variant section included. Throws ParseError
/// (with 1-based line/column) on malformed text or trailing garbage. Payload
/// lists are brought to canonical order; structural legality is checked by
/// the caller via require_valid.
FileContent parse_instance_file(const std::string& text);

/// Parses a plain instance file; throws ParseError if a variant section is
/// present.
SspInstance parse_instance(const std::string& text);

/// The base instance of any file content.
const SspInstance& base_of(const FileContent& content);

std::string serialize_instance(const SspInstance& x);
std::string serialize_instance_file(const FileContent& content);

// --- quantified formulas ----------------------------------------------------
//
//   qbf <dnf|cnf> v1
//   p <dnf|cnf> <vars> <rows>
//   e <X block> 0 / a <Y block> 0 [/ e <Z block> 0]
//   <rows, DIMACS style, terminated by 0>
//
// Prefix blocks must list 1..vars contiguously in ascending order.

QuantifiedFormula parse_qbf(const std::string& text);
std::string serialize_qbf(const QuantifiedFormula& f);

// --- embedding maps ---------------------------------------------------------
//
//   embedding v1
//   map <count>
//   <source-element> <target-element>   (count lines, sorted by source)

Embedding parse_embedding(const std::string& text);
std::string serialize_embedding(const Embedding& f);

// --- reports ----------------------------------------------------------------

/// 64-bit FNV-1a over a byte string.
std::uint64_t fnv1a(std::string_view bytes);

/// Hex digest used to fingerprint file contents inside reports.
std::string digest(std::string_view bytes);

/// Line-oriented key/value report. to_text() emits the "report-v1" header,
/// one "key: value" line per field in insertion order, and a closing digest
/// line over everything above it. Keys must be nonempty and contain neither
/// ':' nor a newline; values must not contain a newline.
class Report {
  public:
    void add(std::string key, std::string value);
    void add(std::string key, Int value);
    void add(std::string key, bool value);
    /// Decision, value and witness fields of a solved game.
    void add(const GameValue& g);

    const std::vector<std::pair<std::string, std::string>>& fields() const {
        return fields_;
    }
    std::string to_text() const;

  private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace ssp
