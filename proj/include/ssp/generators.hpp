#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "ssp/instance.hpp"
#include "ssp/qbf.hpp"
#include "ssp/variants.hpp"

namespace ssp {

/// Master seed for every recorded sweep.
inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Deterministic fixture stream: a master seed mixed with a textual label and
/// an index. Draws use explicit modulo so the sequence is identical under
/// every standard library.
class FixtureRng {
  public:
    FixtureRng(std::uint64_t seed, std::string_view label, std::uint64_t index);

    std::uint64_t next();
    /// Uniform in [0, n); n must be positive.
    Int below(Int n);
    /// Uniform in [lo, hi] inclusive.
    Int between(Int lo, Int hi);
    bool flip();

  private:
    std::mt19937_64 gen_;
};

/// Random well-formed source instance for the named catalog reduction, sized
/// so both sides of the verification enumerate comfortably and honoring the
/// documented per-reduction generator preconditions (isolated-vertex-free
/// cover sources, sink-terminated path sources, single-clause sources for the
/// two-disjoint-path construction, and so on).
SspInstance random_source(const std::string& reduction_id, std::uint64_t seed,
                          std::uint64_t index);

/// Sources for the composed-chain checks, kept small enough that the final
/// stage of each chain still enumerates exhaustively.
SspInstance random_chain_sat(std::uint64_t seed, std::uint64_t index);
SspInstance random_chain_3sat(std::uint64_t seed, std::uint64_t index);

/// Random formula within the block-size bounds; rows may be empty.
QuantifiedFormula random_qbf(QbfShape shape, Int max_x, Int max_y, Int max_z,
                             Int max_rows, std::uint64_t seed, std::uint64_t index);

/// Robust-variant fixtures over small bases. Supported base kinds:
/// ThreeSatisfiability and VertexCover. Regret bases are resampled until they
/// have at least one solution, the regime every regret statement assumes.
CombInterdictionInstance random_comb_interdiction(ProblemKind base_kind,
                                                  std::uint64_t seed,
                                                  std::uint64_t index);
RestrictedRegretInstance random_restricted_regret(ProblemKind base_kind,
                                                  std::uint64_t seed,
                                                  std::uint64_t index);
CombTwoStageInstance random_comb_two_stage(ProblemKind base_kind, std::uint64_t seed,
                                           std::uint64_t index);

/// Vertex-cover-based restricted-regret fixture whose base bound is tight:
/// the solution set is exactly the family of minimum-size covers. In that
/// regime the regret cost adaptation preserves the regret value exactly.
RestrictedRegretInstance random_tight_regret(std::uint64_t seed, std::uint64_t index);

}  // namespace ssp
