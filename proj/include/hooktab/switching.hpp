#ifndef HOOKTAB_SWITCHING_HPP
#define HOOKTAB_SWITCHING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hooktab/mixed_tableau.hpp"

namespace hooktab {

enum class Direction { up, right };

/// Interchange of the alpha entry at `cell` with the beta entry directly
/// above or to the right of it.
struct SwitchMove {
    Cell cell;
    Direction direction = Direction::up;

    Cell target() const noexcept { return direction == Direction::up ? cell.above() : cell.right(); }
    friend bool operator==(const SwitchMove&, const SwitchMove&) = default;
};

/// Performs the switch if `cell` holds an alpha, the target holds a beta and
/// the result is still alpha-column-strict and beta-row-strict.
/// Throws PreconditionViolation unless `t` is alpha-column-strict and
/// beta-row-strict.
std::optional<MixedTableau> try_switch(const MixedTableau& t, const SwitchMove& move);

/// Every switch applicable to `t`, top row first, left to right, up before
/// right within a cell. No precondition check.
std::vector<SwitchMove> available_switches(const MixedTableau& t);

struct SwitchStrategy {
    enum class Kind { deterministic, seeded_random } kind = Kind::deterministic;
    std::uint64_t seed = 0;

    static SwitchStrategy deterministic() { return {}; }
    static SwitchStrategy random(std::uint64_t seed) { return {Kind::seeded_random, seed}; }
};

/// Applies switches until none is possible. Requires an alpha-column-strict,
/// beta-row-strict, (alpha,beta)-sorted input; the result does not depend on
/// the strategy. `trace`, when given, receives every intermediate tableau.
MixedTableau fully_switch(const MixedTableau& t, SwitchStrategy strategy = {},
                          std::vector<MixedTableau>* trace = nullptr);

/// Same loop as fully_switch for a tableau part way through a switch
/// sequence (not necessarily sorted). Requires alpha-column-strict and
/// beta-row-strict.
MixedTableau switch_to_end(const MixedTableau& t, SwitchStrategy strategy = {},
                           std::vector<MixedTableau>* trace = nullptr);

/// Jeu de taquin shuffle: repeatedly takes the alpha of smallest index
/// (rightmost among equals) having a beta directly above or to the right and
/// slides it north-east through the betas. `trace` receives the tableau
/// after each slid alpha has come to rest.
MixedTableau shuffle(const MixedTableau& t, std::vector<MixedTableau>* trace = nullptr);

struct OutOfOrderWitness {
    Cell cell;
    bool horizontal_applies = false;
    bool vertical_applies = false;

    friend bool operator==(const OutOfOrderWitness&, const OutOfOrderWitness&) = default;
};

/// Alpha entries that are out of order for the Goulden-Greene slides, in
/// cell order. Requires alpha-column-strict and beta-row-strict.
std::vector<OutOfOrderWitness> gg_out_of_order(const MixedTableau& t);

/// The Goulden-Greene modified jeu de taquin. `trace` receives the tableau
/// after each slide.
MixedTableau gg_jdt(const MixedTableau& t, std::vector<MixedTableau>* trace = nullptr);

bool is_biflagged(const MixedTableau& t);

/// alpha-column-strict, beta-row-strict and (alpha,beta)-sorted: the domain
/// of fully_switch, shuffle and gg_jdt.
bool is_switchable(const MixedTableau& t);

}  // namespace hooktab

#endif  // HOOKTAB_SWITCHING_HPP
