#ifndef HOOKTAB_UNCROWDING_HPP
#define HOOKTAB_UNCROWDING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hooktab/hook_tableau.hpp"
#include "hooktab/mixed_tableau.hpp"

namespace hooktab {

enum class BumpKind { arm, leg };

/// What one bump (or one single uncrowding) did: `origin` is the cell that
/// held the selected largest arm/leg entry, `created` the new cell if the
/// shape grew.
struct BumpRecord {
    BumpKind kind = BumpKind::arm;
    Cell origin;
    std::optional<Cell> created;
    int moved_entry = 0;

    friend bool operator==(const BumpRecord&, const BumpRecord&) = default;
};

struct BumpResult {
    HookValuedTableau tableau;
    std::optional<BumpRecord> record;
};

/// One arm-uncrowding bump. Identity (no record) when T has no arms.
BumpResult arm_bump(const HookValuedTableau& t);
/// One leg-uncrowding bump. Identity (no record) when T has no legs.
BumpResult leg_bump(const HookValuedTableau& t);

/// Iterates arm_bump until the shape grows. The record's origin is the cell
/// selected by the first bump.
BumpResult arm_uncrowd(const HookValuedTableau& t);
BumpResult leg_uncrowd(const HookValuedTableau& t);

enum class UncrowdLetter { A, L };

/// A word f_n ... f_1 over {A, L}. Letters are stored in reading order and
/// applied right to left, so "LLAA" applies A, A, L, L.
struct UncrowdWord {
    std::vector<UncrowdLetter> letters;

    /// Parses a string over {A, L}; throws std::invalid_argument otherwise.
    static UncrowdWord parse(const std::string& text);
    std::string to_string() const;
};

struct UncrowdStep {
    UncrowdLetter letter;
    HookValuedTableau after;
    std::optional<BumpRecord> record;
};

struct UncrowdResult {
    HookValuedTableau insertion;
    MixedTableau recording;
    std::vector<BumpRecord> records;
    std::vector<UncrowdStep> steps;  // one per letter, in application order
};

UncrowdResult uncrowd(const HookValuedTableau& t, const UncrowdWord& w);

/// LA: all arms first, then all legs. AL: all legs first, then all arms.
enum class CanonicalOrder { LA, AL };
UncrowdResult uncrowd_canonical(const HookValuedTableau& t, CanonicalOrder order);

enum class BumpOp { arm, leg };

/// A letter f^(epsilon) of a typed word.
struct TypedLetter {
    BumpOp op;
    int epsilon;
};

/// A typed word f_k^(e_k) ... f_1^(e_1), stored in reading order and applied
/// right to left.
struct TypedWord {
    std::vector<TypedLetter> letters;
};

/// True iff applying the bumps right to left grows the cell count by
/// exactly epsilon_i at step i.
bool has_type(const HookValuedTableau& t, const TypedWord& w);

/// Applies a sequence of bumps (right to left, as in has_type).
HookValuedTableau apply_bumps(const HookValuedTableau& t, const std::vector<BumpOp>& ops_reading_order);

}  // namespace hooktab

#endif  // HOOKTAB_UNCROWDING_HPP
