#ifndef HOOKTAB_TEXT_FORMAT_HPP
#define HOOKTAB_TEXT_FORMAT_HPP

#include <string>
#include <vector>

#include "hooktab/errors.hpp"
#include "hooktab/hook_tableau.hpp"
#include "hooktab/mixed_tableau.hpp"

// Plain-text tableau format. Rows are listed bottom to top separated by
// " / ", cells within a row by "|".
//
//   hook-valued cell:  h[+a1,a2,...][^l1,l2,...]     e.g. "5+7^6"
//   mixed cell:        "." (inner cell), "aK" or "bK" with K possibly negative
//
// serialize(parse(s)) == s for every canonical string s; the parsers also
// accept extra whitespace around separators.

namespace hooktab {

std::string serialize(const HookCell& c);
std::string serialize(const HookValuedTableau& t);
std::string serialize(const MixedTableau& t);

/// Syntax only; row and column conditions are not checked.
std::vector<std::vector<HookCell>> parse_hvt_rows(const std::string& text);
/// Syntax plus validate_hvt_rows. Throws ParseError on bad syntax and
/// InvalidTableau when a hook-valued tableau condition fails.
HookValuedTableau parse_hvt(const std::string& text);
MixedTableau parse_mixed(const std::string& text);

class InvalidTableau : public Error {
public:
    explicit InvalidTableau(std::vector<HvtViolation> violations);
    const std::vector<HvtViolation>& violations() const noexcept { return violations_; }

private:
    std::vector<HvtViolation> violations_;
};

}  // namespace hooktab

#endif  // HOOKTAB_TEXT_FORMAT_HPP
