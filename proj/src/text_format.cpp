#include "hooktab/text_format.hpp"

#include <cctype>
#include <limits>
#include <map>

namespace hooktab {

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool accept(char ch) {
        skip_space();
        if (peek() != ch) return false;
        advance();
        return true;
    }
    [[noreturn]] void fail(const std::string& expected) const { throw ParseError(line_, column_, expected); }

    int integer(bool allow_sign, bool positive) {
        skip_space();
        int line = line_, column = column_;
        bool negative = false;
        if (allow_sign && peek() == '-') {
            negative = true;
            advance();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(positive ? "positive integer" : "integer");
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > std::numeric_limits<int>::max()) fail("integer within range");
            advance();
        }
        if (negative) v = -v;
        if (positive && v <= 0) throw ParseError(line, column, "positive integer");
        return static_cast<int>(v);
    }

    std::pair<int, int> position() const { return {line_, column_}; }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

std::vector<int> int_list(Scanner& s) {
    std::vector<int> out{s.integer(false, true)};
    while (s.accept(',')) out.push_back(s.integer(false, true));
    return out;
}

}  // namespace

std::string serialize(const HookCell& c) {
    std::string out = std::to_string(c.hook);
    if (!c.arms.empty()) out += "+" + join_ints(c.arms);
    if (!c.legs.empty()) out += "^" + join_ints(c.legs);
    return out;
}

std::string serialize(const HookValuedTableau& t) {
    std::string out;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r) out += " / ";
        for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
            if (c) out += '|';
            out += serialize(t.rows()[r][c]);
        }
    }
    return out;
}

std::string serialize(const MixedTableau& t) {
    const auto& outer = t.shape().outer();
    const auto& inner = t.shape().inner();
    std::string out;
    for (int r = 1; r <= outer.length(); ++r) {
        if (r > 1) out += " / ";
        for (int c = 1; c <= outer.row_length(r); ++c) {
            if (c > 1) out += '|';
            out += c <= inner.row_length(r) ? std::string(".") : t.at({r, c}).to_string();
        }
    }
    return out;
}

std::vector<std::vector<HookCell>> parse_hvt_rows(const std::string& text) {
    Scanner s(text);
    std::vector<std::vector<HookCell>> rows;
    if (s.at_end()) return rows;
    do {
        std::vector<HookCell> row;
        do {
            HookCell cell;
            cell.hook = s.integer(false, true);
            if (s.accept('+')) cell.arms = int_list(s);
            if (s.accept('^')) cell.legs = int_list(s);
            row.push_back(std::move(cell));
        } while (s.accept('|'));
        rows.push_back(std::move(row));
    } while (s.accept('/'));
    if (!s.at_end()) s.fail("'|', '/', '+', '^' or end of input");
    return rows;
}

InvalidTableau::InvalidTableau(std::vector<HvtViolation> violations)
    : Error([&] {
          std::string msg = "not a hook-valued tableau:";
          for (const auto& v : violations) msg += " " + v.to_string() + ";";
          return msg;
      }()),
      violations_(std::move(violations)) {}

HookValuedTableau parse_hvt(const std::string& text) {
    auto validation = validate_hvt_rows(parse_hvt_rows(text));
    if (!validation.ok()) throw InvalidTableau(std::move(validation.violations));
    return std::move(*validation.tableau);
}

MixedTableau parse_mixed(const std::string& text) {
    Scanner s(text);
    std::vector<int> outer;
    std::vector<int> inner;
    std::map<Cell, MixedEntry> entries;
    if (!s.at_end()) {
        int r = 0;
        do {
            ++r;
            int c = 0;
            int dots = 0;
            do {
                ++c;
                s.skip_space();
                char ch = s.peek();
                if (ch == '.') {
                    s.accept('.');
                    if (dots != c - 1) s.fail("an entry ('.' cells must come first in a row)");
                    ++dots;
                } else if (ch == 'a' || ch == 'b') {
                    s.accept(ch);
                    int k = s.integer(true, ch == 'a');
                    entries[{r, c}] = {ch == 'a' ? Symbol::alpha : Symbol::beta, k};
                } else {
                    s.fail("'.', 'aK' or 'bK'");
                }
            } while (s.accept('|'));
            auto [line, column] = s.position();
            if (!outer.empty() && (c > outer.back() || dots > inner.back()))
                throw ParseError(line, column, "row no longer than the row below it (partition shape)");
            outer.push_back(c);
            inner.push_back(dots);
        } while (s.accept('/'));
        if (!s.at_end()) s.fail("'|', '/' or end of input");
    }
    return MixedTableau(SkewShape(Partition(outer), Partition(inner)), entries);
}

}  // namespace hooktab
