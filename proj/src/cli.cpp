#include "hooktab/cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "hooktab/errors.hpp"
#include "hooktab/genfun.hpp"
#include "hooktab/switching.hpp"
#include "hooktab/text_format.hpp"
#include "hooktab/uncrowding.hpp"
#include "hooktab/verify.hpp"

namespace hooktab::cli {

namespace {

// Bad input that is the caller's fault rather than a failed check.
class UsageError : public Error {
public:
    using Error::Error;
};

std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

HookValuedTableau read_hvt(std::istream& in) {
    try {
        return parse_hvt(read_all(in));
    } catch (const InvalidTableau& e) {
        std::string msg = "input is not a hook-valued tableau:";
        for (const auto& v : e.violations()) msg += " " + v.to_string() + ";";
        throw UsageError(msg);
    }
}

MixedTableau read_mixed(std::istream& in) {
    try {
        return parse_mixed(read_all(in));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Partition partition_arg(const std::string& text, const char* flag) {
    try {
        return parse_partition(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string describe(const BumpRecord& r) {
    std::string symbol = r.kind == BumpKind::arm ? "a" + std::to_string(r.origin.col) : "b" + std::to_string(r.origin.row);
    if (!r.created) return "from " + to_string(r.origin);
    return symbol + " into " + to_string(*r.created);
}

void print_arrow(std::ostream& out, const std::string& label) { out << "  -- " << label << " -->\n"; }

// ---- validate -------------------------------------------------------------

int cmd_validate(const std::string& family, std::istream& in, std::ostream& out) {
    if (family == "mixed") {
        const MixedTableau t = read_mixed(in);
        const StrictnessFlags f = classify_mixed(t);
        out << "shape: " << t.shape().to_string() << "\n";
        out << "alpha_column_strict: " << yes_no(f.alpha_column_strict) << "\n";
        out << "alpha_row_strict: " << yes_no(f.alpha_row_strict) << "\n";
        out << "beta_column_strict: " << yes_no(f.beta_column_strict) << "\n";
        out << "beta_row_strict: " << yes_no(f.beta_row_strict) << "\n";
        out << "totally_column_strict: " << yes_no(f.totally_column_strict) << "\n";
        out << "sorted_alpha_beta: " << yes_no(f.sorted_alpha_beta) << "\n";
        out << "sorted_beta_alpha: " << yes_no(f.sorted_beta_alpha) << "\n";
        out << "flagged_mixed: " << yes_no(f.flagged_mixed) << "\n";
        out << "exquisite: " << yes_no(is_exquisite(t)) << "\n";
        out << "biflagged: " << yes_no(is_biflagged(t)) << "\n";
        if (f.flagged_mixed) out << "weight: " << weight_mixed(t).to_string() << "\n";
        return ok;
    }
    const auto v = validate_hvt_rows(parse_hvt_rows(read_all(in)));
    if (!v.ok()) {
        out << "invalid\n";
        for (const auto& x : v.violations) out << x.to_string() << "\n";
        return check_failed;
    }
    const auto& t = *v.tableau;
    out << "valid\n";
    out << "shape: " << t.shape().to_string() << "\n";
    out << "arm_excess: " << t.arm_excess() << "\n";
    out << "leg_excess: " << t.leg_excess() << "\n";
    out << "weight: " << weight_hvt(t).to_string() << "\n";
    return ok;
}

// ---- uncrowd --------------------------------------------------------------

int cmd_bumps(const std::string& ops, bool trace, std::istream& in, std::ostream& out) {
    HookValuedTableau t = read_hvt(in);
    if (trace) out << serialize(t) << "\n";
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (*it != 'A' && *it != 'L') throw UsageError("--bumps letters must be A or L");
        const BumpResult r = *it == 'A' ? arm_bump(t) : leg_bump(t);
        t = r.tableau;
        if (trace) {
            std::string label = *it == 'A' ? "Ab" : "Lb";
            label += r.record ? " " + describe(*r.record) : " identity";
            print_arrow(out, label);
            out << serialize(t) << "\n";
        }
    }
    if (!trace) out << serialize(t) << "\n";
    return ok;
}

int cmd_uncrowd(const std::string& word, bool trace, std::istream& in, std::ostream& out) {
    const HookValuedTableau t = read_hvt(in);
    UncrowdResult r;
    if (word == "LAinf") {
        r = uncrowd_canonical(t, CanonicalOrder::LA);
    } else if (word == "ALinf") {
        r = uncrowd_canonical(t, CanonicalOrder::AL);
    } else {
        try {
            r = uncrowd(t, UncrowdWord::parse(word));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (trace) {
        out << serialize(t) << "\n";
        for (const auto& step : r.steps) {
            std::string label = step.letter == UncrowdLetter::A ? "A" : "L";
            label += step.record ? " " + describe(*step.record) : " identity";
            print_arrow(out, label);
            out << serialize(step.after) << "\n";
        }
    }
    out << "P: " << serialize(r.insertion) << "\n";
    out << "Q: " << serialize(r.recording) << "\n";
    return ok;
}

// ---- switching ------------------------------------------------------------

void print_trace(std::ostream& out, const MixedTableau& start, const std::vector<MixedTableau>& trace,
                 const std::string& label) {
    out << serialize(start) << "\n";
    for (const auto& t : trace) {
        print_arrow(out, label);
        out << serialize(t) << "\n";
    }
}

int cmd_shuffle(bool trace, std::istream& in, std::ostream& out) {
    const MixedTableau t = read_mixed(in);
    std::vector<MixedTableau> steps;
    const MixedTableau s = shuffle(t, &steps);
    if (trace) {
        print_trace(out, t, steps, "shuffle");
    } else {
        out << serialize(s) << "\n";
    }
    return ok;
}

int cmd_switch(bool all, const std::string& at, const std::string& dir, const std::optional<std::uint64_t>& seed,
               bool trace, std::istream& in, std::ostream& out) {
    const MixedTableau t = read_mixed(in);
    if (all) {
        const SwitchStrategy strategy = seed ? SwitchStrategy::random(*seed) : SwitchStrategy::deterministic();
        std::vector<MixedTableau> steps;
        const MixedTableau s = fully_switch(t, strategy, &steps);
        if (trace) {
            print_trace(out, t, steps, "switch");
        } else {
            out << serialize(s) << "\n";
        }
        return ok;
    }
    if (at.empty()) throw UsageError("switch needs --all or --at ROW,COL");
    std::istringstream ss(at);
    int row = 0, col = 0;
    char comma = 0;
    ss >> row >> comma >> col;
    if (!ss || comma != ',' || row < 1 || col < 1 || ss.peek() != EOF) throw UsageError("--at expects ROW,COL");
    if (dir != "up" && dir != "right") throw UsageError("--dir must be up or right");
    const auto r = try_switch(t, {{row, col}, dir == "up" ? Direction::up : Direction::right});
    if (!r) {
        out << "no switch\n";
        return check_failed;
    }
    out << serialize(*r) << "\n";
    return ok;
}

int cmd_ggjdt(bool trace, std::istream& in, std::ostream& out) {
    const MixedTableau t = read_mixed(in);
    std::vector<MixedTableau> steps;
    const MixedTableau e = gg_jdt(t, &steps);
    if (trace) {
        print_trace(out, t, steps, "ggjdt");
    } else {
        out << serialize(e) << "\n";
    }
    out << "c+: " << serialize(c_beta_shift(e, ShiftSign::plus)) << "\n";
    return ok;
}

// ---- enum / verify / identity -----------------------------------------------

int cmd_enum(const std::string& family, const Partition& lambda, const Partition& outer, const Partition& inner,
             const EnumBounds& bounds, bool count_only, std::ostream& out) {
    std::vector<std::string> lines;
    if (family == "hvt") {
        for (const auto& t : enum_hvt(lambda, bounds)) lines.push_back(serialize(t));
    } else if (family == "ssyt") {
        for (const auto& t : enum_ssyt(lambda, bounds.max_entry)) lines.push_back(serialize(t));
    } else if (family == "exq" || family == "bft") {
        if (!outer.contains(inner)) throw UsageError("--inner must fit inside --outer");
        const SkewShape shape(outer, inner);
        for (const auto& t : family == "exq" ? enum_exquisite(shape) : enum_biflagged(shape))
            lines.push_back(serialize(t));
    } else {
        throw UsageError("unknown family: " + family);
    }
    if (count_only) {
        out << lines.size() << "\n";
    } else {
        for (const auto& l : lines) out << l << "\n";
    }
    return ok;
}

int cmd_verify(const std::string& check, const VerifyOptions& options, bool timing, std::ostream& out) {
    const auto& ids = check_ids();
    if (std::find(ids.begin(), ids.end(), check) == ids.end()) throw UsageError("unknown check: " + check);
    const VerificationReport report = verify(check, options);
    out << report.to_json(timing) << "\n";
    return report.passed() ? ok : check_failed;
}

bool report_pair(std::ostream& out, const std::string& a_name, const TruncatedPolynomial& a, const std::string& b_name,
                 const TruncatedPolynomial& b) {
    const auto diff = poly_diff(a, b);
    out << a_name << " vs " << b_name << ": " << (diff.empty() ? "equal" : "DIFFERENT") << "\n";
    for (const auto& d : diff) out << "  " << d << "\n";
    return diff.empty();
}

int cmd_identity(const Partition& lambda, const EnumBounds& bounds, bool det, bool show, std::ostream& out) {
    const int cap = lambda.size() + bounds.max_excess;
    out << "lambda: " << lambda.to_string() << "  n: " << bounds.max_entry << "  excess: " << bounds.max_excess
        << "  cap: " << cap << "\n";
    bool good = true;
    if (det) {
        const DetCheck d = det_formula_check(lambda, bounds.max_entry, cap);
        out << "det: " << d.lhs.term_count() << " terms\n";
        out << "vandermonde*hvt: " << d.rhs.term_count() << " terms\n";
        good = report_pair(out, "det", d.lhs, "vandermonde*hvt", d.rhs);
    } else {
        const auto hvt = hvt_genfun(lambda, bounds, cap);
        const auto exq = schur_expansion_genfun(lambda, bounds, cap, CoefficientModel::EXQ);
        const auto bft = schur_expansion_genfun(lambda, bounds, cap, CoefficientModel::BFT);
        out << "hvt: " << hvt.term_count() << " terms\n";
        out << "exq: " << exq.term_count() << " terms\n";
        out << "bft: " << bft.term_count() << " terms\n";
        good = report_pair(out, "hvt", hvt, "exq", exq);
        good = report_pair(out, "hvt", hvt, "bft", bft) && good;
        if (show) out << hvt.to_string();
    }
    return good ? ok : check_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hook-valued tableaux: uncrowding, switching, enumeration and identity checks", "hooktab"};
    app.require_subcommand(1);

    std::string family = "hvt", word, bumps, at, dir = "up", check, lambda_s, outer_s, inner_s;
    bool trace = false, all = false, count_only = false, det = false, show = false, no_timing = false;
    int n = 3, excess = 2, jobs = 1, max_outer = 6, max_index = 4, strategies = 100;
    std::optional<std::uint64_t> seed;

    auto* validate = app.add_subcommand("validate", "Check a tableau read from standard input");
    validate->add_option("--family", family, "hvt or mixed")->check(CLI::IsMember({"hvt", "mixed"}));

    auto* uncrowd_cmd = app.add_subcommand("uncrowd", "Uncrowd a hook-valued tableau");
    auto* word_opt = uncrowd_cmd->add_option("--word", word, "word over A,L applied right to left, LAinf or ALinf");
    auto* bumps_opt = uncrowd_cmd->add_option("--bumps", bumps, "single bumps over A,L applied right to left");
    word_opt->excludes(bumps_opt);
    uncrowd_cmd->add_flag("--trace", trace, "print every intermediate tableau");

    auto* shuffle_cmd = app.add_subcommand("shuffle", "Jeu de taquin shuffle of a mixed tableau");
    shuffle_cmd->add_flag("--trace", trace);

    auto* switch_cmd = app.add_subcommand("switch", "Tableau switching on a mixed tableau");
    switch_cmd->add_flag("--all", all, "switch until fully switched");
    switch_cmd->add_option("--at", at, "ROW,COL of the alpha entry for a single switch");
    switch_cmd->add_option("--dir", dir, "up or right");
    switch_cmd->add_option("--seed", seed, "random switch order with this seed");
    switch_cmd->add_flag("--trace", trace);

    auto* gg_cmd = app.add_subcommand("ggjdt", "Goulden-Greene jeu de taquin");
    gg_cmd->add_flag("--trace", trace);

    auto* enum_cmd = app.add_subcommand("enum", "List a tableau family");
    enum_cmd->add_option("--family", family, "hvt, ssyt, exq or bft")->required();
    enum_cmd->add_option("--lambda", lambda_s, "shape for hvt and ssyt");
    enum_cmd->add_option("--outer", outer_s, "outer shape for exq and bft");
    enum_cmd->add_option("--inner", inner_s, "inner shape for exq and bft");
    enum_cmd->add_option("--n", n, "largest entry")->check(CLI::PositiveNumber);
    enum_cmd->add_option("--excess", excess, "largest total excess")->check(CLI::NonNegativeNumber);
    enum_cmd->add_flag("--count", count_only, "print only the number of tableaux");

    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive theorem check; prints a JSON report");
    verify_cmd->add_option("--check", check, "check id")->required();
    verify_cmd->add_option("--lambda", lambda_s);
    verify_cmd->add_option("--n", n)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--excess", excess)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--outer", outer_s, "single shape for ggjdt_bijection and switch_confluence");
    verify_cmd->add_option("--inner", inner_s);
    verify_cmd->add_option("--max-outer", max_outer, "all shapes up to this size")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--max-index", max_index)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--strategies", strategies)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--no-timing", no_timing, "leave elapsed_ms out of the report");

    auto* identity_cmd = app.add_subcommand("identity", "Generating function identities");
    identity_cmd->add_option("--lambda", lambda_s);
    identity_cmd->add_option("--n", n)->check(CLI::PositiveNumber);
    identity_cmd->add_option("--excess", excess)->check(CLI::NonNegativeNumber);
    identity_cmd->add_flag("--det", det, "compare the determinant with the Vandermonde times the HVT sum");
    identity_cmd->add_flag("--show", show, "print the HVT generating function");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage_error;
    }

    try {
        const Partition lambda = partition_arg(lambda_s, "--lambda");
        const EnumBounds bounds{n, excess};
        if (validate->parsed()) return cmd_validate(family, in, out);
        if (uncrowd_cmd->parsed()) {
            if (!bumps.empty()) return cmd_bumps(bumps, trace, in, out);
            if (word.empty()) throw UsageError("uncrowd needs --word or --bumps");
            return cmd_uncrowd(word, trace, in, out);
        }
        if (shuffle_cmd->parsed()) return cmd_shuffle(trace, in, out);
        if (switch_cmd->parsed()) return cmd_switch(all, at, dir, seed, trace, in, out);
        if (gg_cmd->parsed()) return cmd_ggjdt(trace, in, out);
        if (enum_cmd->parsed())
            return cmd_enum(family, lambda, partition_arg(outer_s, "--outer"), partition_arg(inner_s, "--inner"),
                            bounds, count_only, out);
        if (verify_cmd->parsed()) {
            VerifyOptions o;
            o.lambda = lambda;
            o.bounds = bounds;
            if (!outer_s.empty()) {
                const Partition outer = partition_arg(outer_s, "--outer");
                const Partition inner = partition_arg(inner_s, "--inner");
                if (!outer.contains(inner)) throw UsageError("--inner must fit inside --outer");
                o.shape = SkewShape(outer, inner);
            }
            o.max_outer = max_outer;
            o.max_index = max_index;
            o.strategies = strategies;
            o.seed = seed.value_or(0);
            o.jobs = jobs;
            return cmd_verify(check, o, !no_timing, out);
        }
        if (identity_cmd->parsed()) return cmd_identity(lambda, bounds, det, show, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const PreconditionViolation& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const CapTooSmall& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_error;
    }
    return usage_error;
}

}  // namespace hooktab::cli
