// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "golden.hpp"
#include "hooktab/cli.hpp"
#include "hooktab/enumeration.hpp"
#include "hooktab/genfun.hpp"
#include "hooktab/mixed_tableau.hpp"
#include "hooktab/switching.hpp"
#include "hooktab/text_format.hpp"
#include "hooktab/uncrowding.hpp"
#include "hooktab/verify.hpp"
#include "oracles.hpp"

using namespace hooktab;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
    std::vector<std::string> problems;
    void fail(const std::string& why) { problems.push_back(why); }
    void expect(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<Partition> small_lambdas() {
    std::vector<Partition> out;
    for (int k = 0; k <= 4; ++k)
        for (const auto& p : partitions_of(k)) out.push_back(p);
    return out;
}

void goldens(Criterion& c) {
    for (const auto& g : golden::load_manifest(HOOKTAB_GOLDEN_DIR)) {
        const auto t0 = Clock::now();
        const auto o = golden::run_case(HOOKTAB_GOLDEN_DIR, g);
        const double s = seconds_since(t0);
        c.expect(o.passed, g.name + ": " + o.detail);
        c.expect(s < 1.0, g.name + " took " + std::to_string(s) + " s");
    }
    // The pair below is not reached by arm uncrowding from any tableau.
    const auto t0 = Clock::now();
    const auto p1 = parse_hvt("1^2|2^3 / 3");
    const auto q1 = parse_mixed(".|a1 / .");
    for (const auto& t : enum_hvt(Partition{1, 1}, {3, 3})) {
        UncrowdWord w;
        w.letters.assign(static_cast<std::size_t>(t.arm_excess()), UncrowdLetter::A);
        const auto u = uncrowd(t, w);
        c.expect(!(u.insertion == p1 && u.recording == q1), "arm-only image contains " + serialize(t));
    }
    // Leg uncrowding of P1 records the remaining cells; together with Q1
    // they form the recording tableau of the full uncrowding.
    const auto legs = uncrowd_canonical(p1, CanonicalOrder::LA);
    std::map<Cell, MixedEntry> merged;
    for (const auto& [cell, e] : q1.entries()) merged[cell] = e;
    for (const auto& [cell, e] : legs.recording.entries()) merged[cell] = e;
    const MixedTableau q(SkewShape(legs.insertion.shape(), q1.shape().inner()), merged);
    c.expect(serialize(q) == ".|a1 / .|b1 / b1", "unexpected recording tableau " + serialize(q));
    c.expect(is_flagged_mixed(q) && !is_flagged_mixed(shuffle(q)), "shuffle of the recording tableau is flagged");
    c.expect(!is_biflagged(q), "negative control recording tableau is biflagged");
    c.expect(seconds_since(t0) < 1.0, "negative control over 1 s");
}

void theorems(Criterion& c) {
    const auto t0 = Clock::now();
    auto report = [&](const VerificationReport& r, const std::string& label) {
        std::printf("    %-18s %-12s %9zu instances %6.1f s\n", r.check_id.c_str(), label.c_str(), r.instances_checked,
                    r.elapsed.count() / 1000.0);
        std::fflush(stdout);
        for (const auto& f : r.failures) c.fail(r.check_id + " " + label + ": " + f);
    };
    for (const auto& id : {"commute_lemma", "shuffle_theorem", "uncrowd_image", "phi_bijection"}) {
        for (const auto& lambda : small_lambdas()) {
            VerifyOptions o;
            o.lambda = lambda;
            o.bounds = {3, 2};
            o.jobs = jobs();
            report(verify(id, o), "(" + lambda.to_string() + ")");
        }
    }
    VerifyOptions g;
    g.max_outer = 6;
    g.jobs = jobs();
    report(verify("ggjdt_bijection", g), "|mu|<=6");
    VerifyOptions s;
    s.max_outer = 7;
    s.max_index = 4;
    s.strategies = 100;
    s.seed = 20240601;
    s.jobs = jobs();
    report(verify("switch_confluence", s), "|mu|<=7");
    const double total = seconds_since(t0);
    c.expect(total < 300.0, "theorem suites took " + std::to_string(total) + " s");
}

void identities(Criterion& c) {
    for (const auto& lambda : {Partition{}, Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}}) {
        const auto t0 = Clock::now();
        const EnumBounds b{3, 2};
        const int cap = lambda.size() + b.max_excess;
        const auto g = hvt_genfun(lambda, b, cap);
        const auto exq = schur_expansion_genfun(lambda, b, cap, CoefficientModel::EXQ);
        const auto bft = schur_expansion_genfun(lambda, b, cap, CoefficientModel::BFT);
        const double s = seconds_since(t0);
        std::printf("    three-way (%s) n=3 E=2: %zu terms %6.2f s\n", lambda.to_string().c_str(), g.term_count(), s);
        c.expect(g == exq && g == bft, "three-way identity fails for (" + lambda.to_string() + ")");
        c.expect(s < 120.0, "three-way identity slow for (" + lambda.to_string() + ")");
    }
    for (const auto& lambda : {Partition{}, Partition{1}, Partition{2, 1}})
        for (int n : {2, 3}) {
            const auto t0 = Clock::now();
            const auto d = det_formula_check(lambda, n, lambda.size() + 2);
            const double s = seconds_since(t0);
            std::printf("    determinant (%s) n=%d: %zu terms %6.2f s\n", lambda.to_string().c_str(), n, d.lhs.term_count(), s);
            c.expect(d.lhs == d.rhs, "determinant identity fails for (" + lambda.to_string() + ") n=" + std::to_string(n));
            c.expect(s < 120.0, "determinant identity slow");
        }
}

void oracles(Criterion& c) {
    std::size_t mixed = 0;
    for (const auto& shape : skew_shapes_up_to(5)) {
        if (shape.size() == 0) continue;
        oracle::for_each_mixed(shape, -2, 3, [&](const MixedTableau& t) {
            ++mixed;
            if (!oracle::same(oracle::classify(t), classify_mixed(t))) c.fail("classify_mixed differs on " + serialize(t));
        });
    }
    std::printf("    classify_mixed: %zu tableaux\n", mixed);
    for (int size = 0; size <= 4; ++size)
        for (const auto& mu : partitions_of(size))
            for (int n = std::max(1, mu.length()); n <= 3; ++n)
                c.expect(schur_poly(mu, n, size) == oracle::bialternant(mu, n, size),
                         "schur_poly differs for (" + mu.to_string() + ") n=" + std::to_string(n));
    for (const auto& lambda : {Partition{}, Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}})
        for (int n = std::max(1, lambda.length()); n <= 3; ++n)
            for (int e = 0; e <= 2; ++e) {
                Integer sum = 0;
                const auto series = det_formula_series(lambda, n, lambda.size() + e);
                for (const auto& [m, k] : series.terms()) sum += k;
                c.expect(sum == Integer(enum_hvt(lambda, {n, e}).size()),
                         "enum_hvt count differs for (" + lambda.to_string() + ") n=" + std::to_string(n) +
                             " E=" + std::to_string(e));
            }
}

std::string cli_output(const std::vector<std::string>& args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out, err;
    hooktab::cli::run(args, in, out, err);
    return out.str();
}

void determinism(Criterion& c) {
    for (const auto& id : check_ids()) {
        VerifyOptions o;
        o.lambda = Partition{2, 1};
        o.bounds = {3, 2};
        o.max_outer = 5;
        o.max_index = 3;
        o.strategies = 20;
        o.seed = 99;
        o.jobs = 1;
        const auto a = verify(id, o).to_json(false);
        const auto b = verify(id, o).to_json(false);
        o.jobs = 4;
        const auto k = verify(id, o).to_json(false);
        c.expect(a == b, id + ": two seeded runs differ");
        c.expect(a == k, id + ": 1 and 4 workers differ");
    }
    const std::string input = ".|a2|a2|a1|b5|b1 / a2|a1|b6|b2|b1 / b8|b6|b5|b2";
    c.expect(cli_output({"switch", "--all", "--seed", "7", "--trace"}, input) ==
                 cli_output({"switch", "--all", "--seed", "7", "--trace"}, input),
             "seeded switch traces differ");
    const std::vector<std::string> v = {"verify", "--check", "switch_confluence", "--max-outer", "4", "--no-timing"};
    auto with_jobs = v;
    with_jobs.insert(with_jobs.end(), {"--jobs", "3"});
    c.expect(cli_output(v, "") == cli_output(with_jobs, ""), "verify output depends on --jobs");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
        {"golden examples", goldens},
        {"theorem suites", theorems},
        {"generating-function identities", identities},
        {"oracle equivalences", oracles},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        const auto t0 = Clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
        const double s = seconds_since(t0);
        std::printf("criterion %zu %s: %s (%.1f s)\n", i + 1, criteria[i].first.c_str(), c.problems.empty() ? "PASS" : "FAIL", s);
        for (std::size_t k = 0; k < c.problems.size() && k < 20; ++k) std::printf("    %s\n", c.problems[k].c_str());
        std::fflush(stdout);
        failed += !c.problems.empty();
    }
    return failed == 0 ? 0 : 1;
}
