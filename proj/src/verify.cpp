#include "hooktab/verify.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "hooktab/switching.hpp"
#include "hooktab/text_format.hpp"
#include "hooktab/uncrowding.hpp"

namespace hooktab {

namespace {

// What one input contributed. `key` feeds the global injectivity and image
// checks; `count` is the number of instances the input stood for.
struct ItemResult {
    std::vector<std::string> failures;
    std::vector<std::string> keys;
    std::vector<std::string> sources;
    std::size_t count = 1;
};

// Results come back in input order whatever the thread count, so the merge
// below is deterministic.
template <class In, class F>
std::vector<ItemResult> parallel_map(const std::vector<In>& items, int jobs, F f) {
    std::vector<ItemResult> out(items.size());
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < items.size(); i += stride) {
            try {
                out[i] = f(items[i], i);
            } catch (const std::exception& e) {
                out[i] = ItemResult{{std::string("exception: ") + e.what()}, {}, {}, 1};
            }
        }
    };
    const std::size_t n = static_cast<std::size_t>(std::max(1, jobs));
    if (n == 1 || items.size() < 2) {
        work(0, 1);
        return out;
    }
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work, t, n);
    for (auto& th : pool) th.join();
    return out;
}

int cells(const HookValuedTableau& t) { return t.shape().size(); }

std::string pair_key(const HookValuedTableau& p, const MixedTableau& q) {
    return serialize(p) + " ; " + serialize(q);
}

void check_image(const std::vector<ItemResult>& results, const std::set<std::string>& expected,
                 std::vector<std::string>& failures) {
    std::map<std::string, std::string> seen;
    for (const auto& r : results) {
        for (std::size_t k = 0; k < r.keys.size(); ++k) {
            const std::string& key = r.keys[k];
            const std::string& src = r.sources[k];
            auto [it, fresh] = seen.emplace(key, src);
            if (!fresh) failures.push_back("not injective: " + it->second + " and " + src + " -> " + key);
            if (!expected.count(key)) failures.push_back("outside expected image: " + src + " -> " + key);
        }
    }
    for (const auto& key : expected)
        if (!seen.count(key)) failures.push_back("missing from image: " + key);
}

std::vector<Partition> outer_shapes(const VerifyOptions& o) {
    std::vector<Partition> out;
    for (const Partition& mu : partitions_containing(o.lambda, o.bounds.max_excess))
        if (mu.length() <= o.bounds.max_entry) out.push_back(mu);
    return out;
}

std::vector<SkewShape> shapes_for(const VerifyOptions& o) {
    if (o.shape) return {*o.shape};
    return skew_shapes_up_to(o.max_outer);
}

ItemResult commute_item(const HookValuedTableau& t) {
    ItemResult r;
    if (t.arm_excess() == 0 || t.leg_excess() == 0) return r;
    const auto a = arm_bump(t).tableau;
    const auto la = leg_bump(a).tableau;
    const auto l = leg_bump(t).tableau;
    const auto al = arm_bump(l).tableau;
    const int y = cells(a) - cells(t), x = cells(la) - cells(a);
    const int xp = cells(l) - cells(t), yp = cells(al) - cells(l);
    const std::string src = serialize(t);
    if (x == 1 && y == 1 && yp == 0 && xp == 1) {
        const auto aal = arm_bump(al).tableau;
        if (cells(aal) - cells(al) != 1) r.failures.push_back("case 1 type: " + src);
        if (la != aal) r.failures.push_back("case 1 equality: " + src);
    } else if (x == 0 && y == 1 && yp == 1 && xp == 1) {
        const auto lla = leg_bump(la).tableau;
        if (cells(lla) - cells(la) != 1) r.failures.push_back("case 2 type: " + src);
        if (lla != al) r.failures.push_back("case 2 equality: " + src);
    } else {
        if (x != xp || y != yp) r.failures.push_back("case 3 type: " + src);
        if (la != al) r.failures.push_back("case 3 equality: " + src);
    }
    return r;
}

ItemResult shuffle_item(const HookValuedTableau& t) {
    ItemResult r;
    const std::string src = serialize(t);
    const auto la = uncrowd(t, UncrowdWord::parse("LA"));
    const auto al = uncrowd(t, UncrowdWord::parse("AL"));
    if (la.insertion != al.insertion) r.failures.push_back("single step P differs: " + src);
    if (al.recording != shuffle(la.recording)) r.failures.push_back("single step Q is not shuffled: " + src);
    const auto c1 = uncrowd_canonical(t, CanonicalOrder::LA);
    const auto c2 = uncrowd_canonical(t, CanonicalOrder::AL);
    if (!c1.insertion.is_ssyt()) r.failures.push_back("insertion has excess: " + src);
    if (c1.insertion != c2.insertion) r.failures.push_back("canonical P differs: " + src);
    if (c2.recording != shuffle(c1.recording)) r.failures.push_back("canonical Q is not shuffled: " + src);
    return r;
}

ItemResult image_item(const HookValuedTableau& t, const Partition& lambda, bool through_jdt) {
    ItemResult r;
    const std::string src = serialize(t);
    const auto c = uncrowd_canonical(t, CanonicalOrder::LA);
    const HookValuedTableau& p = c.insertion;
    MixedTableau q = c.recording;
    if (!p.is_ssyt()) r.failures.push_back("P is not semistandard: " + src);
    if (q.shape().inner() != lambda) r.failures.push_back("Q has the wrong inner shape: " + src);
    if (through_jdt) {
        q = gg_jdt(q);
        if (!is_exquisite(q)) r.failures.push_back("E is not exquisite: " + src);
    } else if (!is_biflagged(q)) {
        r.failures.push_back("Q is not biflagged: " + src);
    }
    if (is_flagged_mixed(q) && weight_hvt(t) != weight_hvt(p) * weight_mixed(q))
        r.failures.push_back("weight not preserved: " + src);
    r.keys.push_back(pair_key(p, q));
    r.sources.push_back(src);
    return r;
}

ItemResult ggjdt_shape_item(const SkewShape& shape) {
    ItemResult r;
    const auto bft = enum_biflagged(shape);
    const auto exq = enum_exquisite(shape);
    const std::string where = " on " + shape.to_string();
    r.count = bft.size();
    std::set<std::string> exq_keys;
    for (const auto& e : exq) exq_keys.insert(serialize(e));
    std::map<std::string, std::string> seen;
    for (const auto& q : bft) {
        const auto e = gg_jdt(q);
        const std::string qs = serialize(q), es = serialize(e);
        if (!exq_keys.count(es)) r.failures.push_back("image not exquisite: " + qs + " -> " + es + where);
        if (weight_mixed(q) != weight_mixed(e)) r.failures.push_back("weight not preserved: " + qs + where);
        auto [it, fresh] = seen.emplace(es, qs);
        if (!fresh) r.failures.push_back("not injective: " + it->second + " and " + qs + where);
    }
    if (bft.size() != exq.size())
        r.failures.push_back("|BFT| = " + std::to_string(bft.size()) + " but |EXQ| = " + std::to_string(exq.size()) +
                             where);
    return r;
}

bool ne_step(const MixedTableau& before, const MixedTableau& after) {
    std::vector<Cell> changed;
    for (const auto& [c, e] : before.entries())
        if (after.at(c) != e) changed.push_back(c);
    if (changed.size() != 2) return false;
    const Cell lo = changed[0], hi = changed[1];  // entries() is in cell order
    const bool adjacent = (lo.above() == hi) || (lo.right() == hi) || (hi.above() == lo) || (hi.right() == lo);
    if (!adjacent) return false;
    // the alpha must end up north or east of where it was
    const Cell from = before.at(lo).is_alpha() ? lo : hi;
    const Cell to = from == lo ? hi : lo;
    return before.at(from).is_alpha() && before.at(to).is_beta() && (from.above() == to || from.right() == to);
}

bool strict_pair(const MixedTableau& t) {
    return is_column_strict(t, Symbol::alpha) && is_row_strict(t, Symbol::beta);
}

ItemResult confluence_item(const MixedTableau& t, std::size_t index, const VerifyOptions& o) {
    ItemResult r;
    const std::string src = serialize(t);
    const auto normal = fully_switch(t);
    if (!strict_pair(normal) || !is_sorted(normal, Symbol::beta))
        r.failures.push_back("normal form not strict and (beta,alpha)-sorted: " + src);
    for (const auto& m : available_switches(normal))
        if (try_switch(normal, m)) {
            r.failures.push_back("normal form still switchable: " + src);
            break;
        }
    for (int s = 0; s < o.strategies; ++s) {
        if (fully_switch(t, SwitchStrategy::random(strategy_seed(o.seed, index, s))) != normal) {
            r.failures.push_back("strategy " + std::to_string(s) + " reaches another normal form: " + src);
            break;
        }
    }
    if (shuffle(t) != normal) r.failures.push_back("shuffle differs from fully_switch: " + src);
    std::vector<MixedTableau> trace;
    const auto e = gg_jdt(t, &trace);
    const MixedTableau* prev = &t;
    for (const auto& step : trace) {
        if (!strict_pair(step)) r.failures.push_back("gg_jdt intermediate not strict: " + src);
        if (!ne_step(*prev, step)) r.failures.push_back("gg_jdt slide is not a single north-east move: " + src);
        prev = &step;
    }
    if (!gg_out_of_order(e).empty()) r.failures.push_back("gg_jdt stopped with an entry out of order: " + src);
    if (switch_to_end(e) != normal) r.failures.push_back("fully_switch(gg_jdt) differs: " + src);
    r.keys.push_back(serialize(normal));
    r.sources.push_back(src);
    return r;
}

std::string bounds_text(const EnumBounds& b) { return std::to_string(b.max_entry); }

}  // namespace

std::uint64_t strategy_seed(std::uint64_t seed, std::size_t input, int s) {
    // splitmix64 finaliser over a simple combination
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(input) + 1) +
                      0xbf58476d1ce4e5b9ULL * static_cast<std::uint64_t>(s);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids{"commute_lemma",  "shuffle_theorem", "uncrowd_image",
                                              "phi_bijection",  "ggjdt_bijection", "switch_confluence"};
    return ids;
}

std::string VerificationReport::to_json(bool include_timing) const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["check_id"] = check_id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = params;
    j["instances_checked"] = instances_checked;
    j["failures"] = failures;
    j["passed"] = passed();
    if (include_timing) j["elapsed_ms"] = elapsed.count();
    return j.dump(2);
}

VerificationReport verify(const std::string& check_id, const VerifyOptions& o) {
    const auto& ids = check_ids();
    if (std::find(ids.begin(), ids.end(), check_id) == ids.end())
        throw std::invalid_argument("unknown check id: " + check_id);

    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.check_id = check_id;
    std::vector<ItemResult> results;

    const bool shape_check = check_id == "ggjdt_bijection" || check_id == "switch_confluence";
    if (shape_check) {
        if (o.shape) {
            report.parameters = {{"outer", o.shape->outer().to_string()}, {"inner", o.shape->inner().to_string()}};
        } else {
            report.parameters = {{"max_outer", std::to_string(o.max_outer)}};
        }
    } else {
        report.parameters = {{"lambda", o.lambda.to_string()},
                             {"n", bounds_text(o.bounds)},
                             {"excess", std::to_string(o.bounds.max_excess)}};
    }

    if (check_id == "ggjdt_bijection") {
        results = parallel_map(shapes_for(o), o.jobs, [](const SkewShape& s, std::size_t) { return ggjdt_shape_item(s); });
    } else if (check_id == "switch_confluence") {
        report.parameters.emplace_back("max_index", std::to_string(o.max_index));
        report.parameters.emplace_back("strategies", std::to_string(o.strategies));
        report.parameters.emplace_back("seed", std::to_string(o.seed));
        std::vector<MixedTableau> inputs;
        for (const auto& s : shapes_for(o))
            for (auto& t : enum_switchable(s, o.max_index)) inputs.push_back(std::move(t));
        results = parallel_map(inputs, o.jobs,
                               [&o](const MixedTableau& t, std::size_t i) { return confluence_item(t, i, o); });
        // distinct inputs of one shape must have distinct normal forms
        std::map<std::string, std::string> seen;
        for (const auto& r : results)
            for (std::size_t k = 0; k < r.keys.size(); ++k) {
                auto [it, fresh] = seen.emplace(r.keys[k], r.sources[k]);
                if (!fresh)
                    report.failures.push_back("two inputs share a normal form: " + it->second + " and " + r.sources[k]);
            }
    } else {
        const auto hvts = enum_hvt(o.lambda, o.bounds);
        if (check_id == "commute_lemma") {
            results = parallel_map(hvts, o.jobs, [](const HookValuedTableau& t, std::size_t) { return commute_item(t); });
        } else if (check_id == "shuffle_theorem") {
            results = parallel_map(hvts, o.jobs, [](const HookValuedTableau& t, std::size_t) { return shuffle_item(t); });
        } else {
            const bool through_jdt = check_id == "phi_bijection";
            results = parallel_map(hvts, o.jobs, [&](const HookValuedTableau& t, std::size_t) {
                return image_item(t, o.lambda, through_jdt);
            });
            std::set<std::string> expected;
            for (const Partition& mu : outer_shapes(o)) {
                const SkewShape skew(mu, o.lambda);
                const auto qs = through_jdt ? enum_exquisite(skew) : enum_biflagged(skew);
                if (qs.empty()) continue;
                for (const auto& p : enum_ssyt(mu, o.bounds.max_entry))
                    for (const auto& q : qs) expected.insert(pair_key(p, q));
            }
            report.parameters.emplace_back("expected_pairs", std::to_string(expected.size()));
            check_image(results, expected, report.failures);
        }
    }

    for (auto& r : results) {
        report.instances_checked += r.count;
        for (auto& f : r.failures) report.failures.push_back(std::move(f));
    }
    std::sort(report.failures.begin(), report.failures.end());
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

}  // namespace hooktab
