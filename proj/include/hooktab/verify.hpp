#ifndef HOOKTAB_VERIFY_HPP
#define HOOKTAB_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hooktab/enumeration.hpp"

namespace hooktab {

struct VerificationReport {
    std::string check_id;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::size_t instances_checked = 0;
    std::vector<std::string> failures;  // sorted
    std::chrono::milliseconds elapsed{0};

    bool passed() const noexcept { return failures.empty(); }
    /// JSON object with "schema": 1. Timing is left out when
    /// include_timing is false so that reports can be byte-compared.
    std::string to_json(bool include_timing = true) const;
};

struct VerifyOptions {
    Partition lambda;
    EnumBounds bounds;
    /// ggjdt_bijection / switch_confluence: a single shape, or every shape
    /// with |outer| <= max_outer when unset.
    std::optional<SkewShape> shape;
    int max_outer = 6;
    int max_index = 4;     // switch_confluence index range 1..max_index
    int strategies = 100;  // random switch orders per input
    std::uint64_t seed = 0;
    int jobs = 1;
};

/// commute_lemma, shuffle_theorem, uncrowd_image, phi_bijection,
/// ggjdt_bijection, switch_confluence.
const std::vector<std::string>& check_ids();

/// Throws std::invalid_argument on an unknown check id.
VerificationReport verify(const std::string& check_id, const VerifyOptions& options);

/// Seed of random strategy `s` applied to input number `input`.
std::uint64_t strategy_seed(std::uint64_t seed, std::size_t input, int s);

}  // namespace hooktab

#endif  // HOOKTAB_VERIFY_HPP
