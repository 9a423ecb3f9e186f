#pragma once

#include <cstdint>
#include <string>

#include "clutterlab/error.hpp"

namespace clutterlab {

/// Counts elementary steps of a search and fails loudly once the cap is hit.
/// One instance per query; not shared between threads.
class StepBudget {
public:
    static constexpr std::uint64_t kDefaultSteps = 10'000'000;

    explicit StepBudget(std::uint64_t max_steps = default_steps()) : max_(max_steps) {}

    void charge(std::uint64_t n = 1, const char* what = "search")
    {
        used_ += n;
        if (used_ > max_)
            throw ResourceExceeded(std::string(what) + ": step budget of " + std::to_string(max_) + " exhausted");
    }

    [[nodiscard]] std::uint64_t used() const { return used_; }
    [[nodiscard]] std::uint64_t limit() const { return max_; }

    /// Honors the CLUTTERLAB_BUDGET environment variable when set.
    static std::uint64_t default_steps();

private:
    std::uint64_t max_;
    std::uint64_t used_ = 0;
};

} // namespace clutterlab
