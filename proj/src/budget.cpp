#include "clutterlab/budget.hpp"

#include <cstdlib>
#include <string>

namespace clutterlab {

std::uint64_t StepBudget::default_steps()
{
    if (const char* env = std::getenv("CLUTTERLAB_BUDGET")) {
        try {
            const auto v = std::stoull(env);
            if (v > 0)
                return v;
        } catch (const std::exception&) {
        }
    }
    return kDefaultSteps;
}

} // namespace clutterlab
