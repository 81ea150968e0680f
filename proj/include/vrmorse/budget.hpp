// Resource guard shared by everything that materializes simplices.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vrmorse {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Budget {
    std::size_t limit = 2'000'000;
    std::size_t used = 0;

    void charge(std::size_t k = 1) {
        used += k;
        if (used > limit)
            throw BudgetError("simplex budget exceeded (limit " +
                              std::to_string(limit) + ")");
    }
};

}  // namespace vrmorse
