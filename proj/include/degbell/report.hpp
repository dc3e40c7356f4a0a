#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "degbell/poly.hpp"
#include "degbell/rational.hpp"

namespace degbell {

/// One grid point where the two sides disagreed. Both sides are kept whole.
struct Failure {
    std::vector<std::pair<std::string, std::string>> params;
    Poly lhs;
    Poly rhs;
};

/// Outcome of checking one identity over a parameter grid. Failures are in
/// the order the grid was walked, which is fixed for a given grid.
struct VerificationReport {
    std::string identity;
    std::vector<std::pair<std::string, long>> bounds;
    std::vector<ExactRational> lambdas;
    std::size_t checked = 0;
    std::vector<Failure> failures;
    std::chrono::duration<double> elapsed{0};

    bool passed() const { return failures.empty(); }

    /// Records one comparison; appends a failure when lhs != rhs.
    void expect_equal(std::vector<std::pair<std::string, std::string>> params, const Poly& lhs,
                      const Poly& rhs) {
        ++checked;
        if (lhs != rhs) failures.push_back({std::move(params), lhs, rhs});
    }
};

}  // namespace degbell
