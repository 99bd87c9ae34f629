#pragma once

#include <stdexcept>
#include <string>

namespace convdiff {

// Thrown when a direct solve meets a (numerically) singular matrix.
// `pivot` is the offending column/pivot index when known, -1 otherwise.
class singular_system_error : public std::runtime_error {
public:
    singular_system_error(const std::string& what, int pivot_index)
        : std::runtime_error(what), pivot(pivot_index) {}
    int pivot;
};

// Thrown when a series evaluation fails to converge within its term cap.
class truncation_error : public std::runtime_error {
public:
    truncation_error(const std::string& what, double last_term_magnitude)
        : std::runtime_error(what), last_term(last_term_magnitude) {}
    double last_term;
};

} // namespace convdiff
