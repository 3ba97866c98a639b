#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace majority {

using Vertex = int;
using Color = int;

enum class ErrorKind {
    cyclic_input,
    partial_coloring,
    instance_too_large,
    precolored_non_sink,
    odd_dicycle,
    monochromatic_list_odd_dicycle,
    bad_partition,
    chromatic_too_high_or_unknown,
    precondition_violated,
    component_too_hard,
    param_out_of_range,
    degree_too_low,
    coverage_failure,
    malformed_edge,
    generation_failed,
    parse_error,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. Carries a kind for dispatch and,
/// where one exists, a witness (a directed cycle, a vertex list, ...).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::vector<Vertex> witness = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind),
          witness_(std::move(witness))
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<Vertex>& witness() const noexcept { return witness_; }

private:
    ErrorKind kind_;
    std::vector<Vertex> witness_;
};

} // namespace majority
