#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace vmchain {

// Bad argument value (vertex out of range, mask outside the host graph, ...).
struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A documented operation precondition does not hold (pivot on a non-edge,
// reducing a graph that is not in the requested class, ...).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation is undefined for the given input (contraction of an isolated
// vertex), as opposed to merely failing a precondition check.
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured cap (orbit size, subset-sweep order, search states) was hit.
// Deliberately distinct from a negative answer.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    std::size_t byte_offset;
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
};

// Rejection sampling ran out of attempts before the filter accepted.
struct generation_error : std::runtime_error {
    std::uint64_t rejects;
    generation_error(const std::string& what, std::uint64_t rejected)
        : std::runtime_error(what), rejects(rejected) {}
};

// A search came up empty inside a regime where a structure theorem guarantees
// success. Never swallowed: the report carries the instance and the full
// trial log so the event can be reproduced.
struct theorem_violation : std::runtime_error {
    std::string report_json;
    theorem_violation(const std::string& what, std::string report)
        : std::runtime_error(what), report_json(std::move(report)) {}
};

}  // namespace vmchain
