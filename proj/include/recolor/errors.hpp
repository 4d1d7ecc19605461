#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace recolor {

// Bad user input or violated precondition. Maps to exit code 2 in the CLI.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Search aborted because a state or time budget was hit. This is a third
// outcome, distinct from "no": callers must never report it as unreachable.
struct budget_exceeded : std::runtime_error {
    budget_exceeded(const std::string& what, std::uint64_t states)
        : std::runtime_error(what), states_visited(states) {}
    std::uint64_t states_visited;
};

// A supposedly-impossible situation; indicates a bug in a construction.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace recolor
