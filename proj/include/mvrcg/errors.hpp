#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvrcg/vertex_set.hpp"

namespace mvrcg {

class GraphFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PartiallyDirectedCycle : public std::runtime_error {
public:
    PartiallyDirectedCycle(std::vector<VertexId> cycle, const std::string& what)
        : std::runtime_error(what), cycle_(std::move(cycle)) {}

    /// Closed walk v0, v1, ..., v0 following edge directions; bidirected steps may go either way.
    const std::vector<VertexId>& cycle() const { return cycle_; }

private:
    std::vector<VertexId> cycle_;
};

class DisjointnessViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, std::size_t value, std::size_t cap)
        : std::runtime_error(what + " (" + std::to_string(value) + " > cap " + std::to_string(cap) + ")") {}
};

class NotADag : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotAncestrallyClosed : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class HasChildInA : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InconsistentOrder : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class VerticesAdjacent : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotAncestral : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an emitted factorization block fails the head test; indicates a bug.
class HeadTestFailed : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace mvrcg
