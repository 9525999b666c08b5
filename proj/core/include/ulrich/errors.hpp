#pragma once

#include <stdexcept>
#include <string>

namespace ulrich {

/// Invalid input: bad generators, malformed graph, violated precondition.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A search exceeded its configured cap and was aborted rather than left to run away.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Colon ideal turned out to be the whole ring; not representable as a proper monomial ideal.
class unit_colon_error : public validation_error {
public:
    unit_colon_error() : validation_error("unit colon: (t^a) : I is the whole ring") {}
};

} // namespace ulrich
