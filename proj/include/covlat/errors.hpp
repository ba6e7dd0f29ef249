#pragma once

#include <stdexcept>
#include <string>

namespace covlat {

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called on an argument that violates its stated precondition.
struct precondition_error : error {
    precondition_error(std::string predicate, const std::string& what)
        : error(predicate + ": " + what), predicate(std::move(predicate)) {}
    std::string predicate;
};

/// A bounded search exhausted its node budget before reaching a decision.
struct budget_error : error {
    explicit budget_error(const std::string& what) : error(what) {}
};

}  // namespace covlat
