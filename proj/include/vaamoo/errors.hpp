// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace vaamoo {

// Argument outside a model's domain (negative speed, zero distance, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Array with no radiating element in the requested direction.
class ZeroPatternError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateDirectionError : public DomainError {
public:
    using DomainError::DomainError;
};

// Scenario layout cannot be realised (e.g. d_min too large for the region).
class InfeasibleGeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InfeasibleLegError : public DomainError {
public:
    using DomainError::DomainError;
};

class SpeedInfeasibleError : public DomainError {
public:
    using DomainError::DomainError;
};

class DegenerateBroadcastError : public DomainError {
public:
    using DomainError::DomainError;
};

// Solution whose shape or discrete parts do not match the scenario.
class InvalidSolutionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed scenario/solution document. `path` names the offending field.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(std::move(path)) {}

    [[nodiscard]] const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace vaamoo
