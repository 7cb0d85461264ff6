#ifndef RAMLAB_ERRORS_HPP
#define RAMLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ramlab {

// Invalid mathematical input (bad preconditions, malformed data).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A family builder was asked for a combination it does not support.
class UnsupportedFamilyError : public DomainError {
public:
    explicit UnsupportedFamilyError(const std::string& msg) : DomainError(msg) {}
};

// A quantity could not be determined at the current series precision.
// Callers may retry at higher precision.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A desk-scale cap was exceeded (field size, census degree, ...).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two independent computations of the same quantity disagreed.
class InternalInconsistencyError : public std::runtime_error {
public:
    explicit InternalInconsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ramlab

#endif
