#ifndef POLYWEIGHT_ERRORS_HPP
#define POLYWEIGHT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyweight {

/// Operands belong to different coefficient fields.
class FieldMismatchError : public std::invalid_argument {
   public:
    explicit FieldMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// A requested enumeration or construction exceeds the configured budget.
class CapacityError : public std::runtime_error {
   public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Parameters fall outside the regime in which the requested result is valid
/// (e.g. degree not smaller than the characteristic).
class UnsupportedRegimeError : public std::domain_error {
   public:
    explicit UnsupportedRegimeError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace polyweight

#endif
