#pragma once

#include <stdexcept>
#include <string>

namespace zdl {

// Invalid argument or violated precondition (bad K, |z| >= 1, caustic point, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A numerical routine failed to converge or produced an inconsistent result.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration budget exceeded.
class BudgetError : public std::length_error {
public:
    explicit BudgetError(const std::string& what) : std::length_error(what) {}
};

}  // namespace zdl
