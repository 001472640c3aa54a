#pragma once

#include <stdexcept>
#include <string>

namespace dnacodex {

// Construction refused on mathematical grounds (even length, broken divisor
// chain, parameter outside the supported family range). The CLI maps this to
// exit code 2.
class DomainRefusal : public std::invalid_argument {
public:
    explicit DomainRefusal(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration would exceed the configured codeword budget.
class BudgetExceeded : public DomainRefusal {
public:
    explicit BudgetExceeded(const std::string& what) : DomainRefusal(what) {}
};

class ParseError : public DomainRefusal {
public:
    explicit ParseError(const std::string& what) : DomainRefusal(what) {}
};

}  // namespace dnacodex
