#pragma once

#include <stdexcept>
#include <string>

namespace cuboid {

class ZeroDenominator : public std::domain_error {
public:
    ZeroDenominator() : std::domain_error("zero denominator") {}
    explicit ZeroDenominator(const std::string& what) : std::domain_error(what) {}
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class MissingAssignment : public std::out_of_range {
public:
    explicit MissingAssignment(const std::string& var)
        : std::out_of_range("no value assigned to variable '" + var + "'"), var_(var) {}
    const std::string& variable() const noexcept { return var_; }

private:
    std::string var_;
};

// Parameter values excluded by a case parametrization.
enum class Restriction { ZeroParameter, CEqualsZero, CEqualsOne, CEqualsTwo };

class DomainRestriction : public std::domain_error {
public:
    DomainRestriction(Restriction r, const std::string& what)
        : std::domain_error(what), restriction_(r) {}
    Restriction restriction() const noexcept { return restriction_; }

private:
    Restriction restriction_;
};

class IoFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cuboid
