#pragma once

#include <stdexcept>
#include <string>

namespace klreg {

enum class ErrorKind {
    Parse,
    Validation,
    Range,
    Pattern,
    Incomparable,
    Containment,
    MoveNotApplicable,
    Structure,
    InconsistentConstraints,
    Construction,
    Pairing,
    Infeasible,
    Membership,
    Resource,
};

const char* error_kind_name(ErrorKind k) noexcept;

// Base of every exception raised by the library; the kind drives CLI exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& w) : Error(ErrorKind::Parse, w) {}
};
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& w) : Error(ErrorKind::Validation, w) {}
};
class RangeError : public Error {
public:
    explicit RangeError(const std::string& w) : Error(ErrorKind::Range, w) {}
};
class PatternError : public Error {
public:
    explicit PatternError(const std::string& w) : Error(ErrorKind::Pattern, w) {}
};
class IncomparableError : public Error {
public:
    explicit IncomparableError(const std::string& w) : Error(ErrorKind::Incomparable, w) {}
};
class ContainmentError : public Error {
public:
    explicit ContainmentError(const std::string& w) : Error(ErrorKind::Containment, w) {}
};
class MoveError : public Error {
public:
    explicit MoveError(const std::string& w) : Error(ErrorKind::MoveNotApplicable, w) {}
};
class StructureError : public Error {
public:
    explicit StructureError(const std::string& w) : Error(ErrorKind::Structure, w) {}
};
class ConstraintError : public Error {
public:
    explicit ConstraintError(const std::string& w) : Error(ErrorKind::InconsistentConstraints, w) {}
};
class ConstructionError : public Error {
public:
    explicit ConstructionError(const std::string& w) : Error(ErrorKind::Construction, w) {}
};
class PairingError : public Error {
public:
    explicit PairingError(const std::string& w) : Error(ErrorKind::Pairing, w) {}
};
class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& w) : Error(ErrorKind::Infeasible, w) {}
};
class MembershipError : public Error {
public:
    explicit MembershipError(const std::string& w) : Error(ErrorKind::Membership, w) {}
};

// Raised when an enumeration exceeds its diagram budget; carries what was seen so far.
class ResourceError : public Error {
public:
    ResourceError(const std::string& w, std::size_t explored)
        : Error(ErrorKind::Resource, w), explored_(explored) {}
    std::size_t explored() const noexcept { return explored_; }

private:
    std::size_t explored_;
};

}  // namespace klreg
