#ifndef INFRANIL_ERRORS_HPP
#define INFRANIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace infranil {

// Exit-code classes used by the CLI: 2 parse, 3 domain precondition,
// 4 certification failure.
enum class ErrorClass : int {
    Parse = 2,
    Domain = 3,
    Certification = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string tag, const std::string& message)
        : std::runtime_error(message), cls_(cls), tag_(std::move(tag)) {}

    ErrorClass error_class() const { return cls_; }
    const std::string& tag() const { return tag_; }

private:
    ErrorClass cls_;
    std::string tag_;
};

// Malformed input documents (bad rationals, non-square matrices, ...).
class ParseError : public Error {
public:
    ParseError(std::string tag, const std::string& message)
        : Error(ErrorClass::Parse, std::move(tag), message) {}
};

// Violated operation preconditions: NotHyperbolic, EigenvalueOne,
// NonIntegerAverage, MissingLfPlus, NotNilpotent, NilpotentInput, ...
class DomainError : public Error {
public:
    DomainError(std::string tag, const std::string& message)
        : Error(ErrorClass::Domain, std::move(tag), message) {}
};

// A certification loop that cannot conclude: ValidationFailed,
// LemmaViolation, inconsistent reports.
class CertificationError : public Error {
public:
    CertificationError(std::string tag, const std::string& message)
        : Error(ErrorClass::Certification, std::move(tag), message) {}
};

}  // namespace infranil

#endif
