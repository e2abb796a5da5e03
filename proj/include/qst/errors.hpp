#pragma once

#include <stdexcept>
#include <string>

namespace qst {

// Process exit codes used by the CLI; library errors carry one of these.
enum class ErrorCode : int {
    ok = 0,
    parse = 2,
    domain = 3,
    no_convergence = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorCode::domain, what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(ErrorCode::parse, what) {}
};

class NonHermitianError : public DomainError {
public:
    explicit NonHermitianError(const std::string& what) : DomainError(what) {}
};

class NegativeEigenvalueError : public DomainError {
public:
    explicit NegativeEigenvalueError(const std::string& what) : DomainError(what) {}
};

class NonPhysicalStateError : public DomainError {
public:
    explicit NonPhysicalStateError(const std::string& what) : DomainError(what) {}
};

class SingularSetError : public DomainError {
public:
    explicit SingularSetError(const std::string& what) : DomainError(what) {}
};

class DegenerateInputError : public DomainError {
public:
    explicit DegenerateInputError(const std::string& what) : DomainError(what) {}
};

class DegenerateMinorError : public DomainError {
public:
    explicit DegenerateMinorError(const std::string& what) : DomainError(what) {}
};

class ZeroParamsError : public DomainError {
public:
    explicit ZeroParamsError(const std::string& what) : DomainError(what) {}
};

class ZeroTotalError : public DomainError {
public:
    explicit ZeroTotalError(const std::string& what) : DomainError(what) {}
};

class PatternMismatchError : public DomainError {
public:
    explicit PatternMismatchError(const std::string& what) : DomainError(what) {}
};

class MissingCombinationError : public DomainError {
public:
    explicit MissingCombinationError(const std::string& what) : DomainError(what) {}
};

}  // namespace qst
