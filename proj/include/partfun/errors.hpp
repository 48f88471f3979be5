#ifndef PARTFUN_ERRORS_HPP
#define PARTFUN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace partfun {

// Base of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid input from the caller (CLI exit code 2).
class UsageError : public Error {
public:
    using Error::Error;
};

// A cross-check between two exact computation routes failed, or a value
// proved rational turned out not to be (CLI exit code 1).
class AuditError : public Error {
public:
    using Error::Error;
};

class EmptyTupleError : public UsageError {
public:
    EmptyTupleError() : UsageError("tuple must be a non-empty list of positive integers") {}
    explicit EmptyTupleError(const std::string& what) : UsageError(what) {}
};

class NotCommonMultipleError : public UsageError {
public:
    explicit NotCommonMultipleError(const std::string& what) : UsageError(what) {}
};

class LevelMismatchError : public UsageError {
public:
    explicit LevelMismatchError(const std::string& what) : UsageError(what) {}
};

class NotRationalError : public AuditError {
public:
    explicit NotRationalError(const std::string& what) : AuditError(what) {}
};

class NotARootError : public UsageError {
public:
    explicit NotARootError(const std::string& what) : UsageError(what) {}
};

class NotAWaveIndexError : public UsageError {
public:
    explicit NotAWaveIndexError(const std::string& what) : UsageError(what) {}
};

class NotPairwiseCoprimeError : public UsageError {
public:
    explicit NotPairwiseCoprimeError(const std::string& what) : UsageError(what) {}
};

class GcdNotOneError : public UsageError {
public:
    explicit GcdNotOneError(const std::string& what) : UsageError(what) {}
};

class IndexOutOfRangeError : public UsageError {
public:
    explicit IndexOutOfRangeError(const std::string& what) : UsageError(what) {}
};

class BadIndexError : public UsageError {
public:
    explicit BadIndexError(const std::string& what) : UsageError(what) {}
};

} // namespace partfun

#endif
