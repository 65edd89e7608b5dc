#pragma once

#include <stdexcept>
#include <string>

namespace disclab {

// Error classes map one-to-one onto CLI exit codes.
enum class ErrorClass { Input, Inconclusive, Numerical };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), cls_(cls), code_(std::move(code)) {}

    ErrorClass errorClass() const { return cls_; }
    const std::string& code() const { return code_; }

private:
    ErrorClass cls_;
    std::string code_;
};

inline Error domainError(const std::string& what) {
    return Error(ErrorClass::Input, "DomainError", what);
}
inline Error inputError(const std::string& code, const std::string& what) {
    return Error(ErrorClass::Input, code, what);
}
inline Error inconclusive(const std::string& code, const std::string& what) {
    return Error(ErrorClass::Inconclusive, code, what);
}
inline Error numericalFailure(const std::string& code, const std::string& what) {
    return Error(ErrorClass::Numerical, code, what);
}

inline int exitCodeFor(ErrorClass cls) {
    switch (cls) {
    case ErrorClass::Input: return 2;
    case ErrorClass::Inconclusive: return 3;
    case ErrorClass::Numerical: return 4;
    }
    return 4;
}

} // namespace disclab
