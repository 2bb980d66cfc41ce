#ifndef SEASHELL_ERRORS_HPP
#define SEASHELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace seashell {

// Bad input data or malformed configuration (CLI exit code 2).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation failed numerically, e.g. a singular system (CLI exit code 3).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Certificate refused: the requested guarantee cannot be issued (CLI exit code 4).
class CertificateError : public std::runtime_error {
public:
    explicit CertificateError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace seashell

#endif
