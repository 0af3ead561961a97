#ifndef EXL_ERROR_HPP
#define EXL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace exl {

/// Base class for precondition violations and rejected inputs.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A malformed input document. `where` is a JSON pointer or "line N".
class ParseError : public Error {
public:
    ParseError(std::string where, const std::string& what)
        : Error(where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

/// Requested computation exceeds the configured degree cap.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

} // namespace exl

#endif
