#ifndef MDM_ERROR_HPP_INCLUDED
#define MDM_ERROR_HPP_INCLUDED

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mdm
{
/// Base of every error the registry raises.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, or 0 when the input was a single token.
class SyntaxError : public Error
{
public:
    explicit SyntaxError(const std::string& message, std::size_t line = 0)
    : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), message_(message), line_(line)
    {}

    std::size_t line() const noexcept
    {
        return line_;
    }

    /// The message without the line prefix.
    const std::string& message() const noexcept
    {
        return message_;
    }

private:
    std::string message_;
    std::size_t line_;
};

class VocabularyError : public Error
{
public:
    using Error::Error;
};

class NotFoundError : public Error
{
public:
    using Error::Error;
};

class NotACatalogError : public Error
{
public:
    using Error::Error;
};

class IoError : public Error
{
public:
    IoError(const std::string& message, std::string path)
    : Error(path + ": " + message), path_(std::move(path))
    {}

    const std::string& path() const noexcept
    {
        return path_;
    }

private:
    std::string path_;
};
} // namespace mdm

#endif // MDM_ERROR_HPP_INCLUDED
