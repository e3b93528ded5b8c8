#ifndef VNDN_UTIL_ERRORS_HPP
#define VNDN_UTIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vndn {

/// Error categories map one-to-one onto process exit codes.
enum class ErrorCode : int {
  kUsage = 2,      // bad command line
  kValidation = 3, // bad config or input file
  kRuntime = 4,    // I/O failure or internal invariant breach
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what)
    , m_code(code)
  {
  }

  ErrorCode
  code() const noexcept
  {
    return m_code;
  }

  int
  exitCode() const noexcept
  {
    return static_cast<int>(m_code);
  }

private:
  ErrorCode m_code;
};

struct UsageError : Error {
  explicit UsageError(const std::string& what)
    : Error(ErrorCode::kUsage, what)
  {
  }
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& what)
    : Error(ErrorCode::kValidation, what)
  {
  }
};

struct RuntimeFailure : Error {
  explicit RuntimeFailure(const std::string& what)
    : Error(ErrorCode::kRuntime, what)
  {
  }
};

} // namespace vndn

#endif // VNDN_UTIL_ERRORS_HPP
