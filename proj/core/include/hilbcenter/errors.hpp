#pragma once

#include <stdexcept>
#include <string>

namespace hilbcenter {

/// Error taxonomy shared by the library and the command line tool.  Each kind
/// maps to a fixed process exit code so scripts can tell user mistakes apart
/// from broken mathematical invariants.
enum class ErrorKind {
  Usage,       ///< malformed command line
  Input,       ///< invalid argument value or input file
  Cap,         ///< a configured enumeration or size cap was exceeded
  Cache,       ///< cache file unreadable, malformed, or checksum mismatch
  Truncation,  ///< graded-space operation would leave the degree window
  Invariant,   ///< a mathematical identity failed; never ignorable
  Internal,
};

int exit_code(ErrorKind kind);
const char* kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct UsageError : Error {
  explicit UsageError(const std::string& w) : Error(ErrorKind::Usage, w) {}
};
struct InputError : Error {
  explicit InputError(const std::string& w) : Error(ErrorKind::Input, w) {}
};
struct CapError : Error {
  explicit CapError(const std::string& w) : Error(ErrorKind::Cap, w) {}
};
struct CacheError : Error {
  explicit CacheError(const std::string& w) : Error(ErrorKind::Cache, w) {}
};
struct TruncationError : Error {
  explicit TruncationError(const std::string& w)
      : Error(ErrorKind::Truncation, w) {}
};
struct InvariantViolation : Error {
  explicit InvariantViolation(const std::string& w)
      : Error(ErrorKind::Invariant, w) {}
};

}  // namespace hilbcenter
