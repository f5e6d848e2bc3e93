#include "hilbcenter/errors.hpp"

namespace hilbcenter {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage:
      return 2;
    case ErrorKind::Input:
      return 3;
    case ErrorKind::Cap:
      return 4;
    case ErrorKind::Cache:
      return 3;  // bad cache file is bad input, just from an earlier run
    case ErrorKind::Truncation:
      return 3;
    case ErrorKind::Invariant:
      return 5;
    case ErrorKind::Internal:
      return 1;
  }
  return 1;
}

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage:
      return "usage";
    case ErrorKind::Input:
      return "input";
    case ErrorKind::Cap:
      return "cap";
    case ErrorKind::Cache:
      return "cache";
    case ErrorKind::Truncation:
      return "truncation";
    case ErrorKind::Invariant:
      return "invariant";
    case ErrorKind::Internal:
      return "internal";
  }
  return "internal";
}

}  // namespace hilbcenter
