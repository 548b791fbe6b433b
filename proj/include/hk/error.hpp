#pragma once

#include <stdexcept>
#include <string>

namespace hk {

/// Machine-checkable failure categories, mapped to CLI exit codes by
/// exit_code_for().
enum class Errc {
  input,
  not_type_a,
  too_small,
  not_forest,
  bad_orientation,
  unsupported_block,
  not_source_or_sink,
  not_multiplicity_free,
  not_complete,
  cap_exceeded,
  limit_exceeded,
  unstable,
  has_cycle,
  not_full_content,
  table_incomplete,
  not_path_complete,
  bad_gluing,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

/// Exit-code convention: 0 ok, 2 mismatch/non-effective, 3 cap or limit
/// exhausted, 4 bad input. Codes 2 and 0 are decided by the commands
/// themselves; exceptions map to 3 or 4.
inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::cap_exceeded:
    case Errc::limit_exceeded:
    case Errc::unstable:
      return 3;
    default:
      return 4;
  }
}

}  // namespace hk
