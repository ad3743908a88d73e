#pragma once

#include <stdexcept>
#include <string>

namespace graycode {

enum class errc {
  malformed_text,
  invariant_violation,
  duplicate_object,
  mixed_sizes,
  inapplicable_flip,
  size_mismatch,
  empty_instance,
  not_continuous,
  kind_mismatch,
  bad_indices,
  bound_exceeded,
  io_failure,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::malformed_text: return "MalformedText";
    case errc::invariant_violation: return "InvariantViolation";
    case errc::duplicate_object: return "DuplicateObject";
    case errc::mixed_sizes: return "MixedSizes";
    case errc::inapplicable_flip: return "InapplicableFlip";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::empty_instance: return "EmptyInstance";
    case errc::not_continuous: return "NotContinuous";
    case errc::kind_mismatch: return "KindMismatch";
    case errc::bad_indices: return "BadIndices";
    case errc::bound_exceeded: return "BoundExceeded";
    case errc::io_failure: return "IoFailure";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace graycode
