#ifndef IDCAP_ERROR_H_
#define IDCAP_ERROR_H_

#include <stdexcept>
#include <string>

namespace idcap {

enum class ErrorCode {
  kParseError,
  kDuplicateVideosetId,
  kEmptyCorpus,
  kLengthMismatch,
  kMalformedTuple,
  kNoIdentities,
  kMissingPredictions,
  kInvariantViolation,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

  // Input errors map to exit status 2, invariant violations to 3.
  bool is_input_error() const { return code_ != ErrorCode::kInvariantViolation; }

 private:
  ErrorCode code_;
};

}  // namespace idcap

#endif  // IDCAP_ERROR_H_
