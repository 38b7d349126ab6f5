#ifndef IDCAP_CLI_H_
#define IDCAP_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace idcap {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

// Entry point shared by the idcap binary and the tests. `args` excludes the
// program name. Verbs: evaluate, sensitivity, fitb-score, parse-tuples.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idcap

#endif  // IDCAP_CLI_H_
