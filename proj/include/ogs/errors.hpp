#ifndef ogs_errors_hpp
#define ogs_errors_hpp

#include <stdexcept>
#include <string>

namespace ogs {

// Invalid input: malformed index sets, out-of-region roots, precondition
// violations. The CLI maps this to exit code 2.
struct validation_error : std::invalid_argument {
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// A computation refused because it would exceed a configured size or node
// budget. The CLI maps this to exit code 3.
struct guardrail_error : std::runtime_error {
    explicit guardrail_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ogs

#endif
