#ifndef SOFTTOPO_ERROR_HPP
#define SOFTTOPO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace softtopo {

/// Thrown on contract violations: unknown names, mismatched contexts,
/// topology axiom failures, preconditions. The message identifies the
/// offending token or witness.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace softtopo

#endif
