#pragma once

#include <stdexcept>
#include <string>

namespace ipc {

// Malformed input text. `line` is 1-based, 0 when not attributable to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    [[nodiscard]] int line() const { return line_; }

private:
    int line_;
};

// A claimed vertex numbering breaks "i < j < k and ik in E implies jk in E".
class OrderingViolation : public std::runtime_error {
public:
    OrderingViolation(int i, int j, int k)
        : std::runtime_error("ordering violation: " + std::to_string(i) + " < " + std::to_string(j) +
                             " < " + std::to_string(k) + " with edge " + std::to_string(i) + "-" +
                             std::to_string(k) + " but no edge " + std::to_string(j) + "-" +
                             std::to_string(k)),
          i_(i), j_(j), k_(k) {}
    [[nodiscard]] int i() const { return i_; }
    [[nodiscard]] int j() const { return j_; }
    [[nodiscard]] int k() const { return k_; }

private:
    int i_, j_, k_;
};

// Raised by the cover engine when a post-step state check fails. Never expected on valid input.
class InternalInvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ipc
