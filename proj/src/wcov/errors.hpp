#ifndef WCOV_ERRORS_HPP
#define WCOV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wcov {

// Malformed input text. line is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "parse error at line " + std::to_string(line) + ": " + what
                                      : "parse error: " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A documented precondition was violated by the caller.
class ContractError : public std::runtime_error {
public:
    explicit ContractError(const std::string& what) : std::runtime_error("contract violation: " + what) {}
};

// An enumeration or search exceeded its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error("budget exceeded: " + what) {}
};

// Input too large for a brute-force guarded operation.
class GuardExceeded : public std::runtime_error {
public:
    explicit GuardExceeded(const std::string& what) : std::runtime_error("size guard exceeded: " + what) {}
};

// The structural decomposition found no applicable case. Either the input is
// outside the declared graph class or a recognizer failed; the offending
// subgraph is attached in edge-list form for diagnosis.
class DecompositionFailed : public std::runtime_error {
public:
    DecompositionFailed(const std::string& what, std::string residual_edge_list)
        : std::runtime_error("decomposition failed: " + what), residual_(std::move(residual_edge_list)) {}
    const std::string& residual_edge_list() const { return residual_; }

private:
    std::string residual_;
};

}  // namespace wcov

#endif
