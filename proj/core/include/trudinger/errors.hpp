// Error taxonomy shared by all components, plus the CLI exit-code mapping.

#ifndef TRUDINGER_ERRORS_HPP
#define TRUDINGER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trudinger {

// Exit-code contract: 0 pass, 1 check-failure, 2 invalid-input, 3 divergence.
enum class ExitCode : int { ok = 0, check_failure = 1, invalid_input = 2, divergence = 3 };

class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Precondition on the mathematical domain violated (r <= 0, point off P_T, ...).
class DomainViolation : public std::domain_error {
public:
    explicit DomainViolation(const std::string& what) : std::domain_error(what) {}
};

// A barrier family was requested outside its exponent regime (sec. 5 needs p>n, ...).
class WrongRegime : public InvalidInput {
public:
    explicit WrongRegime(const std::string& what) : InvalidInput(what) {}
};

class UnsupportedDomain : public InvalidInput {
public:
    explicit UnsupportedDomain(const std::string& what) : InvalidInput(what) {}
};

// The eps-hat dyadic ladder of the scaled super-solution construction ran out.
class MarginSearchFailure : public std::runtime_error {
public:
    explicit MarginSearchFailure(const std::string& what) : std::runtime_error(what) {}
};

class PositivityViolation : public std::runtime_error {
public:
    explicit PositivityViolation(const std::string& what) : std::runtime_error(what) {}
};

class RejectedStep : public std::runtime_error {
public:
    explicit RejectedStep(const std::string& what) : std::runtime_error(what) {}
};

class Divergence : public std::runtime_error {
public:
    Divergence(const std::string& what, long step) : std::runtime_error(what), step_index(step) {}
    long step_index;
};

// Requested an analytic jet inside the guard band around a piece seam or the
// t = s ridge; callers must use ridge checks there instead.
class OnRidge : public std::runtime_error {
public:
    explicit OnRidge(const std::string& what) : std::runtime_error(what) {}
};

inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const Divergence*>(&e)) return static_cast<int>(ExitCode::divergence);
    return static_cast<int>(ExitCode::invalid_input);
}

} // namespace trudinger

#endif
