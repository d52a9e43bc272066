#pragma once

#include <stdexcept>
#include <string>

namespace drmt {

/// Bad inputs: rejected specs, out-of-domain parameters, malformed configs.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Runtime numerical failures. CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class OverflowError : public NumericalError {
public:
    explicit OverflowError(const std::string& what) : NumericalError(what) {}
};

class NonConvergence : public NumericalError {
public:
    explicit NonConvergence(const std::string& what) : NumericalError(what) {}
};

class PoleHit : public NumericalError {
public:
    explicit PoleHit(const std::string& what) : NumericalError(what) {}
};

class TailUnresolved : public NumericalError {
public:
    explicit TailUnresolved(const std::string& what) : NumericalError(what) {}
};

class StepTooLarge : public NumericalError {
public:
    explicit StepTooLarge(const std::string& what) : NumericalError(what) {}
};

class FitUnstable : public NumericalError {
public:
    explicit FitUnstable(const std::string& what) : NumericalError(what) {}
};

} // namespace drmt
