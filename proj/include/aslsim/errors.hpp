#pragma once

#include <stdexcept>
#include <string>

namespace aslsim {

/// Invalid material/geometry parameters (non-finite stamps etc.)
class ParameterError : public std::runtime_error {
public:
    explicit ParameterError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Netlist cannot be assembled (floating subgraph, bad node refs).
class AssemblyError : public std::runtime_error {
public:
    explicit AssemblyError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Linear solve failed or is untrustworthy (ill-conditioned, bad residual).
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& msg, double rcond_estimate)
        : std::runtime_error(msg), rcond(rcond_estimate) {}
    double rcond;
};

/// Gate/adder construction rejected (even-k MAJ, unbalanced paths, ...).
class LayoutError : public std::runtime_error {
public:
    explicit LayoutError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Infeasible window or inconsistent pulse schedule.
class ScheduleError : public std::runtime_error {
public:
    explicit ScheduleError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A magnet that must not switch would switch within the applied pulse.
class ProtocolViolation : public std::runtime_error {
public:
    explicit ProtocolViolation(const std::string& msg) : std::runtime_error(msg) {}
};

/// Config or netlist file rejected; message carries file:line context.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Requested delay for a non-switching drive (I_s <= 0).
class NoSwitchingDrive : public std::runtime_error {
public:
    explicit NoSwitchingDrive(const std::string& msg) : std::runtime_error(msg) {}
};

/// LLGS integration produced NaN or failed to make progress.
class IntegrationError : public std::runtime_error {
public:
    explicit IntegrationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace aslsim
