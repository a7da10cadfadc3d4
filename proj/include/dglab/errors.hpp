#ifndef DGLAB_ERRORS_HPP
#define DGLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dglab {

// Exit-code families used by the CLI: config=2, solver=3, probe=4, report=5.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};
struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& m) : std::runtime_error(m) {}
};
struct ProbeError : std::runtime_error {
    explicit ProbeError(const std::string& m) : std::runtime_error(m) {}
};
struct ReportError : std::runtime_error {
    explicit ReportError(const std::string& m) : std::runtime_error(m) {}
};

struct BallExceedsDomain : ProbeError {
    explicit BallExceedsDomain(const std::string& m) : ProbeError("BallExceedsDomain: " + m) {}
};
struct CylinderExceedsDomain : ProbeError {
    explicit CylinderExceedsDomain(const std::string& m) : ProbeError("CylinderExceedsDomain: " + m) {}
};
struct EnlargementExceedsDomain : ProbeError {
    explicit EnlargementExceedsDomain(const std::string& m) : ProbeError("EnlargementExceedsDomain: " + m) {}
};
struct DegenerateMeasure : ProbeError {
    explicit DegenerateMeasure(const std::string& m) : ProbeError("DegenerateMeasure: " + m) {}
};
struct SupportViolation : ProbeError {
    explicit SupportViolation(const std::string& m) : ProbeError("SupportViolation: " + m) {}
};
struct DegenerateGap : ProbeError {
    explicit DegenerateGap(const std::string& m) : ProbeError("DegenerateGap: " + m) {}
};
struct SingularStep : SolverError {
    explicit SingularStep(const std::string& m) : SolverError("SingularStep: " + m) {}
};
struct SingularGlobalSystem : SolverError {
    explicit SingularGlobalSystem(const std::string& m) : SolverError("SingularGlobalSystem: " + m) {}
};
struct StripTooWide : SolverError {
    explicit StripTooWide(const std::string& m) : SolverError("StripTooWide: " + m) {}
};
struct NonPartitioned : ConfigError {
    explicit NonPartitioned(const std::string& m) : ConfigError("NonPartitioned: " + m) {}
};
struct EmptyTargetSet : ProbeError {
    explicit EmptyTargetSet(const std::string& m) : ProbeError("EmptyTargetSet: " + m) {}
};
struct EmptySet : ProbeError {
    explicit EmptySet(const std::string& m) : ProbeError("EmptySet: " + m) {}
};
struct NegativeSolution : ProbeError {
    explicit NegativeSolution(const std::string& m) : ProbeError("NegativeSolution: " + m) {}
};
struct PreconditionUnmet : ProbeError {
    explicit PreconditionUnmet(const std::string& m) : ProbeError("PreconditionUnmet: " + m) {}
};
struct ProbeInadmissible : ProbeError {
    explicit ProbeInadmissible(const std::string& m) : ProbeError("ProbeInadmissible: " + m) {}
};
struct ScenarioMissing : ReportError {
    explicit ScenarioMissing(const std::string& m) : ReportError("ScenarioMissing: " + m) {}
};

} // namespace dglab

#endif
