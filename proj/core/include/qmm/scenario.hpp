#ifndef QMM_SCENARIO_HPP
#define QMM_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "qmm/fedosov.hpp"
#include "qmm/json_io.hpp"
#include "qmm/symplectic_action.hpp"
#include "qmm/two_form.hpp"

namespace qmm
{

struct FedosovSettings
{
    std::optional<int> weyl_order;
    std::vector<std::pair<WeylKey, Polynomial>> s_terms;
    NormalizationBound normalization = NormalizationBound::w3;
};

struct Scenario
{
    std::string name;
    SymplecticAction action;
    std::optional<std::vector<Polynomial>> momentum;
    TwoFormSeries omega;
    std::optional<FedosovSettings> fedosov;
    int order = 4;
    int degree = 4;
    std::vector<std::string> stages;

    const PhaseSpace &space() const { return action.space(); }
    const LieAlgebra &algebra() const { return action.algebra(); }
    // Fedosov when the scenario configures it or carries a nonzero Omega.
    bool uses_fedosov() const;
};

// Command-line overrides, applied before validation.
struct ScenarioOverrides
{
    std::optional<Convention> convention;
    std::optional<int> order;
    std::optional<int> weyl_order;
    std::optional<int> degree;
};

// Throws ParseError (with line/column or JSON key path) for malformed
// input and InvariantViolation (with key path) for inadmissible data.
Scenario load_scenario(const std::string &path, const ScenarioOverrides &overrides = {});
Scenario parse_scenario(const std::string &text, const ScenarioOverrides &overrides = {});
Scenario scenario_from_json(const Json &j, const ScenarioOverrides &overrides = {});

} // namespace qmm

#endif
