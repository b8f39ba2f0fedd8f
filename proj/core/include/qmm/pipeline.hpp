#ifndef QMM_PIPELINE_HPP
#define QMM_PIPELINE_HPP

#include <set>
#include <string>
#include <vector>

#include "qmm/json_io.hpp"
#include "qmm/scenario.hpp"

namespace qmm
{

// Stages in dependency order.
const std::vector<std::string> &pipeline_stages();

struct PipelineOptions
{
    std::set<std::string> stages;                           // run in dependency order
    std::set<std::string> targets = {"g", "gtilde", "ghat"}; // quantize targets
    bool expect_exists = false;
    bool fedosov_identities = true; // D^2 = 0 and Taylor checks in the fedosov stage
};

struct Report
{
    Json data;
    std::vector<std::string> lines;
    bool violation = false;
    bool no_existence = false;
    std::string failed_stage; // stage that raised an error, if any
    std::string error;

    // 0 all pass, 1 violation (or a negative existence verdict under
    // expect_exists).
    int exit_code(bool expect_exists) const;
    std::string to_json() const;
    std::string to_text() const;
};

// Smallest N_W that covers every product the pipeline forms.
int default_weyl_order(const Scenario &scenario);

Report run_pipeline(const Scenario &scenario, const PipelineOptions &options);

} // namespace qmm

#endif
