// Command-line front end: loads a scenario and runs pipeline stages on it.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qmm/errors.hpp"
#include "qmm/pipeline.hpp"
#include "qmm/scenario.hpp"

namespace
{

constexpr int exit_input_error = 2;

struct CommonFlags
{
    std::string file;
    std::optional<int> order;
    std::optional<int> weyl_order;
    std::optional<int> degree;
    std::optional<std::string> convention;
    bool expect_exists = false;
    std::string format = "text";
};

void add_common(CLI::App *cmd, CommonFlags &flags)
{
    cmd->add_option("file", flags.file, "Scenario JSON file")->required();
    cmd->add_option("--order", flags.order, "Truncation order N in hbar")->check(CLI::NonNegativeNumber);
    cmd->add_option("--weyl-order", flags.weyl_order, "Fedosov total-degree truncation N_W")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--degree", flags.degree, "Monomial degree bound D for identity checks")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--convention", flags.convention, "Star product convention")
        ->check(CLI::IsMember({"real_half", "minus_i_half"}));
    cmd->add_flag("--expect-exists", flags.expect_exists, "Exit 1 when an existence solver answers No");
    cmd->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact momentum-map and deformation-quantization checks on symplectic vector spaces"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string target = "g";
    bool fedosov_check = false;

    auto *validate = app.add_subcommand("validate", "Load a scenario and re-check its invariants");
    auto *momentum = app.add_subcommand("momentum", "Validate or solve the classical momentum map");
    auto *classify = app.add_subcommand("classify", "Compute Sigma and classify equivariance");
    auto *quantize = app.add_subcommand("quantize", "Run the quantum existence solvers");
    auto *fedosov = app.add_subcommand("fedosov", "Build the Fedosov connection and check its identities");
    auto *report = app.add_subcommand("report", "Run every stage and print the full report");
    for (auto *cmd : {validate, momentum, classify, quantize, fedosov, report}) {
        add_common(cmd, flags);
    }
    quantize->add_option("--target", target, "Algebra to quantize on")
        ->check(CLI::IsMember({"g", "gtilde", "ghat"}));
    fedosov->add_flag("--check", fedosov_check, "Verify the structure equation, D^2 = 0 and invariance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input_error;
    }

    qmm::ScenarioOverrides overrides;
    overrides.order = flags.order;
    overrides.weyl_order = flags.weyl_order;
    overrides.degree = flags.degree;
    if (flags.convention) {
        overrides.convention = qmm::convention_from_string(*flags.convention);
    }

    std::optional<qmm::Scenario> scenario;
    try {
        scenario.emplace(qmm::load_scenario(flags.file, overrides));
    } catch (const qmm::Error &e) {
        std::cerr << "error: " << flags.file << ": " << e.what() << "\n";
        return exit_input_error;
    }

    qmm::PipelineOptions options;
    options.expect_exists = flags.expect_exists;
    if (validate->parsed()) {
        options.stages = {"validate"};
    } else if (momentum->parsed()) {
        options.stages = {"validate", "momentum"};
    } else if (classify->parsed()) {
        options.stages = {"validate", "momentum", "classify", "extend"};
    } else if (quantize->parsed()) {
        options.stages = {"validate", "momentum", "classify", "quantize"};
        options.targets = {target};
    } else if (fedosov->parsed()) {
        options.stages = {"validate", "fedosov"};
        options.fedosov_identities = fedosov_check;
    } else {
        options.stages = {"validate", "momentum", "classify", "extend", "quantize"};
        if (scenario->uses_fedosov()) {
            options.stages.insert("fedosov");
        }
    }

    const qmm::Report result = qmm::run_pipeline(*scenario, options);
    std::cout << (flags.format == "json" ? result.to_json() : result.to_text());
    return result.exit_code(options.expect_exists);
}
