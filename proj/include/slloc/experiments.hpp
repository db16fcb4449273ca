#pragma once

#include <string>
#include <vector>

namespace slloc {

struct ExperimentResult {
    std::string name;
    bool ok = false;
    std::string message;
    std::vector<std::string> files;
};

/// Experiments runnable by name: fig1, fig2, fig3, prop1-fig1,
/// prop1-setup2, prop1-setup3, prop2.
const std::vector<std::string>& experiment_names();

/// Runs one experiment into out_dir. Partial outputs are removed on
/// failure; the result carries the error message instead of throwing.
ExperimentResult run_experiment(const std::string& name, const std::string& out_dir);

/// Runs every experiment, continuing past failures. Returns the number of
/// failed experiments.
int run_all_experiments(const std::string& out_dir, std::vector<ExperimentResult>* results);

}  // namespace slloc
