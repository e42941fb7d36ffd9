#pragma once
#include <string>
#include <vector>

namespace dk::cli {

struct RunResult {
    int exit_code = 0;   // 0 ok, 1 audited defect found, 2 usage error
    std::string output;
};

/// Run one CLI invocation (args exclude the program name). All output is
/// returned rather than printed, so the front end and the tests share it.
RunResult run(const std::vector<std::string>& args);

/// Re-render a JSON document produced by `run` with --json as the text
/// output of the same invocation.
std::string render_text(const std::string& json_doc);

}  // namespace dk::cli
