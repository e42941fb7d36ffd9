#include <cstdio>
#include <string>
#include <vector>

#include "dihedralk/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = dk::cli::run(args);
    std::fputs(result.output.c_str(), stdout);
    return result.exit_code;
}
