#include <iostream>
#include <string>
#include <vector>

#include "twistcalc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    twistcalc::cli::CommandResult result = twistcalc::cli::dispatch(args);
    std::cout << twistcalc::cli::render(result);
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
    return twistcalc::cli::exit_code(result.status);
}
