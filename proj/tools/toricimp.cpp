#include <cstdio>
#include <string>
#include <vector>

#include "toric/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    toric::CliResult r = toric::run_cli(args);
    std::fputs(r.out.c_str(), stdout);
    return r.code;
}
