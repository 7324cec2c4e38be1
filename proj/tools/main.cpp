#include <string>
#include <vector>

#include "growfrag/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return growfrag::cli::run(args);
}
