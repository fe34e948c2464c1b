#include <vector>

#include "acc/cli.hpp"

int main(int argc, char** argv) {
    return acc::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
