#include <iostream>
#include <string>
#include <vector>

#include <polyplateau/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return polyplateau::cli::run(std::move(args), std::cout, std::cerr);
}
