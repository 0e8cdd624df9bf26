#include <iostream>
#include <string>
#include <vector>

#include "patrolsim_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return patrol::cli::run(std::move(args), std::cout, std::cerr);
}
