#include <exception>
#include <iostream>

#include "cli.hpp"

int main(int argc, char **argv)
{
    try {
        return mzr::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
    } catch (const std::exception &e) {
        std::cerr << "mzr: " << e.what() << '\n';
        return 70;
    }
}
