#include "latmin/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv, argv + argc);
    const latmin::CliResult r = latmin::run(args);
    std::cout << r.out << std::flush;
    return r.exit_code;
}
