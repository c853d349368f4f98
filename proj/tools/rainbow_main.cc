#include <rainbow/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::ios::sync_with_stdio(false);
    return rainbow::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
