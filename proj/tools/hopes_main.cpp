#include "hopes/cli.hpp"

int main(int argc, char** argv)
{
    return hopes::cli_main(std::vector<std::string>(argv + 1, argv + argc));
}
