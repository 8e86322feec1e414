#include "diffalg/shell.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return diffalg::shell_main(args, std::cout, std::cerr);
}
