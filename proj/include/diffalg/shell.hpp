#pragma once

// Placeholder: CLI dispatch is assembled after the algebra modules.

#include <iostream>
#include <string>
#include <vector>

namespace diffalg {

inline int shell_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    (void)args;
    (void)out;
    err << "diffalg: not yet wired\n";
    return 64;
}

} // namespace diffalg
