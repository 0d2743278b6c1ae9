// Prints one line per acceptance criterion; exit status 1 if any fails.
#include <iostream>

#include "equiblow/acceptance/acceptance.hpp"

int main(int argc, char** argv) {
    const char* dir = argc > 1 ? argv[1] : EQUIBLOW_CORPUS_DIR;
    try {
        auto run = equiblow::acceptance::run_all(dir);
        for (const auto& c : run.criteria) std::cout << equiblow::acceptance::format_line(c) << "\n";
        return run.ok() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cout << "FAIL acceptance aborted: " << e.what() << "\n";
        return 1;
    }
}
