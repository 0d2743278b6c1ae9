#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "equiblow/pipeline.hpp"

namespace equiblow::acceptance {

struct Criterion {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Run {
    std::vector<Criterion> criteria;
    Json report;
    bool ok() const;
};

/// Blowup reports (full desingularisation) for every *.kb file, by name.
Json corpus_report(const std::filesystem::path& dir, Exec exec = Exec::Parallel);

/// All twelve acceptance criteria against the corpus in `dir`.  Budget
/// errors propagate; any other failure marks its criterion red.
Run run_all(const std::filesystem::path& dir);

std::string format_line(const Criterion& c);

}  // namespace equiblow::acceptance
