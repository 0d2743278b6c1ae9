#pragma once

// Model files, point sampling and the JSON reports behind the CLI.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "equiblow/dcrit.hpp"
#include "equiblow/desing.hpp"
#include "equiblow/family.hpp"

namespace equiblow {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

/// One model per file, `key = value` lines, values in JSON syntax.
struct ModelFile {
    std::string name;
    std::vector<std::string> variables;
    IntMatrix weights;  // k rows of n entries; k may be zero
    std::optional<std::string> potential;
    std::optional<std::vector<std::string>> ideal;
    std::optional<std::vector<std::string>> section;
    std::optional<IntMatrix> frame_weights;  // one k-tuple per section entry
    int divisor = 0;
    std::optional<std::string> base_parameter;
    std::optional<QVector> basepoint;
    std::optional<std::string> hint;
};

ModelFile parse_model_file(std::string_view text, std::string name = "model");
ModelFile load_model_file(const std::filesystem::path& path);

struct Model {
    ModelFile file;
    RingPtr ring;
    WeightMatrix weights;
    std::optional<std::size_t> base;
    std::optional<MultiPoly> potential;
    LocalModel local;
    std::optional<PolyVector> omega_bar;
    std::optional<MultiPoly> hint;
};

Model build_model(const ModelFile& file);

/// "a,b,c" with integer or p/q entries.
QVector parse_point(std::string_view text, std::size_t n);

/// V(gb) is empty or finite: every variable has a pure-power leading term.
bool finite_locus(const GroebnerBasis& gb);

/// Up to `want` integer points of V(gb) from growing boxes around the origin,
/// smallest L1 norm first.
std::vector<QVector> sample_points(const GroebnerBasis& gb, std::size_t want, Exec exec = Exec::Parallel);

struct ComplexTally {
    bool applicable = false;  // the model carries cofactor data
    bool finite = false;      // U has finitely many points (or none)
    std::size_t points = 0;
    std::size_t passed = 0;
    bool ok() const { return passed == points; }
};

ComplexTally complex_check(const LocalModel& m, std::size_t want, Exec exec = Exec::Parallel);

struct ReportOptions {
    bool full = false;
    std::optional<std::string> chart;
    std::size_t complex_points = 20;
    Exec exec = Exec::Parallel;
};

struct CommandReport {
    Json json;
    std::vector<std::string> failures;  // named theorem checks that failed
    bool ok() const { return failures.empty(); }
};

CommandReport report_blowup(const Model& m, const std::string& command, const ReportOptions& opt);
CommandReport report_crit(const Model& m, const std::string& command, const QVector& point);
CommandReport report_semistable(const Model& m, const std::string& command, const std::string& chart,
                                const QVector& point);
CommandReport report_obstruction(const Model& m, const std::string& command, const QVector& point,
                                 const QVector& tangent, std::size_t order);
CommandReport report_omega(const Model& m, const std::string& command);
CommandReport report_fiber(const Model& m, const std::string& command, const Rational& c);
CommandReport report_independence(const Model& m, const std::string& command, const std::string& aux);

/// Plain-text rendering of a report for terminals.
std::string render_text(const Json& report);

/// Canonical serialisation used for files and determinism checks.
std::string dump_report(const Json& report);

}  // namespace equiblow
