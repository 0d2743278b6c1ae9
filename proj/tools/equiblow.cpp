#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "equiblow/acceptance/acceptance.hpp"
#include "equiblow/pipeline.hpp"

using namespace equiblow;

namespace {

enum Exit { kOk = 0, kParse = 2, kPrecondition = 3, kBudget = 4, kTheorem = 5 };

void apply_budget(long flag) {
    long cap = flag;
    if (const char* env = std::getenv("EQUIBLOW_BUDGET"); env && cap <= 0) {
        try {
            cap = std::stol(env);
        } catch (const std::exception&) {
            throw ParseError(std::string("EQUIBLOW_BUDGET is not a number: ") + env);
        }
    }
    if (cap > 0) {
        Budget b = default_budget();
        b.max_basis = static_cast<std::size_t>(cap);
        set_default_budget(b);
    }
}

void emit(const Json& report, const std::string& json_path) {
    if (json_path.empty()) {
        std::cout << render_text(report);
    } else if (json_path == "-") {
        std::cout << dump_report(report);
    } else {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw PreconditionError("cannot write " + json_path);
        out << dump_report(report);
    }
}

int finish(const CommandReport& r, const std::string& json_path) {
    emit(r.json, json_path);
    if (r.ok()) return kOk;
    for (const auto& f : r.failures) std::cerr << "equiblow: check failed: " << f << "\n";
    return kTheorem;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kirwan blowups of torus-equivariant affine schemes"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string file, chart, point, tangent, at, json_path, aux = "u";
    std::size_t order = 1;
    long budget = 0;
    bool full = false;

    auto common = [&](CLI::App* sub) {
        sub->add_option("file", file, "model file (corpus: directory)")->required();
        sub->add_option("--json", json_path, "write the JSON report to PATH ('-' for stdout)");
        sub->add_option("--budget", budget, "cap on Groebner basis size");
    };
    auto* blowup = app.add_subcommand("blowup", "intrinsic blowup along the largest center");
    common(blowup);
    blowup->add_flag("--full", full, "run the partial desingularization to termination");
    blowup->add_option("--chart", chart, "report only this chart (and its descendants)");
    auto* crit = app.add_subcommand("crit", "four-term complex and cohomology at a point");
    common(crit);
    crit->add_option("--point", point, "a,b,c (default: basepoint)");
    auto* semi = app.add_subcommand("semistable", "semistability of a chart point");
    common(semi);
    semi->add_option("--chart", chart, "chart name, e.g. chart_x")->required();
    semi->add_option("--point", point, "chart coordinates a,b,c")->required();
    auto* obs = app.add_subcommand("obstruction", "obstruction of a small extension p + e v");
    common(obs);
    obs->add_option("--point", point, "base point (default: basepoint)");
    obs->add_option("--tangent", tangent, "first-order term v (default: 0)");
    obs->add_option("--ext-order", order, "order m of Q[e]/(e^m)")->check(CLI::PositiveNumber);
    auto* omega = app.add_subcommand("omega-verify", "Omega-equivalence of df and the file's section");
    common(omega);
    auto* fiber = app.add_subcommand("fiber-check", "blowup commutes with the fiber t = c");
    common(fiber);
    fiber->add_option("--at", at, "fiber value c")->required();
    auto* indep = app.add_subcommand("independence", "re-embedding with a weight-zero coordinate");
    common(indep);
    indep->add_option("--aux", aux, "name of the auxiliary coordinate");
    auto* corpus = app.add_subcommand("corpus", "run the acceptance suite on a corpus directory");
    common(corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    std::string command;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (i == 2) a = std::filesystem::path(a).filename().string();
        command += (command.empty() ? "" : " ") + a;
    }

    try {
        apply_budget(budget);
        if (corpus->parsed()) {
            auto run = acceptance::run_all(file);
            for (const auto& c : run.criteria) std::cout << acceptance::format_line(c) << "\n";
            if (!json_path.empty()) emit(run.report, json_path);
            for (const auto& c : run.criteria)
                if (!c.pass) std::cerr << "equiblow: criterion " << c.id << " (" << c.name << ") failed\n";
            return run.ok() ? kOk : kTheorem;
        }
        Model m = build_model(load_model_file(file));
        const std::size_t n = m.ring->size();
        auto point_or_base = [&]() {
            if (!point.empty()) return parse_point(point, n);
            if (m.file.basepoint) return *m.file.basepoint;
            throw PreconditionError("no --point given and the model has no basepoint");
        };
        if (blowup->parsed()) {
            ReportOptions opt;
            opt.full = full;
            if (!chart.empty()) opt.chart = chart;
            return finish(report_blowup(m, command, opt), json_path);
        }
        if (crit->parsed()) return finish(report_crit(m, command, point_or_base()), json_path);
        if (semi->parsed()) {
            std::size_t coords = static_cast<std::size_t>(std::count(point.begin(), point.end(), ',')) + 1;
            return finish(report_semistable(m, command, chart, parse_point(point, coords)), json_path);
        }
        if (obs->parsed()) {
            QVector v = tangent.empty() ? QVector(n, 0) : parse_point(tangent, n);
            return finish(report_obstruction(m, command, point_or_base(), v, order), json_path);
        }
        if (omega->parsed()) return finish(report_omega(m, command), json_path);
        if (fiber->parsed()) return finish(report_fiber(m, command, parse_rational(at)), json_path);
        if (indep->parsed()) return finish(report_independence(m, command, aux), json_path);
    } catch (const ParseError& e) {
        std::cerr << "equiblow: parse error: " << e.what() << "\n";
        return kParse;
    } catch (const BudgetExceeded& e) {
        std::cerr << "equiblow: budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const TheoremCheckFailure& e) {
        std::cerr << "equiblow: theorem check failed: " << e.what() << "\n";
        return kTheorem;
    } catch (const PreconditionError& e) {
        std::cerr << "equiblow: precondition: " << e.what() << "\n";
        return kPrecondition;
    } catch (const Error& e) {
        std::cerr << "equiblow: " << e.what() << "\n";
        return kPrecondition;
    }
    return kOk;
}
