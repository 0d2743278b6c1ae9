#include "equiblow/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "equiblow/stability.hpp"

namespace equiblow {

namespace {

const std::set<std::string> kKeys = {"variables", "weights",   "potential",      "ideal",     "section",
                                     "frame_weights", "divisor", "base_parameter", "basepoint", "hint"};

std::string strip_comment(const std::string& line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"' && (i == 0 || line[i - 1] != '\\')) quoted = !quoted;
        if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

std::string trim(std::string s) {
    auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && ws(s.back())) s.pop_back();
    std::size_t b = 0;
    while (b < s.size() && ws(s[b])) ++b;
    return s.substr(b);
}

[[noreturn]] void bad(std::size_t line, const std::string& what) {
    throw ParseError("model file line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> string_list(const Json& v, std::size_t line, const std::string& key) {
    if (!v.is_array()) bad(line, key + " must be a list of strings");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string()) bad(line, key + " must be a list of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

IntMatrix int_rows(const Json& v, std::size_t line, const std::string& key) {
    if (!v.is_array()) bad(line, key + " must be a list of integer rows");
    IntMatrix out;
    for (const auto& row : v) {
        if (!row.is_array()) bad(line, key + " must be a list of integer rows");
        IntRow r;
        for (const auto& e : row) {
            if (!e.is_number_integer()) bad(line, key + " entries must be integers");
            r.push_back(e.get<long>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

Rational rational_of(const Json& e, std::size_t line, const std::string& key) {
    if (e.is_number_integer()) return Rational(std::to_string(e.get<long>()));
    if (e.is_string()) {
        try {
            return parse_rational(e.get<std::string>());
        } catch (const ParseError& err) {
            bad(line, key + ": " + err.what());
        }
    }
    bad(line, key + " entries must be integers or \"p/q\" strings");
}

Json point_json(std::span<const Rational> p) {
    Json out = Json::array();
    for (const auto& x : p) out.push_back(to_string(x));
    return out;
}

Json weights_json(const WeightMatrix& w) {
    Json out = Json::array();
    for (const auto& row : w.rows()) out.push_back(row);
    return out;
}

Json check_json(const ModelCheck& c) {
    return Json{{"factorization", c.factorization}, {"cosection", c.cosection}, {"isotropy", c.isotropy},
                {"weights", c.weights},             {"ok", c.ok()},            {"witnesses", c.witnesses}};
}

Json tally_json(const ComplexTally& t) {
    if (!t.applicable) return nullptr;
    return Json{{"points", t.points}, {"passed", t.passed}, {"finite_locus", t.finite}, {"pass", t.ok()}};
}

Json base_chart(const Model& m) {
    Json c;
    c["name"] = "base";
    c["vars"] = m.ring->names();
    c["weights"] = weights_json(m.weights);
    c["ideal_gb"] = buchberger(m.local.ideal()).strings();
    c["unstable_gb"] = nullptr;
    c["checks"] = Json{{"xi", nullptr}, {"complex", nullptr}, {"coinc", nullptr}};
    c["verdicts"] = Json::object();
    return c;
}

Json envelope(const Model& m, const std::string& command) {
    Json r;
    r["model"] = m.file.name;
    r["command"] = command;
    r["charts"] = Json::array();
    r["ledger"] = Json::object();
    r["version"] = kVersion;
    return r;
}

struct Walk {
    explicit Walk(const ReportOptions& o) : opt(o) {}
    const ReportOptions& opt;
    std::vector<Json> charts;
    std::size_t xi_divisions = 0, coinc_checks = 0, coinc_pass = 0, complex_points = 0, complex_pass = 0;
    std::size_t model_checks = 0, model_pass = 0, leaves = 0, empty_leaves = 0;
    std::vector<std::string> failures;

    void stage(const Stage& s, const std::string& prefix) {
        for (const auto& c : s.charts) chart(c, s, prefix + c.chart.name);
    }

    void chart(const ChartResult& c, const Stage& s, const std::string& name) {
        GroebnerBasis gb = buchberger(c.model.ideal());
        ComplexTally tally;
        if (c.model.has_cofactor) tally = complex_check(c.model, opt.complex_points, opt.exec);
        Json j;
        j["name"] = name;
        j["vars"] = c.model.ring->names();
        j["weights"] = weights_json(c.model.weights);
        j["ideal_gb"] = gb.strings();
        j["unstable_gb"] = c.unstable ? Json(c.unstable->strings()) : Json(nullptr);
        j["checks"] = Json{{"xi", Json{{"divisions", c.intrinsic.divisions}, {"pass", true}}},
                           {"complex", tally_json(tally)},
                           {"coinc", c.coinc}};
        Json v;
        v["center"] = s.center.to_string();
        v["depth"] = s.depth;
        v["empty"] = gb.is_unit();
        v["frame"] = c.model.bundle.labels;
        v["twist"] = c.model.bundle.twist;
        if (c.check) v["model"] = check_json(*c.check);
        j["verdicts"] = v;

        xi_divisions += c.intrinsic.divisions;
        ++coinc_checks;
        if (c.coinc) ++coinc_pass;
        else failures.push_back("coinc on " + name);
        complex_points += tally.points;
        complex_pass += tally.passed;
        if (!tally.ok()) failures.push_back("complex on " + name);
        if (c.check) {
            ++model_checks;
            if (c.check->ok()) ++model_pass;
            else failures.push_back("weak-local-model on " + name);
        }
        bool selected = !opt.chart || *opt.chart == name || name.starts_with(*opt.chart + "/");
        if (selected) charts.push_back(std::move(j));
        if (c.children.empty()) {
            ++leaves;
            if (gb.is_unit()) ++empty_leaves;
        }
        for (const auto& child : c.children) stage(child, name + "/");
    }
};

const ChartResult* find_chart(const std::vector<Stage>& stages, const std::string& path, const std::string& prefix = "") {
    for (const auto& s : stages)
        for (const auto& c : s.charts) {
            std::string name = prefix + c.chart.name;
            if (name == path) return &c;
            if (path.starts_with(name + "/"))
                if (auto* hit = find_chart(c.children, path, name + "/")) return hit;
        }
    return nullptr;
}

// Chart rows of the first blowup of m, keyed by chart name.
std::map<std::string, Json> first_stage_rows(const Model& m) {
    std::map<std::string, Json> rows;
    auto scan = enumerate_blowup_centers(m.local.weights, m.local.ideal());
    if (scan.centers.empty()) return rows;
    const Subtorus& r = scan.centers.front();
    LocalModel mr = restrict_model(m.local, r);
    Ideal reduced = buchberger(mr.ideal()).ideal();
    for (const auto& chart : model_charts(m.local, r)) {
        Json j = base_chart(m);
        j["name"] = chart.name;
        j["vars"] = chart.ring->names();
        j["weights"] = weights_json(chart.weights);
        j["ideal_gb"] = intrinsic_ideal(reduced, chart).basis.strings();
        rows[chart.name] = j;
    }
    return rows;
}

}  // namespace

ModelFile parse_model_file(std::string_view text, std::string name) {
    ModelFile f;
    f.name = std::move(name);
    std::set<std::string> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    std::optional<std::size_t> weights_line;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) bad(lineno, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!kKeys.contains(key)) bad(lineno, "unknown key '" + key + "'");
        if (!seen.insert(key).second) bad(lineno, "duplicate key '" + key + "'");
        Json v;
        try {
            v = Json::parse(value);
        } catch (const Json::parse_error& e) {
            bad(lineno, "malformed value for " + key);
        }
        if (key == "variables") {
            f.variables = string_list(v, lineno, key);
        } else if (key == "weights") {
            f.weights = int_rows(v, lineno, key);
            weights_line = lineno;
        } else if (key == "potential" || key == "hint" || key == "base_parameter") {
            if (!v.is_string()) bad(lineno, key + " must be a quoted string");
            (key == "potential" ? f.potential : key == "hint" ? f.hint : f.base_parameter) = v.get<std::string>();
        } else if (key == "ideal") {
            f.ideal = string_list(v, lineno, key);
        } else if (key == "section") {
            f.section = string_list(v, lineno, key);
        } else if (key == "frame_weights") {
            f.frame_weights = int_rows(v, lineno, key);
        } else if (key == "divisor") {
            if (!v.is_number_integer()) bad(lineno, "divisor must be an integer twist");
            f.divisor = v.get<int>();
        } else if (key == "basepoint") {
            if (!v.is_array()) bad(lineno, "basepoint must be a list");
            QVector p;
            for (const auto& e : v) p.push_back(rational_of(e, lineno, key));
            f.basepoint = std::move(p);
        }
    }
    if (f.variables.empty()) throw ParseError("model file: missing variables");
    std::set<std::string> unique(f.variables.begin(), f.variables.end());
    if (unique.size() != f.variables.size()) throw ParseError("model file: repeated variable name");
    if (!seen.contains("weights")) throw ParseError("model file: missing weights");
    for (const auto& row : f.weights)
        if (row.size() != f.variables.size())
            bad(*weights_line, "weight row has " + std::to_string(row.size()) + " entries for " +
                                   std::to_string(f.variables.size()) + " variables");
    if (f.potential.has_value() == f.ideal.has_value())
        throw ParseError("model file: give exactly one of potential or ideal");
    if (f.frame_weights && !f.section) throw ParseError("model file: frame_weights without section");
    if (f.frame_weights) {
        if (f.frame_weights->size() != f.section->size())
            throw ParseError("model file: frame_weights needs one row per section entry");
        for (const auto& row : *f.frame_weights)
            if (row.size() != f.weights.size()) throw ParseError("model file: frame weight rows need k entries");
    }
    if (f.basepoint && f.basepoint->size() != f.variables.size())
        throw ParseError("model file: basepoint has the wrong length");
    if (f.base_parameter && !unique.contains(*f.base_parameter))
        throw ParseError("model file: base_parameter is not a variable");
    return f;
}

ModelFile load_model_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read model file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_model_file(buf.str(), path.stem().string());
}

Model build_model(const ModelFile& file) {
    Model m;
    m.file = file;
    m.ring = make_ring(file.variables);
    m.weights = WeightMatrix(file.weights, file.variables.size());
    if (file.base_parameter) m.base = m.ring->require(*file.base_parameter);
    if (m.base)
        for (std::size_t a = 0; a < m.weights.k(); ++a)
            if (m.weights(a, *m.base) != 0) throw PreconditionError("base parameter must have weight zero");
    if (file.potential) {
        m.potential = parse_poly(*file.potential, m.ring);
        m.local = dcritical_chart(*m.potential, m.weights, m.base);
    } else {
        Ideal ideal(m.ring);
        for (const auto& g : *file.ideal) ideal.add(parse_poly(g, m.ring));
        m.local = ideal_model(ideal, m.weights, m.base);
    }
    m.local.bundle.twist = file.divisor;
    if (file.section) {
        PolyVector s;
        for (const auto& g : *file.section) s.push_back(parse_poly(g, m.ring));
        if (s.size() != m.local.section.size())
            throw PreconditionError("section has " + std::to_string(s.size()) + " entries, the bundle has rank " +
                                    std::to_string(m.local.section.size()));
        if (file.frame_weights && *file.frame_weights != m.local.bundle.weights)
            throw PreconditionError("frame_weights disagree with the bundle of the model");
        m.omega_bar = std::move(s);
    }
    if (file.hint) m.hint = parse_poly(*file.hint, m.ring);
    return m;
}

QVector parse_point(std::string_view text, std::size_t n) {
    QVector p;
    std::string s(text);
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) p.push_back(parse_rational(trim(item)));
    if (p.size() != n)
        throw ParseError("point has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(n));
    return p;
}

bool finite_locus(const GroebnerBasis& gb) {
    if (gb.is_unit()) return true;
    const std::size_t n = gb.ring->size();
    std::vector<bool> pure(n, false);
    for (const auto& g : gb.basis) {
        Monomial lm = g.leading_monomial(gb.order);
        std::size_t nz = 0, at = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (lm[i] != 0) ++nz, at = i;
        if (nz == 1) pure[at] = true;
    }
    return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
}

std::vector<QVector> sample_points(const GroebnerBasis& gb, std::size_t want, Exec exec) {
    const std::size_t n = gb.ring->size();
    if (gb.is_unit() || want == 0) return {};
    long cap = 12;
    while (cap > 1 && std::pow(2.0 * cap + 1, static_cast<double>(n)) > 40000) --cap;
    std::vector<QVector> found;
    for (long r = 1; r <= cap; ++r) {
        const long side = 2 * r + 1;
        long total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= side;
        std::vector<char> hit(static_cast<std::size_t>(total), 0);
        auto point_of = [&](long idx) {
            QVector p(n);
            for (std::size_t i = 0; i < n; ++i) {
                p[i] = idx % side - r;
                idx /= side;
            }
            return p;
        };
        auto test = [&](long idx) {
            QVector p = point_of(idx);
            for (const auto& g : gb.basis)
                if (g.evaluate(p) != 0) return false;
            return true;
        };
        if (exec == Exec::Serial) {
            for (long idx = 0; idx < total; ++idx) hit[idx] = test(idx);
        } else {
#pragma omp parallel for schedule(static)
            for (long idx = 0; idx < total; ++idx) hit[idx] = test(idx);
        }
        found.clear();
        for (long idx = 0; idx < total; ++idx)
            if (hit[idx]) found.push_back(point_of(idx));
        if (found.size() >= want) break;
    }
    auto l1 = [](const QVector& p) {
        Rational s = 0;
        for (const auto& x : p) s += abs(x);
        return s;
    };
    std::stable_sort(found.begin(), found.end(), [&](const QVector& a, const QVector& b) {
        Rational la = l1(a), lb = l1(b);
        if (la != lb) return la < lb;
        return a < b;
    });
    if (found.size() > want) found.resize(want);
    return found;
}

ComplexTally complex_check(const LocalModel& m, std::size_t want, Exec exec) {
    ComplexTally t;
    t.applicable = m.has_cofactor;
    if (!m.has_cofactor) return t;
    GroebnerBasis gb = buchberger(m.ideal());
    t.finite = finite_locus(gb);
    auto pts = sample_points(gb, want, exec);
    t.points = pts.size();
    std::vector<char> ok(pts.size(), 0);
    auto run = [&](std::size_t i) {
        auto k = four_term_at(m, pts[i]);
        return k.m1m0_zero && k.m2m1_zero;
    };
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < pts.size(); ++i) ok[i] = run(i);
    } else {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(pts.size()); ++i) {
            try {
                ok[i] = run(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    }
    t.passed = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 1));
    return t;
}

CommandReport report_blowup(const Model& m, const std::string& command, const ReportOptions& opt) {
    DesingOptions dopt;
    dopt.recurse = opt.full;
    Desingularization d = partial_desingularization(m.local, dopt);
    Walk walk(opt);
    for (const auto& s : d.stages) walk.stage(s, "");
    if (opt.chart && walk.charts.empty()) throw PreconditionError("no chart named " + *opt.chart);
    std::sort(walk.charts.begin(), walk.charts.end(),
              [](const Json& a, const Json& b) { return a["name"].get<std::string>() < b["name"].get<std::string>(); });

    ComplexTally base;
    if (m.local.has_cofactor) base = complex_check(m.local, opt.complex_points, opt.exec);
    if (!base.ok()) walk.failures.push_back("complex on base");

    CommandReport out;
    out.json = envelope(m, command);
    out.json["charts"] = walk.charts;
    Json notices = Json::array();
    if (d.stages.empty()) {
        if (d.dense) notices.push_back("dense: a nontrivial subtorus acts trivially on U; nothing to blow up");
        else notices.push_back("no nontrivial stabiliser on a closed semistable orbit; U is already reduced");
    } else {
        notices.push_back("center " + d.stages.front().center.to_string());
        if (d.dense) notices.push_back("dense: a nontrivial subtorus acts trivially on part of U");
        if (walk.leaves > 0 && walk.empty_leaves == walk.leaves) notices.push_back("U-hat empty on every chart");
    }
    out.json["ledger"] = Json{{"xi", Json{{"divisions", walk.xi_divisions}, {"failures", 0}}},
                              {"coinc", Json{{"checks", walk.coinc_checks}, {"passed", walk.coinc_pass}}},
                              {"complex", Json{{"points", walk.complex_points + base.points},
                                               {"passed", walk.complex_pass + base.passed}}},
                              {"model_checks", Json{{"checks", walk.model_checks}, {"passed", walk.model_pass}}},
                              {"base_complex", tally_json(base)},
                              {"dense", d.dense},
                              {"stages", d.stages.size()},
                              {"notices", notices}};
    out.failures = walk.failures;
    return out;
}

CommandReport report_crit(const Model& m, const std::string& command, const QVector& point) {
    CommandReport out;
    out.json = envelope(m, command);
    Json c = base_chart(m);
    auto k = four_term_at(m.local, point);
    c["checks"]["complex"] = Json{{"m1m0_zero", k.m1m0_zero}, {"m2m1_zero", k.m2m1_zero}};
    if (!k.m1m0_zero || !k.m2m1_zero) out.failures.push_back("complex at the point");
    auto dims = cohomology_dims(k);
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < point.size(); ++i)
        if (point[i] != 0 && (!m.base || i != *m.base)) support.push_back(i);
    Subtorus stab = stabilizer_subtorus(support, m.weights);
    Json v;
    v["point"] = point_json(point);
    v["cohomology"] = dims;
    v["stabilizer"] = stab.to_string();
    if (stab.is_trivial()) {
        auto red = reduced_obstruction_dim(m.local, point);
        v["reduced_obstruction"] = Json{{"dim", red.dim}, {"orbit_not_closed", red.orbit_not_closed}};
    } else {
        v["reduced_obstruction"] = nullptr;
    }
    c["verdicts"] = v;
    out.json["charts"].push_back(c);
    return out;
}

CommandReport report_semistable(const Model& m, const std::string& command, const std::string& chart,
                                const QVector& point) {
    DesingOptions dopt;
    dopt.recurse = chart.find('/') != std::string::npos;
    dopt.check_models = false;
    Desingularization d = partial_desingularization(m.local, dopt);
    const ChartResult* c = find_chart(d.stages, chart);
    if (!c) throw PreconditionError("no chart named " + chart);
    if (point.size() != c->model.ring->size())
        throw ParseError("point has " + std::to_string(point.size()) + " coordinates, chart " + chart + " has " +
                         std::to_string(c->model.ring->size()));
    auto verdict = point_semistable(point, c->model.ancestry);
    CommandReport out;
    out.json = envelope(m, command);
    Json j;
    j["name"] = chart;
    j["vars"] = c->model.ring->names();
    j["weights"] = weights_json(c->model.weights);
    j["ideal_gb"] = buchberger(c->model.ideal()).strings();
    j["unstable_gb"] = c->unstable ? Json(c->unstable->strings()) : Json(nullptr);
    j["checks"] = Json{{"xi", Json{{"divisions", c->intrinsic.divisions}, {"pass", true}}},
                       {"complex", nullptr},
                       {"coinc", c->coinc}};
    Json v;
    v["point"] = point_json(point);
    v["semistable"] = verdict.semistable;
    v["lambda"] = verdict.lambda ? Json(*verdict.lambda) : Json(nullptr);
    v["limit"] = verdict.limit ? point_json(*verdict.limit) : Json(nullptr);
    v["stage"] = verdict.stage;
    v["reason"] = verdict.reason;
    j["verdicts"] = v;
    out.json["charts"].push_back(j);
    if (!c->coinc) out.failures.push_back("coinc on " + chart);
    return out;
}

CommandReport report_obstruction(const Model& m, const std::string& command, const QVector& point,
                                 const QVector& tangent, std::size_t order) {
    SmallExtension ext;
    ext.m = order;
    for (std::size_t i = 0; i < point.size(); ++i) {
        QVector s{point[i]};
        if (order >= 2) s.push_back(tangent[i]);
        ext.series.push_back(std::move(s));
    }
    auto res = obstruction_assignment(m.local, ext);
    CommandReport out;
    out.json = envelope(m, command);
    Json c = base_chart(m);
    Json v;
    v["point"] = point_json(point);
    v["tangent"] = point_json(tangent);
    v["order"] = order;
    v["raw"] = point_json(res.raw);
    v["class"] = point_json(res.cls);
    v["coker_dim"] = res.coker_dim;
    v["vanishes"] = res.vanishes;
    c["verdicts"] = v;
    out.json["charts"].push_back(c);
    return out;
}

CommandReport report_omega(const Model& m, const std::string& command) {
    if (!m.omega_bar) throw PreconditionError("omega-verify needs a section to compare against");
    OmegaData data;
    const std::size_t n = m.local.tangent().size(), r = m.local.section.size();
    data.a = zero_matrix(m.ring, n, r);
    data.b = zero_matrix(m.ring, n, r);
    data.hint = m.hint ? *m.hint : MultiPoly(m.ring, 1);
    auto rep = verify_omega_equivalence(m.local, *m.omega_bar, data);
    CommandReport out;
    out.json = envelope(m, command);
    Json c = base_chart(m);
    c["verdicts"] = Json{{"ideals", rep.ideals},       {"forward", rep.forward},
                         {"backward", rep.backward},   {"equivariant", rep.equivariant},
                         {"ok", rep.ok()},             {"witnesses", rep.witnesses},
                         {"hint", data.hint.to_string()}};
    out.json["charts"].push_back(c);
    if (!rep.ok()) out.failures.push_back("omega-equivalence");
    return out;
}

CommandReport report_fiber(const Model& m, const std::string& command, const Rational& c) {
    std::string cert;
    bool flat = check_fixed_locus_flat(m.local, &cert);
    auto rows = fiber_blowup_commutes(m.local, c);
    CommandReport out;
    out.json = envelope(m, command);
    auto charts = first_stage_rows(m);
    for (const auto& [name, ok] : rows) {
        Json j = charts.contains(name) ? charts[name] : base_chart(m);
        j["name"] = name;
        j["verdicts"] = Json{{"commutes", ok}, {"at", to_string(c)}};
        out.json["charts"].push_back(j);
        if (!ok) out.failures.push_back("fiber commutation on " + name);
    }
    out.json["ledger"] = Json{{"fixed_locus_flat", flat}, {"certificate", cert}};
    if (!flat) out.failures.push_back("fixed-locus flatness");
    return out;
}

CommandReport report_independence(const Model& m, const std::string& command, const std::string& aux) {
    if (m.ring->index_of(aux)) throw PreconditionError("auxiliary coordinate " + aux + " already exists");
    auto names = m.ring->names();
    names.push_back(aux);
    RingPtr big = make_ring(names);
    IntMatrix rows = m.weights.rows();
    for (auto& row : rows) row.push_back(0);
    WeightMatrix wb(rows, names.size());
    MultiPoly u = MultiPoly::variable(big, aux);
    LocalModel big_model;
    if (m.potential) {
        MultiPoly g = m.potential->rename_into(big) + u * u * Rational(1, 2);
        big_model = dcritical_chart(g, wb, m.base ? big->index_of(m.ring->name(*m.base)) : std::nullopt);
    } else {
        Ideal ib(big);
        for (const auto& s : m.local.section) ib.add(s.rename_into(big));
        ib.add(u);
        big_model = ideal_model(ib, wb, m.base ? big->index_of(m.ring->name(*m.base)) : std::nullopt);
    }
    auto rows_out = embedding_independence_check(m.local.ideal(), m.weights, big_model.ideal(), wb, {aux});
    CommandReport out;
    out.json = envelope(m, command);
    auto charts = first_stage_rows(m);
    for (const auto& [name, ok] : rows_out) {
        Json j = charts.contains(name) ? charts[name] : base_chart(m);
        j["name"] = name;
        j["verdicts"] = Json{{"independent", ok}, {"aux", aux}};
        out.json["charts"].push_back(j);
        if (!ok) out.failures.push_back("embedding independence on " + name);
    }
    if (m.potential && m.file.basepoint) {
        auto pc = phi_ck_at_point(m.local, big_model, *m.file.basepoint);
        out.json["ledger"]["phi_ck"] = Json{{"point", point_json(*m.file.basepoint)},
                                            {"coker_small", pc.coker_small},
                                            {"coker_big", pc.coker_big},
                                            {"well_defined", pc.well_defined},
                                            {"bijective", pc.bijective}};
    }
    return out;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

std::string render_text(const Json& r) {
    std::ostringstream out;
    out << "model " << r["model"].get<std::string>() << "  (" << r["command"].get<std::string>() << ", equiblow "
        << r["version"].get<std::string>() << ")\n";
    for (const auto& c : r["charts"]) {
        out << "\n" << c["name"].get<std::string>() << "  vars " << c["vars"].dump() << "  weights "
            << c["weights"].dump() << "\n";
        out << "  ideal    " << c["ideal_gb"].dump() << "\n";
        if (!c["unstable_gb"].is_null()) out << "  unstable " << c["unstable_gb"].dump() << "\n";
        for (const auto& [k, v] : c["checks"].items())
            if (!v.is_null()) out << "  check " << k << ": " << v.dump() << "\n";
        for (const auto& [k, v] : c["verdicts"].items()) out << "  " << k << ": " << v.dump() << "\n";
    }
    if (!r["ledger"].empty()) {
        out << "\nledger\n";
        for (const auto& [k, v] : r["ledger"].items()) {
            if (k == "notices") continue;
            out << "  " << k << ": " << v.dump() << "\n";
        }
        if (r["ledger"].contains("notices"))
            for (const auto& n : r["ledger"]["notices"]) out << "  * " << n.get<std::string>() << "\n";
    }
    return out.str();
}

}  // namespace equiblow
