#include "equiblow/acceptance/acceptance.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "equiblow/oracles/oracles.hpp"
#include "equiblow/stability.hpp"

namespace equiblow::acceptance {

namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20261017;

struct Corpus {
    std::map<std::string, Model> models;  // by file stem
    std::map<std::string, Json> expected;  // *.expect goldens
};

Corpus load_corpus(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw ParseError("corpus directory " + dir.string() + " not found");
    Corpus c;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
        if (p.extension() == ".kb") c.models.emplace(p.stem().string(), build_model(load_model_file(p)));
        if (p.extension() == ".expect") {
            std::ifstream in(p);
            try {
                c.expected[p.stem().string()] = Json::parse(in);
            } catch (const Json::parse_error&) {
                throw ParseError("malformed golden file " + p.string());
            }
        }
    }
    return c;
}

const Model& need(const Corpus& c, const std::string& name) {
    auto it = c.models.find(name);
    if (it == c.models.end()) throw PreconditionError("corpus model " + name + " missing");
    return it->second;
}

void walk(const std::vector<Stage>& stages, const std::string& prefix,
          const std::function<void(const ChartResult&, const std::string&)>& f) {
    for (const auto& s : stages)
        for (const auto& c : s.charts) {
            f(c, prefix + c.chart.name);
            walk(c.children, prefix + c.chart.name + "/", f);
        }
}

template <typename F>
Criterion guarded(int id, std::string name, F&& body) {
    Criterion c{id, std::move(name), false, ""};
    try {
        body(c);
    } catch (const BudgetExceeded&) {
        throw;
    } catch (const TheoremCheckFailure& e) {
        c.pass = false;
        c.detail = "theorem check " + e.check + " failed: " + e.what();
    } catch (const Error& e) {
        c.pass = false;
        c.detail = e.what();
    }
    return c;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
    return s;
}

// 1 ------------------------------------------------------------------------
Criterion coinc(const Corpus& corpus) {
    return guarded(1, "coinc", [&](Criterion& out) {
        std::vector<std::pair<std::string, LocalModel>> cases;
        for (const char* name : {"e1", "e2", "cone", "x2y2"}) cases.emplace_back(name, need(corpus, name).local);
        cases.emplace_back("family|t=0", specialize(need(corpus, "family").local, 0));
        for (const auto& [name, m] : corpus.models)
            if (name != "e1" && name != "e2" && name != "cone" && name != "x2y2") cases.emplace_back(name, m.local);
        std::size_t charts = 0;
        std::vector<std::string> bad;
        for (const auto& [name, m] : cases) {
            auto d = partial_desingularization(m);
            std::map<std::string, std::vector<std::string>> first;
            walk(d.stages, "", [&](const ChartResult& c, const std::string& path) {
                ++charts;
                if (!c.coinc) bad.push_back(name + " " + path);
                first[path] = c.intrinsic.basis.strings();
            });
            auto gold = corpus.expected.find(name);
            if (gold == corpus.expected.end()) continue;
            for (const auto& [path, gens] : gold->second.items()) {
                auto it = first.find(path);
                if (it == first.end()) bad.push_back(name + " " + path + " missing");
                else if (it->second != gens.get<std::vector<std::string>>())
                    bad.push_back(name + " " + path + " intrinsic ideal differs from golden");
            }
        }
        out.pass = bad.empty() && charts > 0;
        out.detail = bad.empty() ? std::to_string(charts) + " charts over " + std::to_string(cases.size()) + " models"
                                 : join(bad);
    });
}

// 2 ------------------------------------------------------------------------
Criterion xi_divisibility(const Corpus& corpus) {
    return guarded(2, "xi divisibility", [&](Criterion& out) {
        std::size_t divisions = 0, fired = 0;
        std::vector<std::string> where;
        auto run = [&](const Ideal& ideal, const WeightMatrix& w, const std::string& label) {
            auto scan = enumerate_blowup_centers(w, ideal);
            if (scan.centers.empty()) return false;
            Ideal reduced = buchberger(ideal).ideal();
            for (const auto& chart : make_charts(ideal.ring(), w, scan.centers.front())) {
                try {
                    divisions += intrinsic_ideal(reduced, chart).divisions;
                } catch (const TheoremCheckFailure& e) {
                    ++fired;
                    where.push_back(label + " " + chart.name);
                }
            }
            return true;
        };
        for (const auto& [name, m] : corpus.models) {
            try {
                auto d = partial_desingularization(m.local);
                walk(d.stages, "", [&](const ChartResult& c, const std::string&) { divisions += c.intrinsic.divisions; });
            } catch (const TheoremCheckFailure& e) {
                if (e.check != "exceptional-divisibility") throw;
                ++fired;
                where.push_back(name);
            }
        }
        std::mt19937_64 rng(kSeed);
        std::size_t instances = 0, draws = 0;
        while (instances < 100 && draws < 2000) {
            ++draws;
            const std::size_t n = 2 + rng() % 3, k = 1 + rng() % 2;
            std::vector<std::string> names;
            for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
            RingPtr ring = make_ring(names);
            IntMatrix rows(k, IntRow(n));
            for (auto& row : rows)
                for (auto& x : row) x = static_cast<long>(rng() % 5) - 2;
            WeightMatrix w(rows, n);
            oracle::Weights cols;
            for (std::size_t i = 0; i < n; ++i) cols.push_back(w.column(i));
            Ideal ideal(ring);
            const std::size_t gens = 1 + rng() % 3;
            for (std::size_t g = 0; g < gens; ++g) {
                std::vector<long> target(k, 0);
                if (rng() % 2) {
                    // weight of a random coordinate, so moving pieces occur
                    target = cols[rng() % n];
                }
                ideal.add(oracle::random_homogeneous(ring, cols, target, 5, rng, 2));
            }
            if (ideal.empty() || is_unit_ideal(ideal)) continue;
            if (run(ideal, w, "random#" + std::to_string(draws))) ++instances;
        }
        out.pass = fired == 0 && instances >= 100;
        std::ostringstream d;
        d << divisions << " divisions, " << instances << " random invariant ideals, " << fired << " failures";
        if (!where.empty()) d << " (" << join(where) << ")";
        out.detail = d.str();
    });
}

// 3 ------------------------------------------------------------------------
Criterion independence(const Corpus& corpus) {
    return guarded(3, "embedding independence", [&](Criterion& out) {
        std::vector<std::string> bad;
        std::size_t charts = 0;
        for (const char* name : {"e1", "e2"}) {
            const Model& m = need(corpus, name);
            auto rep = report_independence(m, "independence", "u");
            for (const auto& c : rep.json["charts"]) {
                ++charts;
                if (!c["verdicts"]["independent"].get<bool>()) bad.push_back(std::string(name) + " " + c["name"].get<std::string>());
            }
        }
        out.pass = bad.empty() && charts >= 4;
        out.detail = bad.empty() ? std::to_string(charts) + " charts agree after eliminating u" : join(bad);
    });
}

// 4 ------------------------------------------------------------------------
Criterion complex_property(const Corpus& corpus) {
    return guarded(4, "complex property", [&](Criterion& out) {
        std::size_t models = 0, points = 0, finite = 0;
        std::vector<std::string> bad;
        auto check = [&](const LocalModel& m, const std::string& label) {
            if (!m.has_cofactor) return;
            auto t = complex_check(m, 20);
            ++models;
            points += t.points;
            if (t.finite) ++finite;
            if (!t.ok()) bad.push_back(label + " fails at " + std::to_string(t.points - t.passed) + " points");
            else if (t.points < 20 && !t.finite) bad.push_back(label + " only " + std::to_string(t.points) + " points");
        };
        for (const auto& [name, m] : corpus.models) {
            check(m.local, name);
            auto d = partial_desingularization(m.local);
            walk(d.stages, "", [&](const ChartResult& c, const std::string& path) { check(c.model, name + " " + path); });
        }
        out.pass = bad.empty() && models > 0;
        std::ostringstream d;
        d << points << " points over " << models << " models (" << finite
          << " with finite U, sampled exhaustively in the box)";
        out.detail = bad.empty() ? d.str() : join(bad);
    });
}

// 5 ------------------------------------------------------------------------
Criterion cohomology(const Corpus& corpus, const fs::path& dir) {
    return guarded(5, "cohomology dimensions", [&](Criterion& out) {
        std::ifstream in(dir / "cohomology.fixture");
        if (!in) throw PreconditionError("cohomology.fixture missing");
        Json fixture = Json::parse(in);
        std::vector<std::string> bad;
        for (const auto& row : fixture) {
            const Model& m = need(corpus, row["model"].get<std::string>());
            QVector p;
            for (const auto& x : row["point"]) p.push_back(parse_rational(x.get<std::string>()));
            auto want = row["dims"].get<std::vector<long>>();
            auto k = four_term_at(m.local, p);
            auto got = cohomology_dims(k);

            // Independent rebuild of the matrices, ranks by Bareiss.
            const auto t = m.local.tangent();
            const std::size_t kk = m.weights.k(), n = t.size(), r = m.local.section.size();
            std::vector<std::vector<Rational>> m0(n, std::vector<Rational>(kk)), m1(r, std::vector<Rational>(n)),
                m2(kk, std::vector<Rational>(r));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t a = 0; a < kk; ++a) m0[i][a] = m.weights(a, t[i]) * p[t[i]];
            for (std::size_t j = 0; j < r; ++j)
                for (std::size_t i = 0; i < n; ++i) m1[j][i] = m.local.section[j].derivative(t[i]).evaluate(p);
            for (std::size_t a = 0; a < kk; ++a)
                for (std::size_t j = 0; j < r; ++j) m2[a][j] = m.local.phi[a][j].evaluate(p);
            long r0 = static_cast<long>(oracle::bareiss_rank(m0)), r1 = static_cast<long>(oracle::bareiss_rank(m1)),
                 r2 = static_cast<long>(oracle::bareiss_rank(m2));
            std::array<long, 4> ref{static_cast<long>(kk) - r0, static_cast<long>(n) - r1 - r0,
                                    static_cast<long>(r) - r2 - r1, static_cast<long>(kk) - r2};
            std::array<long, 4> w{want[0], want[1], want[2], want[3]};
            std::string label = row["model"].get<std::string>() + " at " + Json(row["point"]).dump();
            if (got != w) bad.push_back(label + " implementation disagrees with fixture");
            if (ref != w) bad.push_back(label + " oracle disagrees with fixture");
        }
        out.pass = bad.empty() && fixture.size() >= 3;
        out.detail = bad.empty() ? std::to_string(fixture.size()) + " fixture points match (rref and Bareiss)" : join(bad);
    });
}

// 6 ------------------------------------------------------------------------
Criterion stability(const Corpus& corpus) {
    return guarded(6, "stability", [&](Criterion& out) {
        std::vector<std::string> bad;
        const Model& e2 = need(corpus, "e2");
        auto d = partial_desingularization(e2.local, DesingOptions{false, false, 6});
        const ChartResult* cx = nullptr;
        for (const auto& c : d.stages.at(0).charts)
            if (c.chart.name == "chart_x") cx = &c;
        if (!cx) throw PreconditionError("e2 has no chart_x");
        if (!cx->unstable || cx->unstable->strings() != std::vector<std::string>{"T_y"})
            bad.push_back("unstable ideal of chart_x is not (T_y)");
        auto verdict = [&](QVector p) { return point_semistable(p, cx->model.ancestry); };
        if (!verdict({0, 1, 0}).semistable) bad.push_back("(0,1,0) should be semistable");
        if (!verdict({0, 1, 5}).semistable) bad.push_back("(0,1,5) should be semistable");
        auto v = verdict({1, 0, 0});
        if (v.semistable || !v.lambda || *v.lambda != IntRow{1}) bad.push_back("(1,0,0) should be unstable with lambda=+1");

        std::size_t configs = 0, disagree = 0;
        for (std::size_t k = 1; k <= 2; ++k)
            for (std::size_t dim = 1; dim <= 3; ++dim) {
                const std::size_t slots = k * dim;
                std::vector<long> e(slots, -2);
                for (;;) {
                    std::vector<IntRow> ws(dim, IntRow(k));
                    for (std::size_t i = 0; i < dim; ++i)
                        for (std::size_t a = 0; a < k; ++a) ws[i][a] = e[i * k + a];
                    ++configs;
                    if (hm_fiber_semistable(ws) != oracle::fiber_semistable_by_limits(ws, k)) ++disagree;
                    std::size_t i = 0;
                    while (i < slots && e[i] == 2) e[i++] = -2;
                    if (i == slots) break;
                    ++e[i];
                }
            }
        if (disagree) bad.push_back(std::to_string(disagree) + " HM disagreements");
        out.pass = bad.empty();
        out.detail = bad.empty() ? "chart_x verdicts match; HM agrees with the limit oracle on " +
                                       std::to_string(configs) + " weight configurations"
                                 : join(bad);
    });
}

// 7 ------------------------------------------------------------------------
Criterion closed_orbits() {
    return guarded(7, "closed-orbit criterion", [&](Criterion& out) {
        std::size_t checks = 0, disagree = 0;
        std::string first;
        auto test = [&](const WeightMatrix& w) {
            const std::size_t n = w.n();
            for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
                std::vector<std::size_t> s;
                oracle::Weights ws;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask >> i & 1UL) s.push_back(i), ws.push_back(w.column(i));
                ++checks;
                if (orbit_is_closed(s, w) != oracle::orbit_closed_by_limits(ws, w.k())) {
                    if (!disagree) first = "support mask " + std::to_string(mask);
                    ++disagree;
                }
            }
        };
        // rank one: every weight vector in [-2,2]^n, n <= 4
        for (std::size_t n = 1; n <= 4; ++n) {
            std::vector<long> e(n, -2);
            for (;;) {
                test(WeightMatrix({e}, n));
                std::size_t i = 0;
                while (i < n && e[i] == 2) e[i++] = -2;
                if (i == n) break;
                ++e[i];
            }
        }
        // rank two: all matrices with entries in [-1,1] for n <= 3, random ones for n = 4
        for (std::size_t n = 1; n <= 3; ++n) {
            std::vector<long> e(2 * n, -1);
            for (;;) {
                IntMatrix rows{IntRow(e.begin(), e.begin() + n), IntRow(e.begin() + n, e.end())};
                test(WeightMatrix(rows, n));
                std::size_t i = 0;
                while (i < e.size() && e[i] == 1) e[i++] = -1;
                if (i == e.size()) break;
                ++e[i];
            }
        }
        std::mt19937_64 rng(kSeed + 7);
        for (int t = 0; t < 400; ++t) {
            IntMatrix rows(2, IntRow(4));
            for (auto& row : rows)
                for (auto& x : row) x = static_cast<long>(rng() % 5) - 2;
            test(WeightMatrix(rows, 4));
        }
        out.pass = disagree == 0;
        out.detail = disagree == 0 ? std::to_string(checks) + " supports agree with the limit oracle"
                                   : std::to_string(disagree) + " disagreements, first at " + first;
    });
}

// 8 ------------------------------------------------------------------------
Criterion omega() {
    return guarded(8, "omega-equivalence", [&](Criterion& out) {
        std::vector<std::string> bad;
        RingPtr r1 = make_ring({"x"});
        WeightMatrix w0({}, 1);
        auto f1 = parse_poly("1/2*x^2", r1), g1 = parse_poly("1/2*x^2 + x^4", r1);
        auto d1 = construct_equivalence(f1, g1, w0);
        auto m1 = dcritical_chart(f1, w0), n1 = dcritical_chart(g1, w0);
        if (!verify_omega_equivalence(m1, n1.section, d1).ok()) bad.push_back("x^2/2 pair");

        RingPtr r2 = make_ring({"x", "y"});
        WeightMatrix w({{1, -1}}, 2);
        auto f2 = parse_poly("1/2*x^2*y^2", r2), g2 = parse_poly("1/2*x^2*y^2 + x^4*y^4", r2);
        auto d2 = construct_equivalence(f2, g2, w);
        auto m2 = dcritical_chart(f2, w), n2 = dcritical_chart(g2, w);
        if (!verify_omega_equivalence(m2, n2.section, d2).ok()) bad.push_back("x^2y^2/2 pair");

        Subtorus g = Subtorus::full(1);
        std::size_t lifted = 0;
        for (const auto& chart : model_charts(m2, g)) {
            auto bf = blowup_local_model(m2, g, chart);
            auto bs = blowup_section(n2, chart);
            OmegaData dd{lift_morphism_to_blowup(d2.a, m2, chart), lift_morphism_to_blowup(d2.b, m2, chart),
                         chart.pullback(d2.hint)};
            auto rep = verify_omega_equivalence(bf, bs, dd);
            if (!rep.ok()) bad.push_back("lift on " + chart.name + ": " + join(rep.witnesses));
            if (chart.name == "chart_x") ++lifted;
        }
        if (lifted == 0) bad.push_back("no chart_x");
        out.pass = bad.empty();
        out.detail = bad.empty() ? "both pairs verify; lifts re-verify on every chart" : join(bad);
    });
}

// 9 ------------------------------------------------------------------------
Criterion obstruction(const Corpus& corpus) {
    return guarded(9, "obstruction assignment", [&](Criterion& out) {
        std::vector<std::string> bad;
        RingPtr r1 = make_ring({"x"});
        WeightMatrix w0({}, 1);
        auto cubic = dcritical_chart(parse_poly("1/3*x^3", r1), w0);
        auto quad = dcritical_chart(parse_poly("1/2*x^2", r1), w0);
        SmallExtension dual{2, {{0, 1}}};
        auto ob = obstruction_assignment(cubic, dual);
        if (ob.vanishes || oracle::lift_exists(cubic.ideal(), dual.series, 2)) bad.push_back("x^3/3 should be obstructed");
        SmallExtension flat{2, {{0, 0}}};
        ob = obstruction_assignment(quad, flat);
        if (!ob.vanishes || !oracle::lift_exists(quad.ideal(), flat.series, 2)) bad.push_back("x^2/2 should lift");

        std::size_t cases = 0, obstructed = 0;
        for (const auto& [name, m] : corpus.models) {
            if (!m.local.has_cofactor) continue;
            const std::size_t n = m.ring->size();
            auto pts = sample_points(buchberger(m.local.ideal()), 4);
            for (const auto& p : pts) {
                std::vector<long> v(n, -1);
                for (;;) {
                    for (std::size_t order = 1; order <= 3; ++order) {
                        SmallExtension ext;
                        ext.m = order;
                        for (std::size_t i = 0; i < n; ++i) {
                            QVector s{p[i]};
                            if (order >= 2) s.push_back(v[i]);
                            if (order >= 3) s.push_back(0);
                            ext.series.push_back(s);
                        }
                        ObstructionResult res;
                        try {
                            res = obstruction_assignment(m.local, ext);
                        } catch (const PreconditionError&) {
                            continue;  // not a point of U over Q[e]/(e^m)
                        }
                        ++cases;
                        if (!res.vanishes) ++obstructed;
                        if (res.vanishes != oracle::lift_exists(m.local.ideal(), ext.series, order))
                            bad.push_back(name + " at order " + std::to_string(order));
                    }
                    std::size_t i = 0;
                    while (i < n && v[i] == 1) v[i++] = -1;
                    if (i == n) break;
                    ++v[i];
                }
            }
        }
        out.pass = bad.empty() && cases > 0;
        std::ostringstream d;
        d << "x^3/3 obstructed, x^2/2 lifts; " << cases << " corpus extensions agree with the lift oracle ("
          << obstructed << " obstructed)";
        out.detail = bad.empty() ? d.str() : join(bad);
    });
}

// 10 -----------------------------------------------------------------------
Criterion family(const Corpus& corpus) {
    return guarded(10, "family commutation", [&](Criterion& out) {
        const Model& m = need(corpus, "family");
        std::vector<std::string> bad;
        std::size_t rows = 0;
        for (long c : {0L, 1L, -2L})
            for (const auto& [name, ok] : fiber_blowup_commutes(m.local, Rational(c))) {
                ++rows;
                if (!ok) bad.push_back(name + " at c=" + std::to_string(c));
            }
        if (!check_fixed_locus_flat(m.local)) bad.push_back("fixed locus not flat");
        out.pass = bad.empty() && rows >= 6;
        out.detail = bad.empty() ? std::to_string(rows) + " chart/fiber pairs commute at c in {0, 1, -2}" : join(bad);
    });
}

// 11 -----------------------------------------------------------------------
Criterion groebner_selfcheck(const Corpus& corpus) {
    return guarded(11, "groebner self-checks", [&](Criterion& out) {
        std::size_t bases = 0, spoly_fail = 0, shuffle_fail = 0;
        auto spoly = [&](const GroebnerBasis& gb) {
            ++bases;
            if (!spolynomials_reduce_to_zero(gb)) ++spoly_fail;
        };
        for (const auto& [name, m] : corpus.models) {
            spoly(buchberger(m.local.ideal()));
            auto d = partial_desingularization(m.local);
            walk(d.stages, "", [&](const ChartResult& c, const std::string&) {
                spoly(c.intrinsic.basis);
                spoly(buchberger(c.model.ideal()));
            });
        }
        std::mt19937_64 rng(kSeed + 11);
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (int t = 0; t < 100; ++t) {
            const std::size_t n = 2 + rng() % 2;
            std::vector<std::string> names;
            for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
            RingPtr ring = make_ring(names);
            std::vector<MultiPoly> gens;
            const std::size_t count = 2 + rng() % 3;
            for (std::size_t g = 0; g < count; ++g) {
                MultiPoly p(ring);
                for (int term = 0; term < 3; ++term) {
                    Monomial mono(n);
                    for (std::size_t i = 0; i < n; ++i) mono[i] = static_cast<Exponent>(rng() % 3);
                    p.add_term(mono, coeff(rng));
                }
                gens.push_back(p);
            }
            Ideal ideal(ring, gens);
            auto gb = buchberger(ideal);
            spoly(gb);
            std::shuffle(gens.begin(), gens.end(), rng);
            Ideal shuffled(ring, gens);
            if (!(buchberger(shuffled) == gb) || !ideal_equal(ideal, shuffled)) ++shuffle_fail;
        }
        out.pass = spoly_fail == 0 && shuffle_fail == 0;
        std::ostringstream d;
        d << bases << " bases pass the S-polynomial check (" << spoly_fail << " fail); 100 shuffles, " << shuffle_fail
          << " mismatches";
        out.detail = d.str();
    });
}

// 12 -----------------------------------------------------------------------
Criterion determinism(const fs::path& dir, const Json& first) {
    return guarded(12, "determinism", [&](Criterion& out) {
        std::string a = dump_report(first);
        std::string b = dump_report(corpus_report(dir));
        out.pass = a == b;
        out.detail = out.pass ? std::to_string(a.size()) + " bytes identical across two runs"
                              : "corpus reports differ between runs";
    });
}

}  // namespace

bool Run::ok() const {
    return std::all_of(criteria.begin(), criteria.end(), [](const Criterion& c) { return c.pass; });
}

Json corpus_report(const fs::path& dir, Exec exec) {
    Corpus corpus = load_corpus(dir);
    Json models = Json::array();
    ReportOptions opt;
    opt.full = true;
    opt.exec = exec;
    for (const auto& [name, m] : corpus.models) models.push_back(report_blowup(m, "blowup " + name + ".kb --full", opt).json);
    return models;
}

Run run_all(const fs::path& dir) {
    Corpus corpus = load_corpus(dir);
    Run run;
    Json models = corpus_report(dir);
    run.criteria.push_back(coinc(corpus));
    run.criteria.push_back(xi_divisibility(corpus));
    run.criteria.push_back(independence(corpus));
    run.criteria.push_back(complex_property(corpus));
    run.criteria.push_back(cohomology(corpus, dir));
    run.criteria.push_back(stability(corpus));
    run.criteria.push_back(closed_orbits());
    run.criteria.push_back(omega());
    run.criteria.push_back(obstruction(corpus));
    run.criteria.push_back(family(corpus));
    run.criteria.push_back(groebner_selfcheck(corpus));
    run.criteria.push_back(determinism(dir, models));

    Json criteria = Json::array();
    for (const auto& c : run.criteria)
        criteria.push_back(Json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    run.report["model"] = "corpus";
    run.report["command"] = "corpus " + dir.filename().string();
    run.report["charts"] = Json::array();
    run.report["ledger"] = Json{{"criteria", criteria}, {"models", models}};
    run.report["version"] = kVersion;
    return run;
}

std::string format_line(const Criterion& c) {
    std::ostringstream out;
    out << (c.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << c.detail;
    return out.str();
}

}  // namespace equiblow::acceptance
