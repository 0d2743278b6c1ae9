#include "equiblow/desing.hpp"

namespace equiblow {

namespace {

std::optional<Subtorus> first_center(const LocalModel& m, bool* dense) {
    auto scan = enumerate_blowup_centers(m.weights, m.ideal(),
                                         [&](const std::vector<std::size_t>& s) { return support_semistable(m, s); });
    if (dense && scan.dense) *dense = true;
    if (scan.centers.empty()) return std::nullopt;
    return scan.centers.front();
}

Stage blow_up(const LocalModel& m, const Subtorus& r, std::size_t depth, const DesingOptions& opt,
              Desingularization& out) {
    if (depth >= opt.max_depth) throw BudgetExceeded("partial desingularization deeper than " + std::to_string(opt.max_depth));
    Stage stage{r, depth, {}};
    LocalModel mr = restrict_model(m, r);
    Ideal reduced_gens = buchberger(mr.ideal()).ideal();
    for (auto& chart : model_charts(m, r)) {
        ChartResult c;
        c.model = blowup_local_model(m, r, chart);
        c.intrinsic = intrinsic_ideal(reduced_gens, chart);
        out.divisions += c.intrinsic.divisions;
        c.coinc = ideal_equal(c.model.ideal(), c.intrinsic.generators);
        if (r.dim() == 1) c.unstable = buchberger(unstable_ideal(c.model.ancestry));
        if (opt.check_models) c.check = check_weak_local_model(c.model);
        if (opt.recurse) {
            if (auto next = first_center(c.model, &out.dense)) {
                // The blown-up model's torus is R, so R itself is the full torus.
                if (*next == Subtorus::full(c.model.weights.k()))
                    throw TheoremCheckFailure("kirwan-descent", "center " + r.to_string() + " reappears on " +
                                                                    chart.name);
                c.children.push_back(blow_up(c.model, *next, depth + 1, opt, out));
            }
        }
        c.chart = std::move(chart);
        stage.charts.push_back(std::move(c));
    }
    return stage;
}

}  // namespace

bool verify_coinc(const LocalModel& m, const Subtorus& r, const BlowupChart& chart) {
    LocalModel mr = restrict_model(m, r);
    Ideal section(chart.ring, blowup_section(mr, chart));
    auto intr = intrinsic_ideal(buchberger(mr.ideal()).ideal(), chart);
    return ideal_equal(section, intr.generators);
}

std::vector<std::pair<std::string, bool>> verify_coinc(const LocalModel& m, const Subtorus& r) {
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& chart : model_charts(m, r)) out.emplace_back(chart.name, verify_coinc(m, r, chart));
    return out;
}

Desingularization partial_desingularization(const LocalModel& m, const DesingOptions& opt) {
    Desingularization out;
    if (auto r = first_center(m, &out.dense)) out.stages.push_back(blow_up(m, *r, 0, opt, out));
    return out;
}

std::vector<std::pair<std::string, bool>> embedding_independence_check(const Ideal& small, const WeightMatrix& w_small,
                                                                       const Ideal& big, const WeightMatrix& w_big,
                                                                       const std::vector<std::string>& aux) {
    const RingPtr& rs = small.ring();
    const RingPtr& rb = big.ring();
    if (w_small.k() != w_big.k()) throw PreconditionError("embedding check: tori differ");
    for (const auto& name : rs->names()) {
        auto j = rb->require(name);
        if (w_big.column(j) != w_small.column(rs->require(name)))
            throw PreconditionError("embedding check: weights of " + name + " differ");
    }
    for (const auto& a : aux) {
        auto j = rb->require(a);
        for (long x : w_big.column(j))
            if (x != 0) throw PreconditionError("auxiliary coordinate " + a + " must have weight zero");
    }
    if (rb->size() != rs->size() + aux.size()) throw PreconditionError("embedding check: ring is not small + aux");
    auto scan = enumerate_blowup_centers(w_small, small);
    std::vector<std::pair<std::string, bool>> out;
    if (scan.centers.empty()) return out;
    const Subtorus& r = scan.centers.front();
    auto cs = make_charts(rs, w_small, r);
    auto cb = make_charts(rb, w_big, r);
    if (cs.size() != cb.size()) throw PreconditionError("embedding check: chart mismatch");
    for (const auto& chart_s : cs) {
        const BlowupChart* match = nullptr;
        for (const auto& c : cb)
            if (c.name == chart_s.name) match = &c;
        if (!match) throw PreconditionError("embedding check: no chart " + chart_s.name + " in the big embedding");
        auto is = intrinsic_ideal(small, chart_s);
        auto ib = intrinsic_ideal(big, *match);
        Ideal elim = eliminate(ib.generators, aux);
        Ideal moved(chart_s.ring);
        for (const auto& g : elim.generators()) moved.add(g.rename_into(chart_s.ring));
        out.emplace_back(chart_s.name, ideal_equal(moved, is.generators));
    }
    return out;
}

}  // namespace equiblow
