#include "report.hpp"

namespace ht {

namespace {

Json factors_json(const std::map<unsigned, unsigned>& f)
{
    Json j = Json::array();
    for (auto [d, mult] : f) j.push_back({{"index", d}, {"multiplicity", mult}});
    return j;
}

std::string generator_name(Generator g) { return g == Generator::A ? "A" : "B"; }

Json order_json(unsigned long o)
{
    if (o == 0) return "infinite";
    return o;
}

Json point_json(const std::array<double, 2>& p) { return Json::array({p[0], p[1]}); }

}  // namespace

Json to_json(const IntMatrix& m)
{
    Json j = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m(i, c).get_str());
        j.push_back(std::move(row));
    }
    return j;
}

Json to_json(const RatMatrix& m)
{
    Json j = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(number_str(m(i, c)));
        j.push_back(std::move(row));
    }
    return j;
}

Json to_json(const IntVec& v)
{
    Json j = Json::array();
    for (const auto& x : v) j.push_back(x.get_str());
    return j;
}

Json to_json(const Vec64& v)
{
    Json j = Json::array();
    for (auto x : v) j.push_back(std::to_string(x));
    return j;
}

Json rationals_json(const std::vector<BigRational>& xs)
{
    Json j = Json::array();
    for (const auto& x : xs) j.push_back(number_str(x));
    return j;
}

Json pair_json(const ExponentPair& p) { return {{"alpha", rationals_json(p.alpha)}, {"beta", rationals_json(p.beta)}}; }

Json classification_json(const ExponentPair& p)
{
    Classification c = classify(p);
    Json j = pair_json(p);
    j["n"] = p.n();
    j["cyclotomic"] = c.cyclotomic;
    j["disjoint"] = c.disjoint;
    j["category"] = category_name(c.category);
    j["hyperbolic"] = c.hyperbolic;
    j["sig_defect"] = c.sig_defect;
    j["sig_defect_dual"] = c.sig_defect_dual;
    j["c_ratio"] = c.c_ratio;
    j["alpha_factors"] = factors_json(c.alpha_factors);
    j["beta_factors"] = factors_json(c.beta_factors);
    Json fams = Json::array();
    if (c.cyclotomic)
        for (const auto& id : match_family(p)) fams.push_back(id.str());
    j["families"] = fams;
    return j;
}

Json family_json(const FamilyId& id, const ExponentPair& p)
{
    Json j = {{"family", id.str()}};
    Json c = classification_json(p);
    for (auto& [k, v] : c.items()) j[k] = v;
    return j;
}

Json build_json(const MonodromySystem& m)
{
    Json j = pair_json(m.pair);
    j["n"] = m.n();
    j["P"] = to_json(m.P.c);
    j["Q"] = to_json(m.Q.c);
    j["A"] = to_json(m.A);
    j["B"] = to_json(m.B);
    j["C"] = to_json(m.C);
    j["v"] = to_json(m.v);
    j["closed_form_checked"] = m.closed_form_checked;
    j["rotation_generator"] = generator_name(m.rotation_generator);
    j["rotation_order"] = order_json(m.rotation_order);
    return j;
}

Json gram_json(const MonodromySystem& m, const QuadLattice& l)
{
    Json j = pair_json(m.pair);
    j["basis_generator"] = generator_name(m.rotation_generator);
    j["form"] = to_json(l.form);
    j["basis"] = to_json(l.basis);
    j["gram"] = to_json(l.gram);
    j["parity"] = parity_name(l.parity);
    j["invariant_factors"] = to_json(l.inv_factors);
    j["signature"] = {{"positive", l.signature.pos}, {"negative", l.signature.neg}, {"zero", l.signature.zero}};
    j["hyperbolic"] = l.hyperbolic();
    QuotientGate g = quotient_gate(l);
    j["gate"] = {{"verdict", gate_name(g.verdict)}, {"reason", g.reason}};
    return j;
}

Json certificate_json(const CertificateReport& r)
{
    Json path = Json::array();
    for (const auto& w : r.path) path.push_back(to_json(w));
    Json fac = Json::array();
    for (const auto& e : r.factorization) fac.push_back({{"root1", to_json(e.root1)}, {"root2", to_json(e.root2)}});
    return {{"status", status_name(r.status)},
            {"search", outcome_name(r.search)},
            {"edge_value", r.edge_value},
            {"source", to_json(r.source)},
            {"target", to_json(r.target)},
            {"path_length", r.path.empty() ? 0 : r.path.size() - 1},
            {"path", path},
            {"factorization", fac},
            {"gate", {{"verdict", gate_name(r.gate.verdict)}, {"reason", r.gate.reason}}},
            {"expanded", r.expanded},
            {"detail", r.detail}};
}

Json growth_json(const BallResult& r, const SlopeFit* fit, double margin)
{
    Json counts = Json::array();
    for (std::size_t i = 0; i < r.t_grid.size(); ++i) counts.push_back({{"T", r.t_grid[i]}, {"count", r.counts[i]}});
    Json j = {{"semantics", "lower bound"},
              {"word_limit", r.word_limit},
              {"margin", margin},
              {"counts", counts},
              {"reached", r.reached},
              {"depth_reached", r.depth_reached},
              {"closed", r.closed},
              {"partial", r.partial},
              {"digest", r.digest}};
    if (fit)
        j["fit"] = {{"slope", fit->slope}, {"intercept", fit->intercept}, {"residual", fit->residual}};
    else
        j["fit"] = nullptr;
    j["csv"] = growth_csv(r);
    return j;
}

Json landau_json(const ExponentPair& p)
{
    FactorialForm ff = to_factorial_form(p);
    Json j = pair_json(p);
    j["a"] = ff.a_list;
    j["b"] = ff.b_list;
    j["d"] = ff.d;
    j["integral"] = landau_integral(ff);
    return j;
}

Json dirichlet_json(const DirichletRegion& d)
{
    Json hp = Json::array();
    for (const auto& h : d.half_planes) hp.push_back(Json::array({h[0], h[1], h[2]}));
    Json vs = Json::array();
    for (const auto& v : d.vertices) vs.push_back(point_json(v));
    return {{"model", "Klein disk"},
            {"basepoint", point_json(d.basepoint)},
            {"bounded", d.bounded},
            {"epsilon", d.epsilon},
            {"elements", d.elements},
            {"nudged", d.nudged},
            {"vertices", vs},
            {"half_planes", hp}};
}

Json appendix_json(const BasisChangeReport& r, const DirichletRegion* region, unsigned depth)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"informational", c.informational}, {"detail", c.detail}});
    Json words = Json::array();
    for (const auto& [m, w] : r.words) words.push_back({{"matrix", m}, {"word", w}});
    const AppendixExample& e = appendix_example(r.example);
    Json j = {{"example", r.example},
              {"alpha", e.alpha},
              {"beta", e.beta},
              {"anisotropic", r.anisotropic},
              {"ok", r.ok},
              {"checks", checks},
              {"words", words},
              {"depth", depth}};
    j["dirichlet"] = region ? dirichlet_json(*region) : Json(nullptr);
    return j;
}

Json error_json(const std::string& kind, const std::string& message)
{
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ht
