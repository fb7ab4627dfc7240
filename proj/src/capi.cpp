#include "hyperthin/hyperthin.h"

#include "report.hpp"

#include <cstring>
#include <new>
#include <sstream>

struct ht_pair {
    ht::ExponentPair pair;
    std::optional<ht::FamilyId> family;
};

struct ht_system {
    ht::MonodromySystem system;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_kind;

char* copy_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ht_status fail(ht_status st, const std::string& kind, const std::string& msg)
{
    last_kind = kind;
    last_error = msg;
    return st;
}

template <class F>
ht_status guarded(F&& body)
{
    last_error.clear();
    last_kind.clear();
    try {
        return body();
    } catch (const ht::Error& e) {
        switch (e.code) {
        case ht::ErrorCode::Validation: return fail(HT_ERR_VALIDATION, "validation", e.what());
        case ht::ErrorCode::Budget: return fail(HT_ERR_BUDGET, "budget", e.what());
        default: return fail(HT_ERR_INTERNAL, "internal", e.what());
        }
    } catch (const std::bad_alloc&) {
        return fail(HT_ERR_BUDGET, "budget", "out of memory");
    } catch (const std::exception& e) {
        return fail(HT_ERR_INTERNAL, "internal", e.what());
    }
}

std::vector<ht::BigRational> parse_list(const char* s, const char* what)
{
    if (!s) ht::fail_validation(std::string(what) + " list is missing");
    std::vector<ht::BigRational> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(ht::parse_rational(item));
    if (out.empty()) ht::fail_validation(std::string(what) + " list is empty");
    return out;
}

void require_out(const void* p)
{
    if (!p) ht::fail_validation("null argument");
}

}  // namespace

extern "C" {

const char* ht_last_error(void) { return last_error.c_str(); }

char* ht_last_error_json(void)
{
    try {
        return copy_string(ht::dump(ht::error_json(last_kind.empty() ? "none" : last_kind, last_error)));
    } catch (...) {
        return nullptr;
    }
}

void ht_string_free(char* s) { std::free(s); }

ht_status ht_pair_parse(const char* alpha, const char* beta, ht_pair** out)
{
    return guarded([&] {
        require_out(out);
        auto a = parse_list(alpha, "alpha");
        auto b = parse_list(beta, "beta");
        *out = new ht_pair{ht::ExponentPair::make(std::move(a), std::move(b)), std::nullopt};
        return HT_OK;
    });
}

ht_status ht_pair_family(const char* name, int j, int k, int n, ht_pair** out)
{
    return guarded([&] {
        require_out(out);
        if (!name) ht::fail_validation("family name is missing");
        ht::FamilyId id{ht::parse_family(name), j, k, n};
        *out = new ht_pair{ht::make_family(id), id};
        return HT_OK;
    });
}

ht_status ht_pair_appendix(int example, ht_pair** out)
{
    return guarded([&] {
        require_out(out);
        const auto& e = ht::appendix_example(example);
        std::vector<ht::BigRational> a, b;
        for (const auto& s : e.alpha) a.push_back(ht::parse_rational(s));
        for (const auto& s : e.beta) b.push_back(ht::parse_rational(s));
        *out = new ht_pair{ht::ExponentPair::make(std::move(a), std::move(b)), std::nullopt};
        return HT_OK;
    });
}

void ht_pair_free(ht_pair* p) { delete p; }

ht_status ht_classify(const ht_pair* p, char** json)
{
    return guarded([&] {
        require_out(p);
        require_out(json);
        ht::Classification c = ht::classify(p->pair);
        if (!c.disjoint) ht::fail_validation("alpha and beta share an entry; the pair is not disjoint");
        ht::Json j = p->family ? ht::family_json(*p->family, p->pair) : ht::classification_json(p->pair);
        *json = copy_string(ht::dump(j));
        return HT_OK;
    });
}

ht_status ht_landau(const ht_pair* p, char** json)
{
    return guarded([&] {
        require_out(p);
        require_out(json);
        *json = copy_string(ht::dump(ht::landau_json(p->pair)));
        return HT_OK;
    });
}

ht_status ht_system_build(const ht_pair* p, ht_system** out)
{
    return guarded([&] {
        require_out(p);
        require_out(out);
        *out = new ht_system{ht::build(p->pair)};
        return HT_OK;
    });
}

void ht_system_free(ht_system* s) { delete s; }

ht_status ht_build_report(const ht_system* s, char** json)
{
    return guarded([&] {
        require_out(s);
        require_out(json);
        *json = copy_string(ht::dump(ht::build_json(s->system)));
        return HT_OK;
    });
}

ht_status ht_gram_report(const ht_system* s, char** json)
{
    return guarded([&] {
        require_out(s);
        require_out(json);
        ht::QuadLattice l = ht::invariant_form(s->system);
        *json = copy_string(ht::dump(ht::gram_json(s->system, l)));
        return HT_OK;
    });
}

ht_status ht_certify(const ht_system* s, int max_depth, uint64_t node_budget, char** json)
{
    return guarded([&] {
        require_out(s);
        require_out(json);
        if (max_depth < 1) ht::fail_validation("max depth must be positive");
        if (node_budget < 1) ht::fail_validation("node budget must be positive");
        ht::CertifyOptions opt{max_depth, node_budget};
        ht::CertificateReport r = ht::certify(s->system, opt);
        *json = copy_string(ht::dump(ht::certificate_json(r)));
        if (r.path.empty() && r.search == ht::SearchOutcome::BudgetExhausted)
            return fail(HT_ERR_BUDGET, "budget", "node budget exhausted before a path was found");
        return HT_OK;
    });
}

ht_status ht_growth(const ht_system* s, double tmin, double tmax, unsigned points, unsigned word_limit,
                    double margin, char** json, char** csv)
{
    return guarded([&] {
        require_out(s);
        require_out(json);
        auto grid = ht::geometric_grid(tmin, tmax, points);
        ht::QuadLattice l = ht::invariant_form(s->system);
        ht::BallOptions opt;
        opt.margin = margin;
        opt.form = &l.form;
        std::vector<ht::IntMatrix> gens{s->system.A, s->system.B};
        ht::BallResult r;
        if (word_limit == 0) {
            opt.word_limit = 8;
            r = ht::saturated_ball(gens, grid, opt);
        } else {
            opt.word_limit = word_limit;
            r = ht::enumerate_ball(gens, grid, opt);
        }
        std::optional<ht::SlopeFit> fit;
        try {
            fit = ht::fit_slope(r.t_grid, r.counts);
        } catch (const ht::Error&) {
        }
        *json = copy_string(ht::dump(ht::growth_json(r, fit ? &*fit : nullptr, margin)));
        if (csv) *csv = copy_string(ht::growth_csv(r));
        if (r.partial) return fail(HT_ERR_BUDGET, "budget", "element budget reached; counts are partial");
        return HT_OK;
    });
}

ht_status ht_appendix(int example, unsigned depth, char** json)
{
    return guarded([&] {
        require_out(json);
        if (depth < 1) ht::fail_validation("depth must be positive");
        ht::BasisChangeReport r = ht::verify_basis_change(example);
        std::optional<ht::DirichletRegion> region;
        if (r.anisotropic) {
            const auto& e = ht::appendix_example(example);
            region = ht::dirichlet_region_3d({e.A, e.B}, e.f, depth);
        }
        *json = copy_string(ht::dump(ht::appendix_json(r, region ? &*region : nullptr, depth)));
        return HT_OK;
    });
}

}  // extern "C"
