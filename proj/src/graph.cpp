#include "graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace ht {

Vec64 to_vec64(const IntVec& v)
{
    Vec64 r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = to_i64(v[i]);
    return r;
}

IntVec to_intvec(const Vec64& v)
{
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = BigInt(static_cast<long>(v[i]));
    return r;
}

GraphConfig GraphConfig::from_gram(const IntMatrix& gram, std::int64_t edge_value)
{
    GraphConfig c;
    c.gram = gram;
    c.n = gram.rows;
    c.edge_value = edge_value;
    c.gram64.resize(c.n * c.n);
    for (std::size_t i = 0; i < c.n * c.n; ++i) c.gram64[i] = to_i64(gram.a[i]);
    return c;
}

GraphConfig GraphConfig::from_lattice(const QuadLattice& l, int max_depth, std::uint64_t budget)
{
    if (l.parity == Parity::Mixed) fail_validation("minimal distance graph needs an even or odd type lattice");
    GraphConfig c = from_gram(l.gram, l.parity == Parity::Even ? -3 : -4);
    c.max_depth = max_depth;
    c.node_budget = budget;
    return c;
}

static Vec64 gram_apply(const std::vector<std::int64_t>& g, std::size_t n, const Vec64& x)
{
    Vec64 r(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (x[j]) s = checked_add(s, checked_mul(g[i * n + j], x[j]));
        r[i] = s;
    }
    return r;
}

static std::int64_t dot64(const Vec64& x, const Vec64& y)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] && y[i]) s = checked_add(s, checked_mul(x[i], y[i]));
    return s;
}

std::int64_t GraphConfig::inner(const Vec64& x, const Vec64& y) const
{
    return dot64(x, gram_apply(gram64, n, y));
}

// Column-major d x d integer matrices below: m[i * d + j] is row i, column j.

// Unimodular U with r^T U = (h, 0, ..., 0), h = gcd(r) > 0.
static std::vector<std::int64_t> gcd_transform(Vec64 r, std::int64_t& h)
{
    std::size_t n = r.size();
    std::vector<std::int64_t> U(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) U[i * n + i] = 1;
    auto col_axpy = [&](std::size_t dst, std::size_t src, std::int64_t q) {
        for (std::size_t i = 0; i < n; ++i) U[i * n + dst] = checked_add(U[i * n + dst], -checked_mul(q, U[i * n + src]));
    };
    for (;;) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (r[i] != 0 && (p == n || std::llabs(r[i]) < std::llabs(r[p]))) p = i;
        if (p == n) fail_validation("zero functional in neighbor enumeration");
        bool done = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == p || r[j] == 0) continue;
            std::int64_t q = r[j] / r[p];
            r[j] -= q * r[p];
            col_axpy(j, p, q);
            if (r[j] != 0) done = false;
        }
        if (done) {
            if (p != 0) {
                std::swap(r[0], r[p]);
                for (std::size_t i = 0; i < n; ++i) std::swap(U[i * n], U[i * n + p]);
            }
            if (r[0] < 0) {
                r[0] = -r[0];
                for (std::size_t i = 0; i < n; ++i) U[i * n] = -U[i * n];
            }
            h = r[0];
            return U;
        }
    }
}

// LLL on a positive definite integer Gram matrix; T collects the basis change (columns).
static void lll_gram(std::vector<std::int64_t>& M, std::vector<std::int64_t>& T, std::size_t d)
{
    if (d < 2) return;
    std::vector<double> mu(d * d, 0.0), B(d, 0.0);
    auto gs_row = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) {
            double s = static_cast<double>(M[k * d + j]);
            for (std::size_t l = 0; l < j; ++l) s -= mu[j * d + l] * mu[k * d + l] * B[l];
            mu[k * d + j] = s / B[j];
        }
        double s = static_cast<double>(M[k * d + k]);
        for (std::size_t l = 0; l < k; ++l) s -= mu[k * d + l] * mu[k * d + l] * B[l];
        B[k] = s;
    };
    for (std::size_t k = 0; k < d; ++k) gs_row(k);
    auto reduce = [&](std::size_t k, std::size_t j, std::int64_t q) {
        for (std::size_t i = 0; i < d; ++i) M[k * d + i] = checked_add(M[k * d + i], -checked_mul(q, M[j * d + i]));
        for (std::size_t i = 0; i < d; ++i) M[i * d + k] = checked_add(M[i * d + k], -checked_mul(q, M[i * d + j]));
        for (std::size_t i = 0; i < d; ++i) T[i * d + k] = checked_add(T[i * d + k], -checked_mul(q, T[i * d + j]));
        for (std::size_t l = 0; l < j; ++l) mu[k * d + l] -= static_cast<double>(q) * mu[j * d + l];
        mu[k * d + j] -= static_cast<double>(q);
    };
    std::size_t k = 1;
    std::uint64_t steps = 0;
    while (k < d) {
        if (++steps > 10'000'000) fail_internal("lattice reduction did not terminate");
        for (std::size_t jj = k; jj-- > 0;) {
            double m = mu[k * d + jj];
            if (std::fabs(m) > 0.5) reduce(k, jj, static_cast<std::int64_t>(std::llround(m)));
        }
        double m = mu[k * d + k - 1];
        if (B[k] < (0.99 - m * m) * B[k - 1]) {
            for (std::size_t i = 0; i < d; ++i) std::swap(M[k * d + i], M[(k - 1) * d + i]);
            for (std::size_t i = 0; i < d; ++i) std::swap(M[i * d + k], M[i * d + k - 1]);
            for (std::size_t i = 0; i < d; ++i) std::swap(T[i * d + k], T[i * d + k - 1]);
            for (std::size_t r = k - 1; r < d; ++r) gs_row(r);
            k = std::max<std::size_t>(k - 1, 1);
        } else {
            ++k;
        }
    }
}

std::vector<Vec64> neighbors(const GraphConfig& cfg, const Vec64& u)
{
    std::size_t n = cfg.n;
    if (u.size() != n) fail_validation("vertex has the wrong dimension");
    Vec64 gu = gram_apply(cfg.gram64, n, u);
    if (dot64(u, gu) != -2) fail_validation("vertex must have norm -2");
    const std::int64_t e = cfg.edge_value;
    std::int64_t h = 0;
    std::vector<std::int64_t> U = gcd_transform(gu, h);
    if (e % h != 0) return {};
    std::size_t d = n - 1;
    Vec64 w0(n);
    for (std::size_t i = 0; i < n; ++i) w0[i] = checked_mul(U[i * n], e / h);
    // K = U[:, 1:], spanning u-perp in L.
    std::vector<std::int64_t> K(n * d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) K[i * d + j] = U[i * n + j + 1];
    std::vector<std::int64_t> GK(n * d, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::int64_t s = 0;
            for (std::size_t l = 0; l < n; ++l)
                if (K[l * d + j]) s = checked_add(s, checked_mul(cfg.gram64[i * n + l], K[l * d + j]));
            GK[i * d + j] = s;
        }
    std::vector<std::int64_t> M(d * d, 0), T(d * d, 0);
    for (std::size_t a = 0; a < d; ++a) {
        T[a * d + a] = 1;
        for (std::size_t b = 0; b < d; ++b) {
            std::int64_t s = 0;
            for (std::size_t l = 0; l < n; ++l)
                if (K[l * d + a]) s = checked_add(s, checked_mul(K[l * d + a], GK[l * d + b]));
            M[a * d + b] = s;
        }
    }
    lll_gram(M, T, d);
    std::vector<std::int64_t> K2(n * d, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::int64_t s = 0;
            for (std::size_t l = 0; l < d; ++l)
                if (T[l * d + j]) s = checked_add(s, checked_mul(K[i * d + l], T[l * d + j]));
            K2[i * d + j] = s;
        }
    Vec64 gw0 = gram_apply(cfg.gram64, n, w0);
    RatMatrix Mr(d, d);
    RatVec t(d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) Mr(a, b) = BigRational(BigInt(static_cast<long>(M[a * d + b])));
        std::int64_t s = 0;
        for (std::size_t l = 0; l < n; ++l) s = checked_add(s, checked_mul(K2[l * d + a], gw0[l]));
        t[a] = BigRational(BigInt(static_cast<long>(s)));
    }
    RatVec off = inverse(Mr).apply(t);
    LDL ldl = ldl_decompose(Mr);
    std::vector<double> dd(d), mu(d * d, 0.0), offd(d);
    for (std::size_t i = 0; i < d; ++i) {
        dd[i] = ldl.d[i].get_d();
        offd[i] = off[i].get_d();
        for (std::size_t j = i + 1; j < d; ++j) mu[j * d + i] = ldl.mu(j, i).get_d();
    }
    // (w', w') = -2 + e^2 / 2 for the component w' of w orthogonal to u.
    double bound = -2.0 + static_cast<double>(e * e) / 2.0;
    std::vector<Vec64> out;
    Vec64 w(n);
    enumerate_candidates(dd, mu, d, offd, bound, [&](const std::vector<std::int64_t>& z) {
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t s = w0[i];
            for (std::size_t j = 0; j < d; ++j)
                if (z[j]) s = checked_add(s, checked_mul(K2[i * d + j], z[j]));
            w[i] = s;
        }
        if (dot64(gu, w) == e && cfg.inner(w, w) == -2) out.push_back(w);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::string outcome_name(SearchOutcome o)
{
    switch (o) {
    case SearchOutcome::Found: return "Found";
    case SearchOutcome::DepthExhausted: return "DepthExhausted";
    case SearchOutcome::BudgetExhausted: return "BudgetExhausted";
    default: return "ComponentExhausted";
    }
}

namespace {

struct Side {
    std::vector<std::vector<Vec64>> layers;  // each sorted
    std::map<Vec64, Vec64> parent;

    std::vector<Vec64> chain(const Vec64& x) const  // x back to the root
    {
        std::vector<Vec64> c{x};
        for (auto it = parent.find(x); it != parent.end() && !it->second.empty(); it = parent.find(c.back()))
            c.push_back(it->second);
        return c;
    }
};

}  // namespace

PathResult find_path(const GraphConfig& cfg, const Vec64& src, const Vec64& dst)
{
    if (cfg.inner(src, src) != -2 || cfg.inner(dst, dst) != -2) fail_validation("path endpoints must have norm -2");
    PathResult res;
    if (src == dst) {
        res.outcome = SearchOutcome::Found;
        res.path = {src};
        return res;
    }
    Side S, T;
    S.layers.push_back({src});
    S.parent[src] = {};
    T.layers.push_back({dst});
    T.parent[dst] = {};
    std::map<Vec64, std::vector<Vec64>> cache;
    auto nbrs = [&](const Vec64& x) -> const std::vector<Vec64>& {
        auto it = cache.find(x);
        if (it != cache.end()) return it->second;
        if (res.expanded >= cfg.node_budget) throw SearchOutcome::BudgetExhausted;
        ++res.expanded;
        return cache.emplace(x, neighbors(cfg, x)).first->second;
    };
    auto finish = [&](const Vec64& x, const Vec64& y) {
        auto a = S.chain(x);
        std::reverse(a.begin(), a.end());
        auto b = T.chain(y);
        a.insert(a.end(), b.begin(), b.end());
        res.path = std::move(a);
        res.outcome = SearchOutcome::Found;
    };
    try {
        for (int L = 1; L <= cfg.max_depth; ++L) {
            const auto& sa = S.layers.back();
            const auto& tb = T.layers.back();
            if (static_cast<double>(sa.size()) * static_cast<double>(tb.size()) <= 5e7) {
                std::vector<Vec64> gt;
                gt.reserve(tb.size());
                for (const auto& y : tb) gt.push_back(gram_apply(cfg.gram64, cfg.n, y));
                for (const auto& x : sa)
                    for (std::size_t k = 0; k < tb.size(); ++k)
                        if (dot64(x, gt[k]) == cfg.edge_value) {
                            finish(x, tb[k]);
                            return res;
                        }
            } else {
                bool from_s = sa.size() <= tb.size();
                const auto& small = from_s ? sa : tb;
                std::set<Vec64> big(from_s ? tb.begin() : sa.begin(), from_s ? tb.end() : sa.end());
                for (const auto& x : small)
                    for (const auto& y : nbrs(x))
                        if (big.count(y)) {
                            from_s ? finish(x, y) : finish(y, x);
                            return res;
                        }
            }
            if (L == cfg.max_depth) break;
            Side& side = S.layers.back().size() <= T.layers.back().size() ? S : T;
            std::set<Vec64> next;
            std::vector<Vec64> frontier = side.layers.back();
            for (const auto& x : frontier)
                for (const auto& y : nbrs(x))
                    if (!side.parent.count(y)) {
                        side.parent.emplace(y, x);
                        next.insert(y);
                    }
            if (next.empty()) {
                res.outcome = SearchOutcome::ComponentExhausted;
                return res;
            }
            side.layers.emplace_back(next.begin(), next.end());
        }
    } catch (SearchOutcome o) {
        res.outcome = o;
        return res;
    }
    res.outcome = SearchOutcome::DepthExhausted;
    return res;
}

std::vector<EdgeFactor> factorize_path(const GraphConfig& cfg, const std::vector<Vec64>& path)
{
    std::vector<EdgeFactor> out;
    if (path.size() < 2) return out;
    const std::int64_t e = cfg.edge_value;
    const std::int64_t k = e == -3 ? 2 : 3;
    const std::int64_t root_norm = e == -3 ? 2 : 4;
    std::size_t n = cfg.n;
    IntMatrix product = IntMatrix::identity(n);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const Vec64& a = path[i];
        const Vec64& b = path[i + 1];
        if (cfg.inner(a, a) != -2 || cfg.inner(b, b) != -2 || cfg.inner(a, b) != e)
            fail_internal("path edge violates the distance graph condition");
        EdgeFactor f;
        f.root1.resize(n);
        f.root2.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            f.root1[j] = checked_add(a[j], -b[j]);
            f.root2[j] = checked_add(a[j], -checked_mul(k, b[j]));
        }
        if (cfg.inner(f.root1, f.root1) != root_norm || cfg.inner(f.root2, f.root2) != root_norm)
            fail_internal("factorization roots have the wrong norm");
        IntMatrix ra = reflection(cfg.gram, to_intvec(a));
        IntMatrix rb = reflection(cfg.gram, to_intvec(b));
        IntMatrix r1 = reflection(cfg.gram, to_intvec(f.root1));
        IntMatrix r2 = reflection(cfg.gram, to_intvec(f.root2));
        if (ra * rb != r1 * r2) fail_internal("edge factorization identity failed");
        if (r1.apply(to_intvec(a)) != to_intvec(b)) fail_internal("root swap identity failed");
        product = product * r1 * r2;
        out.push_back(std::move(f));
    }
    IntMatrix lhs = reflection(cfg.gram, to_intvec(path.front())) * reflection(cfg.gram, to_intvec(path.back()));
    if (lhs != product) fail_internal("telescoped factorization identity failed");
    return out;
}

std::vector<Vec64> explicit_path_N1_3(int n)
{
    if (n < 7 || n % 2 == 0 || std::gcd(n + 1, 3) != 1)
        fail_validation("explicit N1(3,n,n) path needs n odd, n >= 7 and gcd(n+1, 3) = 1");
    FamilyId id{Family::N1, 3, n, n};
    MonodromySystem m = build(make_family(id));
    QuadLattice l = invariant_form(m);
    GraphConfig cfg = GraphConfig::from_lattice(l);
    bool one = n % 6 == 1;
    int mm = one ? n - 3 : n - 5;
    Vec64 u(n, 0);
    static const std::int64_t pattern[6] = {1, -2, 2, -1, 0, 0};
    for (int i = 1; i <= mm; ++i) u[i - 1] = pattern[(i - 1) % 6];
    if (cfg.inner(u, u) != 2) fail_internal("explicit vector u does not have norm 2");
    std::size_t a = one ? n - 2 : n - 3;  // zero-based index of v_{n-1} or v_{n-2}
    Vec64 va(n, 0), vb(n, 0);
    va[a] = 1;
    vb[a + 1] = 1;
    Vec64 w = u;
    w[a] += 1;
    if (cfg.inner(w, w) != -2 || cfg.inner(w, va) != -3 || cfg.inner(w, vb) != -3)
        fail_internal("explicit path vector w fails its pairings");
    return {va, w, vb};
}

std::vector<IntMatrix> component_generators(const GraphConfig& cfg, const Vec64& u)
{
    std::vector<IntMatrix> out;
    for (const auto& w : neighbors(cfg, u)) {
        Vec64 r(cfg.n);
        for (std::size_t i = 0; i < cfg.n; ++i) r[i] = u[i] - w[i];
        out.push_back(reflection(cfg.gram, to_intvec(r)));
    }
    return out;
}

std::string status_name(CertStatus s)
{
    switch (s) {
    case CertStatus::ThinCertified: return "ThinCertified";
    case CertStatus::PathFoundGateInconclusive: return "PathFoundGateInconclusive";
    default: return "NoPathFound";
    }
}

CertificateReport certify(const MonodromySystem& m, const CertifyOptions& opt)
{
    if (!classify(m.pair).hyperbolic) fail_validation("certificate needs a hyperbolic pair");
    QuadLattice l = invariant_form(m);
    GraphConfig cfg = GraphConfig::from_lattice(l, opt.max_depth, opt.node_budget);
    CertificateReport r;
    r.edge_value = cfg.edge_value;
    std::size_t n = m.n();
    r.source.assign(n, 0);
    r.source[0] = 1;
    // g v in lattice coordinates is the second basis vector; flip to the sheet of v if needed.
    r.target.assign(n, 0);
    r.target[1] = 1;
    if (cfg.inner(r.source, r.target) > 0) r.target[1] = -1;
    r.gate = quotient_gate(l);
    PathResult p = find_path(cfg, r.source, r.target);
    r.search = p.outcome;
    r.expanded = p.expanded;
    if (p.outcome != SearchOutcome::Found) {
        r.status = CertStatus::NoPathFound;
        r.detail = "no path within depth " + std::to_string(opt.max_depth) + ": " + outcome_name(p.outcome);
        return r;
    }
    r.path = p.path;
    r.factorization = factorize_path(cfg, r.path);
    if (m.rotation_order == 0) {
        r.status = CertStatus::PathFoundGateInconclusive;
        r.detail = "rotation generator has infinite order, so the reflection subgroup need not have finite index in H";
    } else if (r.gate.verdict == GateVerdict::InfiniteIndexCertified) {
        r.status = CertStatus::ThinCertified;
        r.detail = "path found and quotient gate certified";
    } else {
        r.status = CertStatus::PathFoundGateInconclusive;
        r.detail = "path found; " + r.gate.reason;
    }
    return r;
}

}  // namespace ht
