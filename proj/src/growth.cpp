#include "growth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_set>

namespace ht {

namespace {

using Key = std::vector<std::int64_t>;

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept
    {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : k) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

Key mul(const Key& a, const Key& b, std::size_t n)
{
    Key r(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::int64_t x = a[i * n + k];
            if (!x) continue;
            for (std::size_t j = 0; j < n; ++j) r[i * n + j] = checked_add(r[i * n + j], checked_mul(x, b[k * n + j]));
        }
    return r;
}

std::int64_t frob(const Key& a)
{
    std::int64_t s = 0;
    for (auto x : a) s = checked_add(s, checked_mul(x, x));
    return s;
}

std::uint64_t mix(const Key& k)
{
    std::uint64_t h = KeyHash{}(k);
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    return h;
}

bool preserves(const RatMatrix& f, const Key& g, std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n * n; ++i) m.a[i] = BigRational(BigInt(static_cast<long>(g[i])));
    return m.transpose() * f * m == f;
}

}  // namespace

std::vector<double> geometric_grid(double tmin, double tmax, std::size_t points)
{
    if (points < 2 || !(tmin > 0) || !(tmax > tmin)) fail_validation("grid needs 0 < tmin < tmax and at least 2 points");
    std::vector<double> g(points);
    double r = std::log(tmax / tmin) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) g[i] = tmin * std::exp(r * static_cast<double>(i));
    g.back() = tmax;
    return g;
}

BallResult enumerate_ball(const std::vector<IntMatrix>& generators, const std::vector<double>& t_grid,
                          const BallOptions& opt)
{
    if (generators.empty()) fail_validation("at least one generator is required");
    if (opt.margin < 1) fail_validation("margin must be at least 1");
    if (t_grid.empty() || !std::is_sorted(t_grid.begin(), t_grid.end())) fail_validation("T grid must be increasing");
    std::size_t n = generators[0].rows;
    std::vector<Key> gens;
    auto add = [&](const IntMatrix& m) {
        Key k(n * n);
        for (std::size_t i = 0; i < n * n; ++i) k[i] = to_i64(m.a[i]);
        if (std::find(gens.begin(), gens.end(), k) == gens.end()) gens.push_back(k);
    };
    for (const auto& g : generators) {
        if (!g.square() || g.rows != n) fail_validation("generators must be square of equal size");
        add(g);
        add(inverse_unimodular(g));
    }
    // Squared thresholds compared as integers: trace <= floor(T^2).
    std::vector<std::int64_t> thr;
    for (double t : t_grid) thr.push_back(static_cast<std::int64_t>(std::floor(t * t + 1e-9)));
    double pm = opt.margin * t_grid.back();
    std::int64_t prune = static_cast<std::int64_t>(std::floor(pm * pm + 1e-9));

    BallResult r;
    r.t_grid = t_grid;
    r.word_limit = opt.word_limit;
    r.counts.assign(t_grid.size(), 0);
    std::unordered_set<Key, KeyHash> seen;
    Key id(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
    std::vector<Key> frontier{id};
    seen.insert(id);
    auto record = [&](const Key& g) {
        std::int64_t t = frob(g);
        if (t <= thr.back()) {
            if (opt.form && !preserves(*opt.form, g, n)) fail_internal("enumerated element does not preserve the form");
            r.digest += mix(g);
        }
        for (std::size_t i = 0; i < thr.size(); ++i)
            if (t <= thr[i]) ++r.counts[i];
    };
    record(id);
    for (unsigned depth = 1; depth <= opt.word_limit && !frontier.empty(); ++depth) {
        std::vector<Key> next;
        for (const auto& g : frontier)
            for (const auto& s : gens) {
                Key h = mul(g, s, n);
                if (frob(h) > prune) continue;
                if (!seen.insert(h).second) continue;
                record(h);
                next.push_back(std::move(h));
                if (seen.size() >= opt.max_elements) {
                    r.partial = true;
                    r.reached = seen.size();
                    return r;
                }
            }
        if (!next.empty()) r.depth_reached = depth;
        frontier = std::move(next);
    }
    r.closed = frontier.empty();
    r.reached = seen.size();
    return r;
}

SlopeFit fit_slope(const std::vector<double>& t, const std::vector<std::uint64_t>& counts)
{
    if (t.size() != counts.size()) fail_validation("grid and counts differ in length");
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (counts[i] >= 1 && t[i] > 0) {
            xs.push_back(std::log(t[i]));
            ys.push_back(std::log(static_cast<double>(counts[i])));
        }
    std::size_t m = xs.size();
    if (m < 4) fail_validation("slope fit needs at least four grid points with positive counts");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < m; ++i) mx += xs[i], my += ys[i];
    mx /= static_cast<double>(m);
    my /= static_cast<double>(m);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0) fail_validation("slope fit needs distinct T values");
    SlopeFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss = 0;
    for (std::size_t i = 0; i < m; ++i) {
        double e = ys[i] - (f.intercept + f.slope * xs[i]);
        ss += e * e;
    }
    f.residual = std::sqrt(ss / static_cast<double>(m));
    return f;
}

BallResult saturated_ball(const std::vector<IntMatrix>& generators, const std::vector<double>& t_grid,
                          BallOptions opt, unsigned max_word_limit)
{
    BallResult cur = enumerate_ball(generators, t_grid, opt);
    while (!cur.closed && !cur.partial && opt.word_limit + 2 <= max_word_limit) {
        opt.word_limit += 2;
        BallResult nxt = enumerate_ball(generators, t_grid, opt);
        if (nxt.counts == cur.counts) return nxt;
        cur = std::move(nxt);
    }
    return cur;
}

std::string growth_csv(const BallResult& r)
{
    std::string s = "T,count,log10T,log10N\n";
    char buf[160];
    for (std::size_t i = 0; i < r.t_grid.size(); ++i) {
        double ln = r.counts[i] ? std::log10(static_cast<double>(r.counts[i])) : 0.0;
        std::snprintf(buf, sizeof buf, "%.6g,%llu,%.9f,%.9f\n", r.t_grid[i],
                      static_cast<unsigned long long>(r.counts[i]), std::log10(r.t_grid[i]), ln);
        s += buf;
    }
    return s;
}

}  // namespace ht
