#include "arith.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>

namespace ht {

void fail_validation(const std::string& msg) { throw Error(ErrorCode::Validation, msg); }
void fail_internal(const std::string& msg) { throw Error(ErrorCode::Internal, msg); }

// ---- rationals --------------------------------------------------------------

static bool all_digits(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigRational parse_rational(const std::string& raw)
{
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    std::string num = s, den = "1";
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    std::string digits = num;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits = digits.substr(1);
    if (!all_digits(digits) || !all_digits(den)) fail_validation("malformed rational: '" + raw + "'");
    BigInt d(den);
    if (d == 0) fail_validation("zero denominator: '" + raw + "'");
    BigRational q(BigInt(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
    return q;
}

std::string rational_str(const BigRational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string number_str(const BigRational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return rational_str(q);
}

RatMatrix to_rat(const IntMatrix& m)
{
    RatMatrix r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = BigRational(m.a[i]);
    return r;
}

RatVec to_rat(const IntVec& v)
{
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = BigRational(v[i]);
    return r;
}

IntMatrix to_int(const RatMatrix& m)
{
    IntMatrix r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) {
        if (m.a[i].get_den() != 1) fail_internal("expected an integral matrix");
        r.a[i] = m.a[i].get_num();
    }
    return r;
}

IntVec to_int(const RatVec& v)
{
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) fail_internal("expected an integral vector");
        r[i] = v[i].get_num();
    }
    return r;
}

bool is_integral(const RatMatrix& m)
{
    return std::all_of(m.a.begin(), m.a.end(), [](const BigRational& x) { return x.get_den() == 1; });
}

// ---- linear algebra ---------------------------------------------------------

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t p = row;
        while (p < m.rows && m(p, col) == 0) ++p;
        if (p == m.rows) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(row, j));
        BigRational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols; ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m(i, col) == 0) continue;
            BigRational f = m(i, col);
            for (std::size_t j = col; j < m.cols; ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<RatVec> nullspace(const RatMatrix& m)
{
    RatMatrix r = m;
    auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(m.cols, BigRational(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const RatMatrix& m)
{
    RatMatrix r = m;
    return rref(r).size();
}

RatMatrix inverse(const RatMatrix& m)
{
    if (!m.square()) fail_internal("inverse of non-square matrix");
    std::size_t n = m.rows;
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) fail_validation("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

IntMatrix inverse_unimodular(const IntMatrix& m)
{
    RatMatrix inv = inverse(to_rat(m));
    if (!is_integral(inv)) fail_internal("matrix is not unimodular");
    return to_int(inv);
}

BigRational determinant(const RatMatrix& m)
{
    if (!m.square()) fail_internal("determinant of non-square matrix");
    RatMatrix a = m;
    std::size_t n = a.rows;
    BigRational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            BigRational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

BigInt determinant(const IntMatrix& m)
{
    BigRational d = determinant(to_rat(m));
    return d.get_num();
}

BigRational bilinear(const RatMatrix& g, const RatVec& x, const RatVec& y)
{
    return dot(x, g.apply(y));
}

BigInt bilinear(const IntMatrix& g, const IntVec& x, const IntVec& y)
{
    return dot(x, g.apply(y));
}

IntVec primitive_integer(const RatVec& v)
{
    BigInt l = 1;
    for (const auto& x : v) l = lcm(l, BigInt(x.get_den()));
    IntVec r(v.size());
    BigInt g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        BigRational s = v[i] * l;
        r[i] = s.get_num();
        g = gcd(g, r[i]);
    }
    if (g == 0) fail_internal("zero vector has no primitive multiple");
    for (auto& x : r) x /= g;
    return r;
}

// ---- polynomials ------------------------------------------------------------

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs))
{
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly IntPoly::monomial_minus_one(unsigned d)
{
    std::vector<BigInt> c(d + 1, BigInt(0));
    c[0] = -1;
    c[d] += 1;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const
{
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> r(c.size() + o.c.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return IntPoly(std::move(r));
}

std::string IntPoly::str() const
{
    if (c.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& x = c[i];
        if (x == 0) continue;
        BigInt ax = abs(x);
        if (!s.empty()) s += x < 0 ? " - " : " + ";
        else if (x < 0) s += "-";
        if (ax != 1 || i == 0) s += ax.get_str();
        if (i >= 1) s += "z";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& d)
{
    if (!d.monic()) fail_internal("divisor must be monic");
    if (p.is_zero()) return IntPoly();
    if (p.degree() < d.degree()) return std::nullopt;
    std::vector<BigInt> rem = p.c;
    std::vector<BigInt> q(p.degree() - d.degree() + 1, BigInt(0));
    for (int i = p.degree() - d.degree(); i >= 0; --i) {
        BigInt lead = rem[i + d.degree()];
        q[i] = lead;
        if (lead == 0) continue;
        for (int j = 0; j <= d.degree(); ++j) rem[i + j] -= lead * d.c[j];
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

unsigned long euler_phi(unsigned long d)
{
    unsigned long r = d;
    for (unsigned long p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        while (d % p == 0) d /= p;
        r -= r / p;
    }
    if (d > 1) r -= r / d;
    return r;
}

int mobius(unsigned long d)
{
    int mu = 1;
    for (unsigned long p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        d /= p;
        if (d % p == 0) return 0;
        mu = -mu;
    }
    if (d > 1) mu = -mu;
    return mu;
}

IntPoly cyclotomic_poly(unsigned d)
{
    if (d == 0) fail_validation("cyclotomic index must be positive");
    static std::mutex mtx;
    static std::map<unsigned, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    // Phi_d = prod_{m | d} (z^m - 1)^{mu(d/m)}
    IntPoly num(std::vector<BigInt>{1}), den(std::vector<BigInt>{1});
    for (unsigned m = 1; m <= d; ++m) {
        if (d % m) continue;
        int mu = mobius(d / m);
        if (mu == 1) num = num * IntPoly::monomial_minus_one(m);
        else if (mu == -1) den = den * IntPoly::monomial_minus_one(m);
    }
    if (!den.monic()) {
        // den is +-monic; normalise sign of both
        for (auto& x : den.c) x = -x;
        for (auto& x : num.c) x = -x;
    }
    auto q = divide_exact(num, den);
    if (!q) fail_internal("cyclotomic construction failed");
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(d, *q);
    return *q;
}

CyclotomicFactorization is_cyclotomic_product(const IntPoly& p)
{
    if (!p.monic()) fail_validation("polynomial must be monic");
    CyclotomicFactorization out;
    IntPoly rest = p;
    unsigned long deg = static_cast<unsigned long>(p.degree());
    // phi(d) >= sqrt(d/2), so every candidate index satisfies d <= 2 deg^2.
    unsigned long dmax = 2 * deg * deg + 2;
    for (unsigned long d = 1; d <= dmax && rest.degree() > 0; ++d) {
        if (euler_phi(d) > static_cast<unsigned long>(rest.degree())) continue;
        IntPoly phi = cyclotomic_poly(static_cast<unsigned>(d));
        while (rest.degree() >= phi.degree()) {
            auto q = divide_exact(rest, phi);
            if (!q) break;
            rest = *q;
            out.indices[static_cast<unsigned>(d)]++;
        }
    }
    out.ok = rest.degree() == 0 && rest.c[0] == 1;
    if (!out.ok) out.indices.clear();
    return out;
}

IntMatrix companion(const IntPoly& p)
{
    if (!p.monic() || p.degree() < 1) fail_internal("companion matrix needs a monic polynomial of degree >= 1");
    std::size_t n = static_cast<std::size_t>(p.degree());
    IntMatrix m(n, n);
    for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -p.c[i];
    return m;
}

// ---- Smith normal form ------------------------------------------------------

SNFResult smith_normal_form(const IntMatrix& m)
{
    std::size_t r = m.rows, c = m.cols;
    IntMatrix s = m;
    IntMatrix left = IntMatrix::identity(r), right = IntMatrix::identity(c);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < c; ++k) std::swap(s(i, k), s(j, k));
        for (std::size_t k = 0; k < r; ++k) std::swap(left(i, k), left(j, k));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < r; ++k) std::swap(s(k, i), s(k, j));
        for (std::size_t k = 0; k < c; ++k) std::swap(right(k, i), right(k, j));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& f) {  // row dst += f row src
        for (std::size_t k = 0; k < c; ++k) s(dst, k) += f * s(src, k);
        for (std::size_t k = 0; k < r; ++k) left(dst, k) += f * left(src, k);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t k = 0; k < r; ++k) s(k, dst) += f * s(k, src);
        for (std::size_t k = 0; k < c; ++k) right(k, dst) += f * right(k, src);
    };

    std::size_t t = 0;
    for (; t < std::min(r, c); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block as pivot
            std::size_t pi = r, pj = c;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j)
                    if (s(i, j) != 0 && (pi == r || abs(s(i, j)) < abs(s(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == r) goto done;
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (s(i, t) == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
                add_row(i, t, -q);
                if (s(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (s(t, j) == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
                add_col(j, t, -q);
                if (s(t, j) != 0) dirty = true;
            }
            if (dirty) continue;
            bool fixed = false;
            for (std::size_t i = t + 1; i < r && !fixed; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        add_row(t, i, 1);
                        fixed = true;
                        break;
                    }
            if (!fixed) break;
        }
        if (s(t, t) < 0) {
            for (std::size_t k = 0; k < c; ++k) s(t, k) = -s(t, k);
            for (std::size_t k = 0; k < r; ++k) left(t, k) = -left(t, k);
        }
    }
done:
    SNFResult out;
    for (std::size_t i = 0; i < std::min(r, c); ++i) out.diagonal.push_back(s(i, i));
    out.left = std::move(left);
    out.right = std::move(right);
    return out;
}

// ---- inertia ----------------------------------------------------------------

Inertia signature_of_symmetric(const RatMatrix& g)
{
    if (!g.square()) fail_validation("signature needs a square matrix");
    std::size_t n = g.rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (g(i, j) != g(j, i)) fail_validation("matrix is not symmetric");
    RatMatrix m = g;
    std::vector<bool> active(n, true);
    Inertia out;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n && piv == n; ++i)
            if (active[i] && m(i, i) != 0) piv = i;
        if (piv == n) {
            // zero diagonal: combine two coordinates with a nonzero off-diagonal entry
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (active[i] && active[j] && i != j && m(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) break;
            for (std::size_t k = 0; k < n; ++k) m(pi, k) += m(pj, k);
            for (std::size_t k = 0; k < n; ++k) m(k, pi) += m(k, pj);
            piv = pi;
        }
        BigRational p = m(piv, piv);
        if (p > 0) ++out.pos;
        else ++out.neg;
        active[piv] = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (!active[j] || m(j, piv) == 0) continue;
            BigRational f = m(j, piv) / p;
            for (std::size_t k = 0; k < n; ++k) m(j, k) -= f * m(piv, k);
            for (std::size_t k = 0; k < n; ++k) m(k, j) -= f * m(k, piv);
        }
    }
    out.zero = n - out.pos - out.neg;
    return out;
}

// ---- short vectors ------------------------------------------------------------

LDL ldl_decompose(const RatMatrix& g)
{
    if (!g.square()) fail_validation("Gram matrix must be square");
    std::size_t n = g.rows;
    RatMatrix w = g;
    LDL out;
    out.mu = RatMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        BigRational di = w(i, i);
        if (di <= 0) fail_validation("Gram matrix is not positive definite");
        out.d.push_back(di);
        for (std::size_t j = i + 1; j < n; ++j) out.mu(j, i) = w(i, j) / di;
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = i + 1; k < n; ++k) w(j, k) -= w(i, j) * w(i, k) / di;
    }
    return out;
}

void enumerate_candidates(const std::vector<double>& d, const std::vector<double>& mu, std::size_t n,
                          const std::vector<double>& offset, double bound,
                          const std::function<bool(const std::vector<std::int64_t>&)>& visit,
                          const EnumerationLimits& limits)
{
    if (n == 0) {
        visit({});
        return;
    }
    const double slack = 1e-9 * std::max(1.0, std::abs(bound));
    const double lim = bound + slack;
    if (lim < 0) return;
    std::vector<std::int64_t> y(n, 0);
    std::vector<double> z(n, 0.0);        // y_i + offset_i
    std::vector<double> partial(n + 1, 0);  // value contributed by levels > i
    std::vector<double> center(n, 0.0);
    std::vector<std::int64_t> hi(n, 0);
    std::uint64_t nodes = 0;

    auto setup = [&](std::size_t i) -> bool {
        double s = offset[i];
        for (std::size_t j = i + 1; j < n; ++j) s += mu[j * n + i] * z[j];
        center[i] = -s;
        double rem = lim - partial[i + 1];
        if (rem < 0) return false;
        double r = std::sqrt(rem / d[i]);
        double lo = std::ceil(center[i] - r - 1e-12);
        double up = std::floor(center[i] + r + 1e-12);
        if (lo > up) return false;
        if (std::abs(lo) > 4e18 || std::abs(up) > 4e18) fail_internal("enumeration range overflow");
        y[i] = static_cast<std::int64_t>(lo);
        hi[i] = static_cast<std::int64_t>(up);
        return true;
    };

    std::size_t i = n - 1;
    partial[n] = 0;
    if (!setup(i)) return;
    for (;;) {
        if (++nodes > limits.max_nodes) throw Error(ErrorCode::Budget, "short-vector enumeration node limit exceeded");
        if (y[i] > hi[i]) {
            if (i == n - 1) return;
            ++i;
            ++y[i];
            continue;
        }
        z[i] = static_cast<double>(y[i]) + offset[i];
        double t = static_cast<double>(y[i]) - center[i];
        partial[i] = partial[i + 1] + d[i] * t * t;
        if (partial[i] > lim) {
            ++y[i];
            continue;
        }
        if (i == 0) {
            if (!visit(y)) return;
            ++y[i];
            continue;
        }
        --i;
        if (!setup(i)) {
            ++i;
            ++y[i];
        }
    }
}

std::vector<std::vector<std::int64_t>> enumerate_short_vectors(const RatMatrix& g, const BigRational& bound,
                                                               const RatVec& coset_offset)
{
    if (bound < 0) fail_validation("bound must be nonnegative");
    if (coset_offset.size() != g.rows) fail_validation("offset dimension mismatch");
    LDL ldl = ldl_decompose(g);
    std::size_t n = g.rows;
    std::vector<double> d(n), mu(n * n, 0.0), off(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = ldl.d[i].get_d();
        off[i] = coset_offset[i].get_d();
        for (std::size_t j = i + 1; j < n; ++j) mu[j * n + i] = ldl.mu(j, i).get_d();
    }
    std::vector<std::vector<std::int64_t>> out;
    enumerate_candidates(d, mu, n, off, bound.get_d(), [&](const std::vector<std::int64_t>& y) {
        RatVec x(n);
        for (std::size_t k = 0; k < n; ++k) x[k] = BigRational(static_cast<long>(y[k])) + coset_offset[k];
        if (bilinear(g, x, x) <= bound) out.push_back(y);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

// ---- checked int64 ------------------------------------------------------------

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Internal, "64-bit overflow in lattice arithmetic");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Internal, "64-bit overflow in lattice arithmetic");
    return r;
}

std::int64_t to_i64(const BigInt& x)
{
    if (!x.fits_slong_p()) throw Error(ErrorCode::Internal, "integer does not fit in 64 bits");
    return static_cast<std::int64_t>(x.get_si());
}

std::int64_t to_i64(const BigRational& x)
{
    if (x.get_den() != 1) fail_internal("expected an integer");
    return to_i64(x.get_num());
}

}  // namespace ht
