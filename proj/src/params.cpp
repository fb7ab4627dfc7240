#include "params.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ht {

ExponentPair ExponentPair::make(std::vector<BigRational> alpha, std::vector<BigRational> beta)
{
    if (alpha.empty()) fail_validation("exponent lists must be nonempty");
    if (alpha.size() != beta.size())
        fail_validation("alpha and beta must have the same length (" + std::to_string(alpha.size()) + " vs " +
                        std::to_string(beta.size()) + ")");
    for (auto* list : {&alpha, &beta})
        for (auto& x : *list) {
            x.canonicalize();
            if (x < 0 || x >= 1) fail_validation("exponent " + number_str(x) + " is outside [0,1)");
        }
    std::sort(alpha.begin(), alpha.end());
    std::sort(beta.begin(), beta.end());
    return ExponentPair{std::move(alpha), std::move(beta)};
}

bool ExponentPair::operator<(const ExponentPair& o) const
{
    if (std::lexicographical_compare(alpha.begin(), alpha.end(), o.alpha.begin(), o.alpha.end())) return true;
    if (std::lexicographical_compare(o.alpha.begin(), o.alpha.end(), alpha.begin(), alpha.end())) return false;
    return std::lexicographical_compare(beta.begin(), beta.end(), o.beta.begin(), o.beta.end());
}

std::string category_name(Category c)
{
    switch (c) {
    case Category::Finite: return "Finite";
    case Category::Symplectic: return "Symplectic";
    case Category::Orthogonal: return "Orthogonal";
    default: return "Undefined";
    }
}

std::optional<IntPoly> exponent_polynomial(const std::vector<BigRational>& xs, std::map<unsigned, unsigned>* factors)
{
    // residue counts grouped by reduced denominator
    std::map<unsigned long, std::map<unsigned long, unsigned>> groups;
    for (const auto& x : xs) {
        if (!x.get_den().fits_ulong_p()) return std::nullopt;
        groups[x.get_den().get_ui()][x.get_num().get_ui()]++;
    }
    IntPoly p(std::vector<BigInt>{1});
    std::map<unsigned, unsigned> found;
    for (const auto& [d, residues] : groups) {
        unsigned long phi = euler_phi(d);
        if (residues.size() != phi) return std::nullopt;
        unsigned mult = residues.begin()->second;
        for (const auto& [a, c] : residues)
            if (c != mult) return std::nullopt;
        IntPoly phi_d = cyclotomic_poly(static_cast<unsigned>(d));
        for (unsigned i = 0; i < mult; ++i) p = p * phi_d;
        found[static_cast<unsigned>(d)] = mult;
    }
    if (factors) *factors = found;
    return p;
}

static int sign_sum(const std::vector<BigRational>& a, const std::vector<BigRational>& b)
{
    int s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        std::size_t m = std::lower_bound(b.begin(), b.end(), a[j]) - b.begin();  // #{b_k < a_j}
        s += ((j + 1 + m) % 2 == 0) ? 1 : -1;
    }
    return s;
}

Classification classify(const ExponentPair& p)
{
    Classification c;
    std::size_t n = p.n();
    auto pa = exponent_polynomial(p.alpha, &c.alpha_factors);
    auto pb = exponent_polynomial(p.beta, &c.beta_factors);
    c.cyclotomic = pa.has_value() && pb.has_value();
    if (!c.cyclotomic) {
        c.alpha_factors.clear();
        c.beta_factors.clear();
    }
    c.disjoint = true;
    for (const auto& x : p.alpha)
        if (std::binary_search(p.beta.begin(), p.beta.end(), x)) c.disjoint = false;
    c.sig_defect = static_cast<unsigned>(std::abs(sign_sum(p.alpha, p.beta)));
    c.sig_defect_dual = static_cast<unsigned>(std::abs(sign_sum(p.beta, p.alpha)));
    if (!c.cyclotomic || !c.disjoint) return c;
    BigInt a0 = (*pa)[0], b0 = (*pb)[0];
    c.c_ratio = (a0 == b0) ? 1 : -1;
    if (c.sig_defect == n) c.category = Category::Finite;
    else if (n % 2 == 0 && c.c_ratio == 1) c.category = Category::Symplectic;
    else c.category = Category::Orthogonal;
    c.hyperbolic = c.category == Category::Orthogonal && n >= 2 && c.sig_defect == n - 2;
    return c;
}

ExponentPair scalar_shift(const ExponentPair& p, const BigRational& d)
{
    auto shift = [&](const std::vector<BigRational>& xs) {
        std::vector<BigRational> out;
        for (const auto& x : xs) {
            BigRational y = x + d;
            BigInt fl;
            mpz_fdiv_q(fl.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
            y -= BigRational(fl);
            out.push_back(y);
        }
        return out;
    };
    return ExponentPair::make(shift(p.alpha), shift(p.beta));
}

// ---- families -----------------------------------------------------------------

std::string family_name(Family f)
{
    static const char* names[] = {"M1", "M2", "M3", "N1", "N2", "N3", "N4"};
    return names[static_cast<int>(f)];
}

Family parse_family(const std::string& s)
{
    for (int i = 0; i < 7; ++i)
        if (family_name(static_cast<Family>(i)) == s) return static_cast<Family>(i);
    fail_validation("unknown family '" + s + "' (expected M1, M2, M3, N1, N2, N3 or N4)");
}

static bool is_m_family(Family f) { return f == Family::M1 || f == Family::M2 || f == Family::M3; }

std::string FamilyId::str() const
{
    std::string s = family_name(family) + "(" + std::to_string(j) + ",";
    if (!is_m_family(family)) s += std::to_string(k) + ",";
    return s + std::to_string(n) + ")";
}

namespace {

using Roots = std::vector<BigRational>;

Roots roots_minus_one(long m)  // roots of z^m - 1
{
    Roots r;
    for (long a = 0; a < m; ++a) r.emplace_back(BigRational(BigInt(a), BigInt(m)));
    for (auto& x : r) x.canonicalize();
    return r;
}

Roots roots_plus_one(long m)  // roots of z^m + 1
{
    Roots r;
    for (long a = 0; a < m; ++a) r.emplace_back(BigRational(BigInt(2 * a + 1), BigInt(2 * m)));
    for (auto& x : r) x.canonicalize();
    return r;
}

Roots concat(Roots a, const Roots& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Multiset difference; fails validation if b is not contained in a.
Roots remove(Roots a, const Roots& b, const FamilyId& id)
{
    for (const auto& x : b) {
        auto it = std::find(a.begin(), a.end(), x);
        if (it == a.end()) fail_validation(id.str() + ": root " + number_str(x) + " is not available to remove");
        a.erase(it);
    }
    return a;
}

// Roots of P_{m,k} = (z^{l(k+1)} - 1)/(z^l - 1) and Q_{m,k} = (z^{lj} - 1)(z^{l(k+1-j)} - 1)/(z^l - 1).
Roots p_mk(long m, long k, const FamilyId& id) { return remove(roots_minus_one(m / k * (k + 1)), roots_minus_one(m / k), id); }
Roots q_mk(long m, long k, long j, const FamilyId& id)
{
    long l = m / k;
    return remove(concat(roots_minus_one(l * j), roots_minus_one(l * (k + 1 - j))), roots_minus_one(l), id);
}

void require(bool ok, const FamilyId& id, const std::string& what)
{
    if (!ok) fail_validation(id.str() + ": " + what);
}

}  // namespace

ExponentPair make_family(const FamilyId& id)
{
    const long j = id.j, k = id.k, n = id.n;
    require(n >= 3 && n % 2 == 1, id, "n must be odd and at least 3");
    const BigRational h(BigInt(1), BigInt(2)), zero(0);
    Roots a, b;
    switch (id.family) {
    case Family::M1:
        require(0 < j && j < n, id, "0 < j < n required");
        require(j % 2 == 1, id, "j must be odd");
        a = concat({zero}, remove(roots_plus_one(n), {h}, id));
        b = concat(concat({h}, remove(roots_minus_one(j), {zero}, id)), roots_plus_one(n - j));
        break;
    case Family::M2: {
        require(0 < j && j < n - 1, id, "0 < j < n-1 required");
        long g = std::gcd(n - 1, j);
        require((j / g) % 2 == 1, id, "j/gcd(n-1,j) must be odd");
        a = concat({h}, roots_plus_one(n - 1));
        b = concat({zero, zero}, remove(concat(roots_minus_one(j), roots_plus_one(n - 1 - j)), {h}, id));
        break;
    }
    case Family::M3:
        require(0 < j && j <= n - 2, id, "0 < j <= n-2 required");
        require(j % 2 == 1, id, "j must be odd");
        a = concat({h, h}, roots_plus_one(n - 2));
        b = concat(concat({zero, zero}, roots_minus_one(j)), roots_plus_one(n - 2 - j));
        break;
    default: {
        long m = id.family == Family::N1 ? n : id.family == Family::N4 ? n - 2 : n - 1;
        require(k >= 1 && m % k == 0, id, "k must divide " + std::to_string(m));
        require(1 <= j && j <= k, id, "1 <= j <= k required");
        require(std::gcd(j, k + 1) == 1, id, "gcd(j,k+1) must be 1");
        Roots p = p_mk(m, k, id), q = q_mk(m, k, j, id);
        if (id.family == Family::N1) {
            a = concat({zero}, remove(p, {h}, id));
            b = concat({h}, remove(q, {zero}, id));
        } else if (id.family == Family::N2) {
            a = concat({zero}, p);
            b = concat({h, h}, remove(q, {zero}, id));
        } else if (id.family == Family::N3) {
            a = concat({h}, p);
            b = concat({zero, zero}, remove(q, {h}, id));
        } else {
            a = concat({h, h}, p);
            b = concat({zero, zero}, q);
        }
    }
    }
    if (a.size() != static_cast<std::size_t>(n) || b.size() != static_cast<std::size_t>(n))
        fail_internal(id.str() + ": family construction produced the wrong length");
    return ExponentPair::make(a, b);
}

std::vector<FamilyId> family_ids(int n)
{
    std::vector<FamilyId> ids;
    if (n < 3 || n % 2 == 0) return ids;
    for (int j = 1; j < n; j += 2) ids.push_back({Family::M1, j, 0, n});
    for (int j = 1; j < n - 1; ++j)
        if ((j / std::gcd(n - 1, j)) % 2 == 1) ids.push_back({Family::M2, j, 0, n});
    for (int j = 1; j <= n - 2; j += 2) ids.push_back({Family::M3, j, 0, n});
    for (Family f : {Family::N1, Family::N2, Family::N3, Family::N4}) {
        int m = f == Family::N1 ? n : f == Family::N4 ? n - 2 : n - 1;
        for (int k = 1; k <= m; ++k) {
            if (m % k) continue;
            for (int j = 1; j <= k; ++j)
                if (std::gcd(j, k + 1) == 1) ids.push_back({f, j, k, n});
        }
    }
    return ids;
}

std::vector<FamilyId> match_family(const ExponentPair& p)
{
    BigInt N = 2;
    for (const auto* list : {&p.alpha, &p.beta})
        for (const auto& x : *list) N = lcm(N, BigInt(x.get_den()));
    std::set<ExponentPair> shifts;
    if (!N.fits_slong_p() || N > 100000) return {};
    long nn = N.get_si();
    for (long s = 0; s < nn; ++s) shifts.insert(scalar_shift(p, BigRational(BigInt(s), BigInt(nn))));
    std::vector<FamilyId> out;
    for (const auto& id : family_ids(static_cast<int>(p.n()))) {
        ExponentPair q;
        try {
            q = make_family(id);
        } catch (const Error&) {
            continue;
        }
        if (shifts.count(q)) out.push_back(id);
    }
    return out;
}

// ---- factorial form -------------------------------------------------------------

FactorialForm to_factorial_form(const ExponentPair& p)
{
    std::map<unsigned, unsigned> fa, fb;
    if (!exponent_polynomial(p.alpha, &fa) || !exponent_polynomial(p.beta, &fb))
        fail_validation("factorial form needs a cyclotomic pair");
    // exponent of Phi_d in P/Q, then of (t^m - 1) via Phi_d = prod_{m|d} (t^m - 1)^{mu(d/m)}
    std::map<unsigned, long> e;
    for (auto [d, c] : fa) e[d] += c;
    for (auto [d, c] : fb) e[d] -= c;
    std::map<unsigned, long> power;
    for (auto [d, ed] : e) {
        if (ed == 0) continue;
        for (unsigned m = 1; m <= d; ++m)
            if (d % m == 0) power[m] += ed * mobius(d / m);
    }
    FactorialForm ff;
    for (auto it = power.rbegin(); it != power.rend(); ++it) {
        for (long i = 0; i < it->second; ++i) ff.a_list.push_back(it->first);
        for (long i = 0; i < -it->second; ++i) ff.b_list.push_back(it->first);
    }
    ff.d = static_cast<int>(ff.b_list.size()) - static_cast<int>(ff.a_list.size());
    return ff;
}

bool landau_integral(const FactorialForm& ff)
{
    // sum floor(a x) - sum floor(b x) is a right-continuous step function; test every breakpoint
    std::set<std::pair<unsigned, unsigned>> points;  // reduced c/q
    for (const auto* list : {&ff.a_list, &ff.b_list})
        for (unsigned q : *list)
            for (unsigned c = 0; c < q; ++c) {
                unsigned g = std::gcd(c, q);
                points.insert({c / g, q / g});
            }
    for (auto [c, q] : points) {
        long s = 0;
        for (unsigned a : ff.a_list) s += static_cast<long>(a) * c / q;
        for (unsigned b : ff.b_list) s -= static_cast<long>(b) * c / q;
        if (s < 0) return false;
    }
    return true;
}

}  // namespace ht
