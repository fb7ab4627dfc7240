#include "lattice.hpp"

#include <algorithm>

namespace ht {

std::string parity_name(Parity p)
{
    switch (p) {
    case Parity::Even: return "EvenType";
    case Parity::Odd: return "OddType";
    default: return "Mixed";
    }
}

std::string gate_name(GateVerdict v)
{
    return v == GateVerdict::InfiniteIndexCertified ? "InfiniteIndexCertified" : "Inconclusive";
}

bool QuadLattice::hyperbolic() const
{
    std::size_t n = gram.rows;
    return n >= 2 && signature.zero == 0 &&
           ((signature.pos == n - 1 && signature.neg == 1) || (signature.pos == 1 && signature.neg == n - 1));
}

std::vector<RatMatrix> invariant_forms(const IntMatrix& A, const IntMatrix& B)
{
    std::size_t n = A.rows;
    RatMatrix At = to_rat(inverse_unimodular(A).transpose());
    RatMatrix Ar = to_rat(A), Br = to_rat(B);
    // f e_i = At^{i-1} f e_1, so f is linear in c = f e_1; F[k] is f for c = e_k.
    std::vector<RatMatrix> F;
    for (std::size_t k = 0; k < n; ++k) {
        RatMatrix fk(n, n);
        RatVec col(n, BigRational(0));
        col[k] = 1;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) fk(i, j) = col[i];
            col = At.apply(col);
        }
        F.push_back(std::move(fk));
    }
    RatMatrix sys(3 * n * n, n);
    for (std::size_t k = 0; k < n; ++k) {
        RatMatrix ea = Ar.transpose() * F[k] * Ar - F[k];
        RatMatrix eb = Br.transpose() * F[k] * Br - F[k];
        RatMatrix es = F[k] - F[k].transpose();
        for (std::size_t i = 0; i < n * n; ++i) {
            sys(i, k) = ea.a[i];
            sys(n * n + i, k) = eb.a[i];
            sys(2 * n * n + i, k) = es.a[i];
        }
    }
    std::vector<RatMatrix> out;
    for (const auto& c : nullspace(sys)) {
        RatMatrix f(n, n);
        for (std::size_t k = 0; k < n; ++k)
            if (c[k] != 0) f = f + F[k].scaled(c[k]);
        out.push_back(std::move(f));
    }
    return out;
}

static std::vector<BigInt> nontrivial_factors(const IntMatrix& gram)
{
    std::vector<BigInt> out;
    for (const auto& d : smith_normal_form(gram).diagonal) {
        BigInt a = abs(d);
        if (a != 1) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

static Parity classify_parity(const IntMatrix& gram)
{
    bool all_even = true, diag_even = true;
    for (std::size_t i = 0; i < gram.rows; ++i)
        for (std::size_t j = 0; j < gram.cols; ++j) {
            bool even = mpz_even_p(gram(i, j).get_mpz_t());
            if (!even) all_even = false;
            if (i == j && !even) diag_even = false;
        }
    if (all_even) return Parity::Odd;
    if (diag_even) return Parity::Even;
    return Parity::Mixed;
}

QuadLattice from_gram(const IntMatrix& gram)
{
    if (!gram.square() || gram != gram.transpose()) fail_validation("Gram matrix must be square and symmetric");
    QuadLattice l;
    l.gram = gram;
    l.parity = classify_parity(gram);
    l.inv_factors = nontrivial_factors(gram);
    l.signature = signature_of_symmetric(to_rat(gram));
    return l;
}

QuadLattice invariant_form(const MonodromySystem& m)
{
    auto forms = invariant_forms(m.A, m.B);
    if (forms.size() != 1)
        fail_validation("invariant form space has dimension " + std::to_string(forms.size()) +
                        "; the group is not primitive or not irreducible");
    RatMatrix f = forms[0];
    RatVec v = to_rat(m.v);
    BigRational vv = bilinear(f, v, v);
    if (vv == 0) fail_internal("Cartan vector is isotropic for the invariant form");
    f = f.scaled(BigRational(-2) / vv);
    IntMatrix basis = lattice_basis(m);
    RatMatrix g = to_rat(basis).transpose() * f * to_rat(basis);
    if (!is_integral(g)) fail_internal("Gram matrix on the lattice basis is not integral");
    QuadLattice l = from_gram(to_int(g));
    if (l.parity == Parity::Mixed) fail_internal("Gram matrix is neither even nor twice an odd form");
    if (!l.hyperbolic()) fail_internal("invariant form is not hyperbolic");
    l.form = std::move(f);
    l.basis = std::move(basis);
    return l;
}

RootVector make_root(const QuadLattice& l, const IntVec& vec)
{
    if (vec.size() != l.n()) fail_validation("root vector has the wrong dimension");
    BigInt g = 0;
    for (const auto& x : vec) g = gcd(g, x);
    if (g != 1) fail_validation("root vector must be primitive");
    RootVector r;
    r.vec = vec;
    IntVec gv = l.gram.apply(vec);
    r.norm = dot(vec, gv);
    r.is_root = r.norm != 0;
    for (const auto& x : gv)
        if (r.is_root && BigInt(2 * x) % r.norm != 0) r.is_root = false;
    return r;
}

IntMatrix reflection(const IntMatrix& gram, const IntVec& vec)
{
    std::size_t n = gram.rows;
    IntVec gv = gram.apply(vec);
    BigInt k = dot(vec, gv);
    if (k == 0) fail_validation("cannot reflect in an isotropic vector");
    IntMatrix r = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            BigInt num = 2 * vec[i] * gv[j];
            if (num % k != 0) fail_validation("vector is not a root: the reflection is not integral");
            r(i, j) -= num / k;
        }
    return r;
}

IntMatrix reflection(const QuadLattice& l, const RootVector& r)
{
    if (!r.is_root) fail_validation("vector is not a root: the reflection is not integral");
    return reflection(l.gram, r.vec);
}

bool two_elementary(const QuadLattice& l)
{
    return std::all_of(l.inv_factors.begin(), l.inv_factors.end(), [](const BigInt& d) { return d == 2; });
}

const std::vector<std::vector<unsigned>>& nikulin_exceptions(std::size_t n)
{
    static const std::map<std::size_t, std::vector<std::vector<unsigned>>> table = {
        {5, {{2, 3}, {4}, {2, 3, 3, 3}, {2, 2, 2, 4, 4}, {4, 4}, {4, 8}, {4, 16}}},
        {7, {{2, 3, 3}, {2, 2, 4}, {3, 4}, {2, 5}, {2, 3}, {4}}},
        {9, {{8}, {4, 4}, {3, 4}, {4}, {3, 3}}},
        {13, {{4}}},
    };
    static const std::vector<std::vector<unsigned>> none;
    auto it = table.find(n);
    return it == table.end() ? none : it->second;
}

QuotientGate quotient_gate(const QuadLattice& l)
{
    std::size_t n = l.n();
    QuotientGate q;
    if (!l.hyperbolic()) {
        q.reason = "lattice is not hyperbolic";
        return q;
    }
    if (l.parity == Parity::Even) {
        if (n % 2 == 0 || n < 5) {
            q.reason = "even lattice outside the tabulated odd ranks n >= 5";
            return q;
        }
        if (two_elementary(l)) {
            q.reason = "even lattice is two-elementary";
            return q;
        }
        std::vector<unsigned> fs;
        for (const auto& d : l.inv_factors) {
            if (!d.fits_uint_p()) {
                fs.clear();
                fs.push_back(0);
                break;
            }
            fs.push_back(static_cast<unsigned>(d.get_ui()));
        }
        std::sort(fs.begin(), fs.end());
        for (auto row : nikulin_exceptions(n)) {
            std::sort(row.begin(), row.end());
            if (row == fs) {
                q.reason = "invariant factors are in the exceptional list for rank " + std::to_string(n);
                return q;
            }
        }
        q.verdict = GateVerdict::InfiniteIndexCertified;
        q.reason = "even, not two-elementary, invariant factors outside the exceptional list: R2(L) has infinite index";
        return q;
    }
    if (l.parity == Parity::Odd) {
        if (n >= 30) {
            q.verdict = GateVerdict::InfiniteIndexCertified;
            q.reason = "odd type with n >= 30: reflection subgroup has infinite index";
        } else {
            q.reason = "odd type with n < 30";
        }
        return q;
    }
    q.reason = "Gram matrix has mixed parity";
    return q;
}

}  // namespace ht
