#include "monodromy.hpp"

#include <numeric>

namespace ht {

bool squarefree_product(const std::map<unsigned, unsigned>& factors)
{
    for (auto [d, mult] : factors)
        if (mult > 1) return false;
    return true;
}

static unsigned long order_of(const std::map<unsigned, unsigned>& factors)
{
    unsigned long o = 1;
    for (auto [d, mult] : factors) o = std::lcm(o, static_cast<unsigned long>(d));
    return o;
}

MonodromySystem build(const ExponentPair& p)
{
    Classification cls = classify(p);
    if (!cls.cyclotomic) fail_validation("exponents are not cyclotomic; P and Q are not integral");
    if (!cls.disjoint) fail_validation("alpha and beta share an entry; the pair is not disjoint");
    MonodromySystem m;
    m.pair = p;
    m.P = *exponent_polynomial(p.alpha);
    m.Q = *exponent_polynomial(p.beta);
    m.A = companion(m.P);
    m.B = companion(m.Q);
    std::size_t n = p.n();
    m.C = inverse_unimodular(m.A) * m.B;
    IntMatrix I = IntMatrix::identity(n);
    if (m.C * m.C != I) fail_internal("C is not an involution");
    auto ker = nullspace(to_rat(m.C + I));
    if (ker.size() != 1) fail_internal("ker(C + I) is not one-dimensional");
    if (rank(to_rat(m.C - I)) != 1) fail_internal("C - I does not have rank one");
    RatVec v = ker[0];
    if (v[n - 1] == 0) fail_internal("Cartan vector has zero last coordinate");
    BigRational s = BigRational(2) / v[n - 1];
    for (auto& x : v) x *= s;
    m.v = to_int(v);

    if (m.P[0] == 1 && m.Q[0] == -1) {
        // v = (a_{n-1} + b_{n-1}, ..., a_1 + b_1, 2) with a_i, b_i the coefficients of z^{n-i}
        IntVec closed(n);
        for (std::size_t i = 0; i + 1 < n; ++i) closed[i] = m.P[i + 1] + m.Q[i + 1];
        closed[n - 1] = 2;
        if (closed != m.v) fail_internal("Cartan vector disagrees with the closed form");
        m.closed_form_checked = true;
    }

    if (squarefree_product(cls.alpha_factors)) {
        m.rotation_generator = Generator::A;
        m.rotation_order = order_of(cls.alpha_factors);
    } else if (squarefree_product(cls.beta_factors)) {
        m.rotation_generator = Generator::B;
        m.rotation_order = order_of(cls.beta_factors);
    } else {
        m.rotation_generator = Generator::B;
        m.rotation_order = 0;
    }
    if (m.rotation_order && power(m.g(), m.rotation_order) != I)
        fail_internal("rotation generator does not have the expected order");
    return m;
}

std::vector<IntVec> lattice_basis_vectors(const MonodromySystem& m)
{
    std::vector<IntVec> out;
    IntVec w = m.v;
    for (std::size_t i = 0; i < m.n(); ++i) {
        out.push_back(w);
        w = m.g().apply(w);
    }
    return out;
}

IntMatrix lattice_basis(const MonodromySystem& m)
{
    auto vs = lattice_basis_vectors(m);
    std::size_t n = m.n();
    IntMatrix b(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) b(i, j) = vs[j][i];
    if (determinant(b) == 0) fail_internal("lattice basis vectors are linearly dependent");
    return b;
}

std::vector<IntMatrix> hr_generators(const MonodromySystem& m, std::size_t count)
{
    std::vector<IntMatrix> out;
    IntMatrix gi = IntMatrix::identity(m.n());
    IntMatrix ginv = inverse_unimodular(m.g());
    IntMatrix gi_inv = gi;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(-(gi * m.C * gi_inv));
        gi = m.g() * gi;
        gi_inv = gi_inv * ginv;
    }
    return out;
}

}  // namespace ht
