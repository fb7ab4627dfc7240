#include "spin2d.hpp"

#include "lattice.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

namespace ht {

Mat2 mat2(const BigRational& a, const BigRational& b, const BigRational& c, const BigRational& d)
{
    return Mat2(2, 2, {a, b, c, d});
}

RatMatrix mat3(const std::array<const char*, 9>& entries)
{
    RatMatrix m(3, 3);
    for (std::size_t i = 0; i < 9; ++i) m.a[i] = parse_rational(entries[i]);
    return m;
}

std::string spin_name(SpinMap s) { return s == SpinMap::Rho1 ? "rho1" : "rho2"; }

const RatMatrix& form_q1()
{
    static const RatMatrix q = mat3({"1", "0", "0", "0", "1", "0", "0", "0", "-1"});
    return q;
}

const RatMatrix& form_q2()
{
    static const RatMatrix q = mat3({"0", "0", "-1/2", "0", "1", "0", "-1/2", "0", "0"});
    return q;
}

static RatMatrix rho2(const Mat2& g)
{
    const BigRational &a = g(0, 0), &b = g(0, 1), &c = g(1, 0), &d = g(1, 1);
    return RatMatrix(3, 3, {a * a, 2 * a * c, c * c, a * b, a * d + b * c, c * d, b * b, 2 * b * d, d * d});
}

RatMatrix spin(SpinMap which, const Mat2& g)
{
    if (g.rows != 2 || g.cols != 2) fail_validation("spin map needs a 2 x 2 matrix");
    if (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0) != 1) fail_validation("spin map needs determinant 1");
    if (which == SpinMap::Rho2) return rho2(g);
    static const RatMatrix N = mat3({"1", "0", "1", "0", "1", "0", "-1", "0", "1"});
    static const RatMatrix Ninv = inverse(N);
    return Ninv * rho2(g) * N;
}

static std::vector<Mat2> ints2(std::initializer_list<std::array<long, 4>> ms)
{
    std::vector<Mat2> out;
    for (const auto& m : ms) out.push_back(mat2(BigRational(m[0]), BigRational(m[1]), BigRational(m[2]), BigRational(m[3])));
    return out;
}

static std::vector<AppendixExample> build_examples()
{
    std::vector<AppendixExample> ex(6);
    auto& e1 = ex[0];
    e1.id = 1;
    e1.alpha = {"1/2", "1/2", "1/2"};
    e1.beta = {"0", "0", "0"};
    e1.f = mat3({"1", "0", "-3", "0", "1", "0", "-3", "0", "1"});
    e1.A = mat3({"0", "0", "-1", "1", "0", "-3", "0", "1", "-3"});
    e1.B = mat3({"0", "0", "1", "1", "0", "-3", "0", "1", "3"});
    e1.isotropic = true;
    e1.M = mat3({"-1/8", "1/4", "-1/4", "-1/4", "0", "1/2", "-1/8", "-1/4", "-1/4"});
    e1.scale = 2;
    e1.A_prime = mat3({"1", "8", "16", "0", "1", "4", "0", "0", "1"});
    e1.B_prime = mat3({"1", "0", "0", "1", "1", "0", "1", "2", "1"});
    e1.spin_map = SpinMap::Rho2;
    e1.X = ints2({{1, 0, 4, 1}})[0];
    e1.Y = ints2({{1, 1, 0, 1}})[0];
    e1.congruence_level = 4;
    e1.congruence = ints2({{1, 4, 0, 1}, {-15, 4, -4, 1}, {5, -4, 4, -3}, {9, -16, 4, -7}, {13, -36, 4, -11}});

    auto& e2 = ex[1];
    e2.id = 2;
    e2.alpha = {"1/3", "1/2", "2/3"};
    e2.beta = {"0", "0", "0"};
    e2.f = mat3({"7", "1", "-17", "1", "7", "1", "-17", "1", "7"});
    e2.A = mat3({"0", "0", "-1", "1", "0", "-2", "0", "1", "-2"});
    e2.B = mat3({"0", "0", "1", "1", "0", "-3", "0", "1", "3"});
    e2.isotropic = true;
    e2.M = mat3({"-1/4", "0", "1/12", "-1/2", "1/2", "1/12", "1/4", "-1/2", "1/3"});
    e2.M_corrected = mat3({"1/4", "0", "1/12", "-1/2", "1/2", "1/12", "1/4", "-1/2", "1/3"});
    e2.scale = BigRational(1, 3);
    e2.A_prime = mat3({"1", "-2", "1", "3", "-5", "2", "9", "-12", "4"});
    e2.B_prime = mat3({"1", "-2", "1", "0", "1", "-1", "0", "0", "1"});
    e2.spin_map = SpinMap::Rho2;
    e2.X = ints2({{-1, -3, 1, 2}})[0];
    e2.Y = ints2({{1, 0, -1, 1}})[0];
    e2.congruence_level = 3;
    e2.congruence = ints2({{1, 3, 0, 1}, {-8, 3, -3, 1}, {4, -3, 3, -2}});

    auto& e3 = ex[2];
    e3.id = 3;
    e3.alpha = {"1/4", "1/2", "3/4"};
    e3.beta = {"0", "0", "0"};
    e3.f = mat3({"3", "1", "-5", "1", "3", "1", "-5", "1", "3"});
    e3.A = mat3({"0", "0", "-1", "1", "0", "-1", "0", "1", "-1"});
    e3.B = mat3({"0", "0", "1", "1", "0", "-3", "0", "1", "3"});
    e3.isotropic = true;
    e3.M = mat3({"1/4", "1/4", "1/2", "0", "1/2", "0", "-1/4", "1/4", "1/2"});
    e3.scale = 1;
    e3.A_prime = mat3({"-1", "0", "0", "0", "-1", "0", "0", "0", "1"});
    e3.B_prime = mat3({"1", "-2", "-2", "2", "-1", "-2", "-2", "2", "3"});
    e3.spin_map = SpinMap::Rho1;
    e3.X = ints2({{0, 1, -1, 0}})[0];
    e3.Y = ints2({{0, 1, -1, 2}})[0];
    e3.congruence_level = 2;
    e3.congruence = {e3.X * e3.Y, e3.Y * e3.X};

    auto& e4 = ex[3];
    e4.id = 4;
    e4.alpha = {"1/6", "1/2", "5/6"};
    e4.beta = {"0", "0", "0"};
    e4.f = mat3({"5", "3", "-3", "3", "5", "3", "-3", "3", "5"});
    e4.A = mat3({"0", "0", "-1", "1", "0", "0", "0", "1", "0"});
    e4.B = mat3({"0", "0", "1", "1", "0", "-3", "0", "1", "3"});
    e4.isotropic = true;
    e4.M = mat3({"1/4", "-1/2", "3/4", "1/4", "1/2", "-3/4", "0", "0", "1/2"});
    e4.scale = 1;
    e4.A_prime = mat3({"-1/2", "-1", "1/2", "1", "-1", "1", "1/2", "-1", "3/2"});
    e4.B_prime = mat3({"1/2", "-1", "-1/2", "1", "1", "1", "1/2", "1", "3/2"});
    e4.spin_map = SpinMap::Rho1;
    e4.X = ints2({{1, 1, -1, 0}})[0];
    e4.Y = ints2({{1, 1, 0, 1}})[0];
    e4.congruence_level = 1;
    e4.congruence = {e4.Y * power(e4.X, 4), e4.Y, ints2({{0, 1, -1, 0}})[0]};

    auto& e5 = ex[4];
    e5.id = 5;
    e5.alpha = {"1/3", "1/2", "2/3"};
    e5.beta = {"0", "1/4", "3/4"};
    e5.f = mat3({"5", "-1", "-7", "-1", "5", "-1", "-7", "-1", "5"});
    e5.A = mat3({"0", "0", "-1", "1", "0", "-2", "0", "1", "-2"});
    e5.B = mat3({"0", "0", "1", "1", "0", "-1", "0", "1", "1"});

    auto& e6 = ex[5];
    e6.id = 6;
    e6.alpha = {"1/3", "1/2", "2/3"};
    e6.beta = {"0", "1/6", "5/6"};
    e6.f = mat3({"1", "0", "-2", "0", "1", "0", "-2", "0", "1"});
    e6.A = mat3({"0", "0", "-1", "1", "0", "-2", "0", "1", "-2"});
    e6.B = mat3({"0", "0", "1", "1", "0", "-2", "0", "1", "2"});
    return ex;
}

const AppendixExample& appendix_example(int id)
{
    static const std::vector<AppendixExample> ex = build_examples();
    if (id < 1 || id > 6) fail_validation("appendix example must be 1..6");
    return ex[static_cast<std::size_t>(id - 1)];
}

// ---- words in SL2(Z) -----------------------------------------------------------

namespace {

using M2 = std::array<std::int64_t, 4>;

M2 mul2(const M2& x, const M2& y)
{
    return {checked_add(checked_mul(x[0], y[0]), checked_mul(x[1], y[2])),
            checked_add(checked_mul(x[0], y[1]), checked_mul(x[1], y[3])),
            checked_add(checked_mul(x[2], y[0]), checked_mul(x[3], y[2])),
            checked_add(checked_mul(x[2], y[1]), checked_mul(x[3], y[3]))};
}

M2 inv2(const M2& x) { return {x[3], -x[1], -x[2], x[0]}; }

M2 canon(M2 x)  // representative of +-x
{
    for (auto v : x) {
        if (v == 0) continue;
        if (v < 0)
            for (auto& w : x) w = -w;
        break;
    }
    return x;
}

struct M2Hash {
    std::size_t operator()(const M2& m) const noexcept
    {
        std::uint64_t h = 0x84222325cbf29ce4ull;
        for (auto v : m) h = (h ^ static_cast<std::uint64_t>(v)) * 0x100000001b3ull;
        return static_cast<std::size_t>(h);
    }
};

M2 to_m2(const Mat2& g)
{
    if (g.rows != 2 || g.cols != 2) fail_validation("expected a 2 x 2 matrix");
    M2 r;
    for (std::size_t i = 0; i < 4; ++i) {
        if (g.a[i].get_den() != 1) fail_validation("word search needs integer matrices");
        r[i] = to_i64(g.a[i]);
    }
    return r;
}

struct Tree {
    std::vector<M2> elem;
    std::vector<std::int64_t> parent;
    std::vector<int> letter;
    std::unordered_map<M2, std::size_t, M2Hash> index;  // canonical element -> node
};

}  // namespace

Mat2 evaluate_word(const std::vector<Mat2>& gens, const std::vector<int>& word)
{
    Mat2 r = Mat2::identity(2);
    for (int l : word) {
        std::size_t i = static_cast<std::size_t>(std::abs(l) - 1);
        if (i >= gens.size()) fail_validation("word letter out of range");
        r = r * (l > 0 ? gens[i] : inverse(gens[i]));
    }
    return r;
}

std::string word_str(const std::vector<int>& word, const std::vector<std::string>& names)
{
    if (word.empty()) return "I";
    std::string s;
    for (int l : word) {
        if (!s.empty()) s += " ";
        s += names[static_cast<std::size_t>(std::abs(l) - 1)];
        if (l < 0) s += "^-1";
    }
    return s;
}

WordResult word_search(const std::vector<Mat2>& gens, const Mat2& target, unsigned max_len, std::size_t max_states)
{
    std::vector<M2> g, ginv;
    std::vector<int> letters;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        M2 m = to_m2(gens[i]);
        if (m[0] * m[3] - m[1] * m[2] != 1) fail_validation("word search generators must lie in SL2(Z)");
        letters.push_back(static_cast<int>(i) + 1);
        letters.push_back(-static_cast<int>(i) - 1);
        g.push_back(m);
        ginv.push_back(inv2(m));
    }
    auto mat_of = [&](int l) { return l > 0 ? g[static_cast<std::size_t>(l - 1)] : ginv[static_cast<std::size_t>(-l - 1)]; };
    M2 t = to_m2(target);
    WordResult res;
    Tree fw, bw;  // forward: products of words; backward: target * word^-1
    auto add = [](Tree& tr, const M2& m, std::int64_t parent, int letter) {
        auto [it, fresh] = tr.index.emplace(canon(m), tr.elem.size());
        if (!fresh) return std::size_t(-1);
        tr.elem.push_back(m);
        tr.parent.push_back(parent);
        tr.letter.push_back(letter);
        return it->second;
    };
    add(fw, {1, 0, 0, 1}, -1, 0);
    add(bw, t, -1, 0);
    auto spell = [](const Tree& tr, std::size_t node) {
        std::vector<int> w;
        for (std::int64_t k = static_cast<std::int64_t>(node); tr.parent[static_cast<std::size_t>(k)] >= 0;
             k = tr.parent[static_cast<std::size_t>(k)])
            w.push_back(tr.letter[static_cast<std::size_t>(k)]);
        return w;  // letters from the node back to the root
    };
    auto finish = [&](std::size_t f, std::size_t b) {
        auto w = spell(fw, f);
        std::reverse(w.begin(), w.end());
        auto u = spell(bw, b);  // backward letters prepend, so root-ward order is the word order
        w.insert(w.end(), u.begin(), u.end());
        res.found = true;
        res.word = w;
    };
    if (canon(t) == canon(M2{1, 0, 0, 1})) {
        res.found = true;
        return res;
    }
    std::vector<std::size_t> ffront{0}, bfront{0};
    unsigned df = 0, db = 0;
    while (df + db < max_len && fw.elem.size() + bw.elem.size() < max_states) {
        bool forward = ffront.size() <= bfront.size();
        std::vector<std::size_t> next;
        auto& tr = forward ? fw : bw;
        auto& other = forward ? bw : fw;
        for (std::size_t node : forward ? ffront : bfront) {
            for (int l : letters) {
                M2 m = forward ? mul2(tr.elem[node], mat_of(l)) : mul2(tr.elem[node], mat_of(-l));
                std::size_t k = add(tr, m, static_cast<std::int64_t>(node), l);
                if (k == std::size_t(-1)) continue;
                next.push_back(k);
                auto hit = other.index.find(canon(m));
                if (hit != other.index.end()) {
                    forward ? finish(k, hit->second) : finish(hit->second, k);
                    return res;
                }
            }
        }
        if (next.empty()) break;
        (forward ? ffront : bfront) = std::move(next);
        ++(forward ? df : db);
    }
    return res;
}

bool congruence_check(const Mat2& g, long N)
{
    M2 m = to_m2(g);
    if (N <= 0) fail_validation("congruence level must be positive");
    auto md = [N](std::int64_t x) { return ((x % N) + N) % N; };
    bool plus = md(m[0] - 1) == 0 && md(m[1]) == 0 && md(m[2]) == 0 && md(m[3] - 1) == 0;
    bool minus = md(m[0] + 1) == 0 && md(m[1]) == 0 && md(m[2]) == 0 && md(m[3] + 1) == 0;
    return plus || minus;
}

// ---- isotropy over Q -------------------------------------------------------------

static BigInt squarefree_part(BigInt x)
{
    BigInt sign = x < 0 ? -1 : 1;
    x = abs(x);
    BigInt r = 1;
    for (BigInt p = 2; p * p <= x; ++p) {
        unsigned e = 0;
        while (x % p == 0) {
            x /= p;
            ++e;
        }
        if (e % 2) r *= p;
    }
    return sign * r * x;
}

static std::vector<BigInt> prime_divisors(BigInt x)
{
    std::vector<BigInt> ps;
    x = abs(x);
    for (BigInt p = 2; p * p <= x; ++p)
        if (x % p == 0) {
            ps.push_back(p);
            while (x % p == 0) x /= p;
        }
    if (x > 1) ps.push_back(x);
    return ps;
}

static int legendre(const BigInt& a, const BigInt& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

static int hilbert(BigInt a, BigInt b, const BigInt& p)
{
    unsigned long al = 0, be = 0;
    while (a % p == 0) a /= p, ++al;
    while (b % p == 0) b /= p, ++be;
    if (p == 2) {
        auto eps = [](const BigInt& u) { return static_cast<int>(mpz_fdiv_ui(BigInt((u - 1) / 2).get_mpz_t(), 2)); };
        auto omg = [](const BigInt& u) { return static_cast<int>(mpz_fdiv_ui(BigInt((u * u - 1) / 8).get_mpz_t(), 2)); };
        int e = eps(a) * eps(b) + static_cast<int>(al % 2) * omg(b) + static_cast<int>(be % 2) * omg(a);
        return e % 2 ? -1 : 1;
    }
    int s = 1;
    if ((al * be) % 2 && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) s = -s;
    if (be % 2) s *= legendre(a, p);
    if (al % 2) s *= legendre(b, p);
    return s;
}

static std::vector<BigRational> diagonalize(RatMatrix g)
{
    std::size_t n = g.rows;
    std::vector<BigRational> d;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = n;
        for (std::size_t i = k; i < n; ++i)
            if (g(i, i) != 0) {
                p = i;
                break;
            }
        if (p == n) {
            for (std::size_t i = k; i < n && p == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (g(i, j) != 0) {
                        for (std::size_t c = 0; c < n; ++c) g(i, c) += g(j, c);
                        for (std::size_t r = 0; r < n; ++r) g(r, i) += g(r, j);
                        p = i;
                        break;
                    }
            if (p == n) fail_validation("form is degenerate");
        }
        if (p != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(g(p, c), g(k, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(g(r, p), g(r, k));
        }
        BigRational piv = g(k, k);
        d.push_back(piv);
        for (std::size_t i = k + 1; i < n; ++i) {
            BigRational m = g(i, k) / piv;
            for (std::size_t c = k; c < n; ++c) g(i, c) -= m * g(k, c);
            for (std::size_t r = k; r < n; ++r) g(r, i) -= m * g(r, k);
        }
    }
    return d;
}

bool isotropic_over_q(const RatMatrix& f)
{
    if (f.rows != 3 || f.cols != 3) fail_validation("isotropy test needs a ternary form");
    auto d = diagonalize(f);
    std::vector<BigInt> s;
    for (auto& x : d) s.push_back(squarefree_part(BigInt(x.get_num() * x.get_den())));
    const BigInt &a = s[0], &b = s[1], &c = s[2];
    if ((a > 0) == (b > 0) && (b > 0) == (c > 0)) return false;
    BigInt x = -a * c, y = -b * c;
    std::set<BigInt> primes{2};
    for (auto& p : prime_divisors(a * b * c)) primes.insert(p);
    for (const auto& p : primes)
        if (hilbert(x, y, p) != 1) return false;
    return true;
}

// ---- basis change reports ---------------------------------------------------------

static std::string mat_str(const RatMatrix& m)
{
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows; ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.cols; ++j) s += (j ? "," : "") + number_str(m(i, j));
        s += "]";
    }
    return s + "]";
}

static bool proportional(const RatMatrix& a, const RatMatrix& b)
{
    BigRational r = 0;
    for (std::size_t i = 0; i < a.a.size(); ++i) {
        if ((a.a[i] == 0) != (b.a[i] == 0)) return false;
        if (a.a[i] == 0) continue;
        BigRational q = a.a[i] / b.a[i];
        if (r == 0) r = q;
        else if (q != r) return false;
    }
    return r != 0;
}

BasisChangeReport verify_basis_change(int example_id, unsigned max_word_len)
{
    const AppendixExample& e = appendix_example(example_id);
    BasisChangeReport rep;
    rep.example = e.id;
    auto check = [&](std::string name, bool pass, std::string detail = {}, bool info = false) {
        rep.checks.push_back({std::move(name), pass, std::move(detail), info});
    };
    std::vector<BigRational> al, be;
    for (auto& s : e.alpha) al.push_back(parse_rational(s));
    for (auto& s : e.beta) be.push_back(parse_rational(s));
    ExponentPair pair = ExponentPair::make(al, be);
    check("pair classifies as hyperbolic", classify(pair).hyperbolic);
    MonodromySystem m = build(pair);
    check("Levelt A equals the printed A", to_rat(m.A) == e.A);
    check("Levelt B equals the printed B", to_rat(m.B) == e.B);
    check("A and B preserve f", e.A.transpose() * e.f * e.A == e.f && e.B.transpose() * e.f * e.B == e.f);
    auto forms = invariant_forms(m.A, m.B);
    check("invariant form is unique and proportional to f", forms.size() == 1 && proportional(forms[0], e.f));
    bool iso = isotropic_over_q(e.f);
    rep.anisotropic = !iso;
    check(iso ? "f is isotropic over Q" : "f is anisotropic over Q", iso == e.isotropic);
    if (e.isotropic) {
        const RatMatrix& Q = e.spin_map == SpinMap::Rho1 ? form_q1() : form_q2();
        RatMatrix lhs = (e.M.transpose() * e.f * e.M).scaled(e.scale);
        check("scale * M^T f M = Q", lhs == Q, mat_str(lhs));
        RatMatrix Minv = inverse(e.M);
        RatMatrix a2 = Minv * (e.A * e.A) * e.M, bc = Minv * e.B * e.M;
        check("M^-1 A^2 M = A'", a2 == e.A_prime, mat_str(a2));
        check("M^-1 B M = B'", bc == e.B_prime, mat_str(bc));
        if (e.M_corrected.rows) {
            const RatMatrix& C = e.M_corrected;
            RatMatrix Ci = inverse(C);
            bool ok = (C.transpose() * e.f * C).scaled(e.scale) == Q && Ci * (e.A * e.A) * C == e.A_prime &&
                      Ci * e.B * C == e.B_prime;
            check("corrected M (entry (1,1) sign flipped) satisfies all three identities", ok, mat_str(C), true);
        }
        bool half = true;
        for (const RatMatrix* m : {&e.A_prime, &e.B_prime}) {
            for (const auto& x : m->a)
                if (x.get_den() != 1 && x.get_den() != 2) half = false;
            if (m->transpose() * Q * *m != Q) half = false;
        }
        check("A' and B' lie in O_Q(Z[1/2])", half);
        RatMatrix sx = spin(e.spin_map, e.X), sy = spin(e.spin_map, e.Y);
        check(spin_name(e.spin_map) + "(X) = A'", sx == e.A_prime, mat_str(sx));
        check(spin_name(e.spin_map) + "(Y) = B'", sy == e.B_prime, mat_str(sy));
        std::vector<Mat2> gens{e.X, e.Y};
        for (const auto& c : e.congruence) {
            std::string cs = mat_str(c);
            check("congruent to +-I mod " + std::to_string(e.congruence_level) + ": " + cs,
                  congruence_check(c, e.congruence_level));
            WordResult w = word_search(gens, c, max_word_len);
            bool ok = w.found && w.word.size() <= max_word_len;
            if (ok) {
                Mat2 p = evaluate_word(gens, w.word);
                ok = p == c || p == -c;
            }
            check("word in X, Y of length <= " + std::to_string(max_word_len) + ": " + cs, ok,
                  w.found ? word_str(w.word, {"X", "Y"}) : "not found");
            if (w.found) rep.words.emplace_back(cs, word_str(w.word, {"X", "Y"}));
        }
    }
    rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(), [](const Check& c) { return c.pass || c.informational; });
    return rep;
}

// ---- Dirichlet regions --------------------------------------------------------------

namespace {

using Poly = std::vector<std::array<double, 2>>;

Poly clip(const Poly& poly, const std::array<double, 3>& h)
{
    Poly out;
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % n];
        double fp = h[0] * p[0] + h[1] * p[1] - h[2];
        double fq = h[0] * q[0] + h[1] * q[1] - h[2];
        if (fp <= 0) out.push_back(p);
        if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
            double t = fp / (fp - fq);
            out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
        }
    }
    return out;
}

std::string key_of(const RatMatrix& m)
{
    std::string s;
    for (const auto& x : m.a) {
        s += x.get_str();
        s += ',';
    }
    return s;
}

}  // namespace

DirichletRegion dirichlet_region_3d(const std::vector<RatMatrix>& generators, const RatMatrix& form,
                                    unsigned word_depth, std::array<double, 2> basepoint, double epsilon)
{
    if (form.rows != 3 || form.cols != 3) fail_validation("Dirichlet region needs a ternary form");
    Inertia in = signature_of_symmetric(form);
    if (in.zero != 0 || in.pos == 0 || in.neg == 0) fail_validation("form must be indefinite and nondegenerate");
    double sign = in.neg == 1 ? 1.0 : -1.0;
    Eigen::Matrix3d F;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) F(i, j) = sign * form(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(F);
    // Eigenvalues ascend, so the single negative one is first; move it to the last slot.
    Eigen::Matrix3d T;
    int order[3] = {1, 2, 0};
    for (int c = 0; c < 3; ++c) {
        double lam = es.eigenvalues()(order[c]);
        T.col(c) = es.eigenvectors().col(order[c]) / std::sqrt(std::fabs(lam));
    }
    Eigen::Matrix3d Tinv = T.inverse();

    std::vector<RatMatrix> gens;
    for (const auto& g : generators) {
        if (g.transpose() * form * g != form) fail_validation("generator does not preserve the form");
        gens.push_back(g);
        gens.push_back(inverse(g));
    }
    std::vector<RatMatrix> elems;
    std::set<std::string> seen;
    RatMatrix id = RatMatrix::identity(3);
    seen.insert(key_of(id));
    std::vector<RatMatrix> frontier{id};
    for (unsigned d = 0; d < word_depth; ++d) {
        std::vector<RatMatrix> next;
        for (const auto& x : frontier)
            for (const auto& s : gens) {
                RatMatrix y = x * s;
                if (seen.insert(key_of(y)).second) {
                    elems.push_back(y);
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    std::vector<Eigen::Matrix3d> moves;
    for (const auto& g : elems) {
        Eigen::Matrix3d G;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) G(i, j) = g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
        moves.push_back(Tinv * G * T);
    }

    DirichletRegion r;
    r.epsilon = epsilon;
    r.elements = elems.size();
    for (int attempt = 0; attempt < 2; ++attempt) {
        double k2 = basepoint[0] * basepoint[0] + basepoint[1] * basepoint[1];
        if (k2 >= 1) fail_validation("basepoint must lie inside the Klein disk");
        Eigen::Vector3d p0(basepoint[0], basepoint[1], 1.0);
        p0 /= std::sqrt(1 - k2);
        std::vector<std::array<double, 3>> hs;
        bool fixed = false;
        for (const auto& G : moves) {
            Eigen::Vector3d q = G * p0;
            if (q(2) < 0) q = -q;
            if ((q - p0).norm() < 1e-9 * (1 + p0.norm())) {
                // +-identity acts trivially; anything else fixing p0 forces a new basepoint.
                if ((G - Eigen::Matrix3d::Identity()).norm() < 1e-9 || (G + Eigen::Matrix3d::Identity()).norm() < 1e-9)
                    continue;
                fixed = true;
                break;
            }
            Eigen::Vector3d dlt = q - p0;
            double a = dlt(0), b = dlt(1), c = dlt(2);
            double s = std::hypot(a, b);
            if (s == 0) continue;
            hs.push_back({a / s, b / s, c / s});
        }
        if (fixed) {
            if (attempt == 1) fail_validation("basepoint is fixed by a group element even after the nudge");
            basepoint = {basepoint[0] + 0.0137, basepoint[1] + 0.0071};
            r.nudged = true;
            continue;
        }
        r.basepoint = basepoint;
        r.half_planes = hs;
        Poly poly{{-2, -2}, {2, -2}, {2, 2}, {-2, 2}};
        for (const auto& h : hs) {
            poly = clip(poly, h);
            if (poly.empty()) break;
        }
        r.vertices = poly;
        r.bounded = !poly.empty() && std::all_of(poly.begin(), poly.end(), [&](const std::array<double, 2>& v) {
            return std::hypot(v[0], v[1]) <= 1 - epsilon;
        });
        return r;
    }
    return r;
}

DirichletRegion dirichlet_region(const std::vector<Mat2>& generators, unsigned word_depth,
                                 std::array<double, 2> basepoint, double epsilon)
{
    std::vector<RatMatrix> gens;
    for (const auto& g : generators) gens.push_back(spin(SpinMap::Rho1, g));
    return dirichlet_region_3d(gens, form_q1(), word_depth, basepoint, epsilon);
}

}  // namespace ht
