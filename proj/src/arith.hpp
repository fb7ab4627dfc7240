// Exact integer/rational linear algebra, polynomials, cyclotomics, Smith
// normal form, inertia and short-vector enumeration.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ht {

using BigInt = mpz_class;
using BigRational = mpq_class;

enum class ErrorCode { Validation = 1, Budget = 2, Internal = 3 };

struct Error : std::runtime_error {
    ErrorCode code;
    Error(ErrorCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] void fail_validation(const std::string& msg);
[[noreturn]] void fail_internal(const std::string& msg);

template <class T>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}
    Matrix(std::size_t r, std::size_t c, std::vector<T> data) : rows(r), cols(c), a(std::move(data))
    {
        if (a.size() != r * c) fail_internal("matrix data size mismatch");
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool square() const { return rows == cols; }
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const
    {
        Matrix t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const
    {
        if (cols != o.rows) fail_internal("matrix product dimension mismatch");
        Matrix r(rows, o.cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                const T& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const
    {
        Matrix r = *this;
        for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const
    {
        Matrix r = *this;
        for (std::size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
        return r;
    }

    Matrix operator-() const
    {
        Matrix r = *this;
        for (auto& x : r.a) x = -x;
        return r;
    }

    Matrix scaled(const T& s) const
    {
        Matrix r = *this;
        for (auto& x : r.a) x *= s;
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const
    {
        if (v.size() != cols) fail_internal("matrix-vector dimension mismatch");
        std::vector<T> r(rows, T(0));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> c(rows);
        for (std::size_t i = 0; i < rows; ++i) c[i] = (*this)(i, j);
        return c;
    }
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<BigRational>;
using IntVec = std::vector<BigInt>;
using RatVec = std::vector<BigRational>;

// Rational parsing/printing ("p/q" or "p").
BigRational parse_rational(const std::string& s);
std::string rational_str(const BigRational& q);  // always "p/q"
std::string number_str(const BigRational& q);    // "p" for integers, else "p/q"

RatMatrix to_rat(const IntMatrix& m);
RatVec to_rat(const IntVec& v);
// Converts, failing if any entry is not an integer.
IntMatrix to_int(const RatMatrix& m);
IntVec to_int(const RatVec& v);
bool is_integral(const RatMatrix& m);

template <class T>
Matrix<T> power(const Matrix<T>& m, unsigned long long e)
{
    Matrix<T> r = Matrix<T>::identity(m.rows), b = m;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

RatMatrix inverse(const RatMatrix& m);  // throws on singular
IntMatrix inverse_unimodular(const IntMatrix& m);
BigRational determinant(const RatMatrix& m);
BigInt determinant(const IntMatrix& m);
std::vector<RatVec> nullspace(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

template <class T>
T dot(const std::vector<T>& x, const std::vector<T>& y)
{
    T s(0);
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

// Bilinear form x^T g y.
BigRational bilinear(const RatMatrix& g, const RatVec& x, const RatVec& y);
BigInt bilinear(const IntMatrix& g, const IntVec& x, const IntVec& y);

// Scales a nonzero rational vector to a primitive integer vector (sign kept).
IntVec primitive_integer(const RatVec& v);

// ---- polynomials -----------------------------------------------------------

struct IntPoly {
    std::vector<BigInt> c;  // ascending degree, no trailing zeros

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    static IntPoly monomial_minus_one(unsigned d);  // z^d - 1

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool monic() const { return !c.empty() && c.back() == 1; }
    BigInt operator[](std::size_t i) const { return i < c.size() ? c[i] : BigInt(0); }
    bool operator==(const IntPoly& o) const { return c == o.c; }

    IntPoly operator*(const IntPoly& o) const;
    std::string str() const;
};

// Exact division by a monic divisor; empty result if the division leaves a remainder.
std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& d);

unsigned long euler_phi(unsigned long d);
int mobius(unsigned long d);
IntPoly cyclotomic_poly(unsigned d);

struct CyclotomicFactorization {
    bool ok = false;
    std::map<unsigned, unsigned> indices;  // d -> multiplicity
};
CyclotomicFactorization is_cyclotomic_product(const IntPoly& p);

// Companion matrix with ones on the subdiagonal and last column -(c_0, ..., c_{n-1}).
IntMatrix companion(const IntPoly& p);

// ---- Smith normal form, inertia ---------------------------------------------

struct SNFResult {
    std::vector<BigInt> diagonal;
    IntMatrix left, right;
};
SNFResult smith_normal_form(const IntMatrix& m);

struct Inertia {
    std::size_t pos = 0, neg = 0, zero = 0;
    bool operator==(const Inertia& o) const { return pos == o.pos && neg == o.neg && zero == o.zero; }
};
Inertia signature_of_symmetric(const RatMatrix& g);

// ---- short vectors -----------------------------------------------------------

// Exact decomposition x^T g x = sum_i d_i (x_i + sum_{j>i} mu(j,i) x_j)^2.
struct LDL {
    std::vector<BigRational> d;
    RatMatrix mu;  // mu(j, i) for j > i
};
LDL ldl_decompose(const RatMatrix& g);  // fails validation unless positive definite

// Floating-point enumeration tree over the decomposition; every candidate with
// value within a small relative slack of `bound` is handed to `visit`, which
// performs the exact test. Returning false from visit aborts the enumeration.
struct EnumerationLimits {
    std::uint64_t max_nodes = 50'000'000;
};
void enumerate_candidates(const std::vector<double>& d, const std::vector<double>& mu, std::size_t n,
                          const std::vector<double>& offset, double bound,
                          const std::function<bool(const std::vector<std::int64_t>&)>& visit,
                          const EnumerationLimits& limits = {});

std::vector<std::vector<std::int64_t>> enumerate_short_vectors(const RatMatrix& g, const BigRational& bound,
                                                               const RatVec& coset_offset);

// ---- checked 64-bit helpers for hot loops ------------------------------------

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t to_i64(const BigInt& x);
std::int64_t to_i64(const BigRational& x);

}  // namespace ht
