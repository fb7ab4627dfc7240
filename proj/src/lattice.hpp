// Invariant quadratic form, Gram matrix on L, root vectors, reflections and quotient gates.
#pragma once

#include "monodromy.hpp"

namespace ht {

enum class Parity { Even, Odd, Mixed };
std::string parity_name(Parity p);

struct QuadLattice {
    IntMatrix gram;                   // on the lattice basis
    Parity parity = Parity::Mixed;
    std::vector<BigInt> inv_factors;  // SNF entries > 1, ascending
    Inertia signature;
    RatMatrix form;                   // invariant form in standard coordinates, when known
    IntMatrix basis;                  // lattice basis as columns, when known

    std::size_t n() const { return gram.rows; }
    // Exactly one eigenvalue sign differs from the rest and the form is nondegenerate.
    bool hyperbolic() const;
};

// Every rational f with A^T f A = f, B^T f B = f and f = f^T, via the reduced system in f e_1.
std::vector<RatMatrix> invariant_forms(const IntMatrix& A, const IntMatrix& B);

QuadLattice invariant_form(const MonodromySystem& m);
QuadLattice from_gram(const IntMatrix& gram);

struct RootVector {
    IntVec vec;
    BigInt norm;
    bool is_root = false;  // 2 vec / norm lies in the dual lattice
};
RootVector make_root(const QuadLattice& l, const IntVec& vec);

// Matrix of y -> y - 2 (r, y) / (r, r) r on the lattice basis.
IntMatrix reflection(const QuadLattice& l, const RootVector& r);
IntMatrix reflection(const IntMatrix& gram, const IntVec& vec);

bool two_elementary(const QuadLattice& l);

enum class GateVerdict { InfiniteIndexCertified, Inconclusive };
struct QuotientGate {
    GateVerdict verdict = GateVerdict::Inconclusive;
    std::string reason;
};
std::string gate_name(GateVerdict v);

// Nikulin exceptional invariant-factor multisets for even lattices of odd rank n.
const std::vector<std::vector<unsigned>>& nikulin_exceptions(std::size_t n);
QuotientGate quotient_gate(const QuadLattice& l);

}  // namespace ht
