// Levelt generators, the pseudo-reflection C = A^-1 B and the Cartan vector.
#pragma once

#include "params.hpp"

namespace ht {

enum class Generator { A, B };

struct MonodromySystem {
    ExponentPair pair;
    IntPoly P, Q;
    IntMatrix A, B, C;
    IntVec v;                                  // spans ker(C + I), last coordinate 2
    Generator rotation_generator = Generator::A;
    unsigned long rotation_order = 0;          // 0 means infinite order
    bool closed_form_checked = false;          // v compared against (a_i + b_i, ..., 2)

    const IntMatrix& g() const { return rotation_generator == Generator::A ? A : B; }
    std::size_t n() const { return pair.n(); }
};

MonodromySystem build(const ExponentPair& p);

// g^0 v, ..., g^{n-1} v as the columns of an n x n matrix.
IntMatrix lattice_basis(const MonodromySystem& m);
std::vector<IntVec> lattice_basis_vectors(const MonodromySystem& m);

// -g^i C g^-i for i = 0 .. count-1, in standard coordinates.
std::vector<IntMatrix> hr_generators(const MonodromySystem& m, std::size_t count);

bool squarefree_product(const std::map<unsigned, unsigned>& factors);

}  // namespace ht
