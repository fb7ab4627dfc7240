// Exponent pairs, classification, the seven hyperbolic families and Landau integrality.
#pragma once

#include "arith.hpp"

namespace ht {

struct ExponentPair {
    std::vector<BigRational> alpha, beta;  // sorted ascending, entries in [0,1)

    // Validates lengths and ranges, then sorts.
    static ExponentPair make(std::vector<BigRational> alpha, std::vector<BigRational> beta);
    std::size_t n() const { return alpha.size(); }
    bool operator==(const ExponentPair& o) const { return alpha == o.alpha && beta == o.beta; }
    bool operator<(const ExponentPair& o) const;
};

enum class Category { Finite, Symplectic, Orthogonal, Undefined };
std::string category_name(Category c);

struct Classification {
    bool cyclotomic = false;
    bool disjoint = false;
    unsigned sig_defect = 0;   // |p - q|
    unsigned sig_defect_dual = 0;  // same sum with the roles of alpha and beta exchanged
    int c_ratio = 0;           // P(0)/Q(0), 0 when not cyclotomic
    Category category = Category::Undefined;
    bool hyperbolic = false;
    std::map<unsigned, unsigned> alpha_factors, beta_factors;  // cyclotomic indices with multiplicity
};

// Integer polynomial prod (z - e^{2 pi i x}) if the exponents form full cyclotomic root sets.
std::optional<IntPoly> exponent_polynomial(const std::vector<BigRational>& xs,
                                           std::map<unsigned, unsigned>* factors = nullptr);

Classification classify(const ExponentPair& p);
ExponentPair scalar_shift(const ExponentPair& p, const BigRational& d);

enum class Family { M1, M2, M3, N1, N2, N3, N4 };
std::string family_name(Family f);
Family parse_family(const std::string& s);

struct FamilyId {
    Family family = Family::M1;
    int j = 0, k = 0, n = 0;  // k unused for M families
    std::string str() const;
    bool operator==(const FamilyId& o) const { return family == o.family && j == o.j && k == o.k && n == o.n; }
};

ExponentPair make_family(const FamilyId& id);
// Every parameter choice admitted by make_family in dimension n.
std::vector<FamilyId> family_ids(int n);
std::vector<FamilyId> match_family(const ExponentPair& p);

struct FactorialForm {
    std::vector<unsigned> a_list, b_list;  // descending
    int d = 0;                             // |b_list| - |a_list|
};
FactorialForm to_factorial_form(const ExponentPair& p);
bool landau_integral(const FactorialForm& ff);

}  // namespace ht
