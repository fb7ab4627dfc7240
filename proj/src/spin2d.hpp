// Rank-3 appendix machinery: spin maps, basis-change checks, congruence words and Dirichlet regions.
#pragma once

#include "params.hpp"

#include <array>

namespace ht {

using Mat2 = RatMatrix;  // 2 x 2
Mat2 mat2(const BigRational& a, const BigRational& b, const BigRational& c, const BigRational& d);
RatMatrix mat3(const std::array<const char*, 9>& entries);

enum class SpinMap { Rho1, Rho2 };
std::string spin_name(SpinMap s);

// Rho2 as printed. Rho1 = N^-1 Rho2 N with N = [[1,0,1],[0,1,0],[-1,0,1]], which preserves Q1.
// Both satisfy spin(g h) = spin(h) spin(g).
RatMatrix spin(SpinMap which, const Mat2& g);
const RatMatrix& form_q1();
const RatMatrix& form_q2();

struct AppendixExample {
    int id = 0;
    std::vector<std::string> alpha, beta;
    RatMatrix f, A, B;
    bool isotropic = false;
    // Present for the isotropic examples.
    RatMatrix M, A_prime, B_prime;
    RatMatrix M_corrected;            // nonempty when the printed M fails its identities
    BigRational scale;                // scale * M^T f M = Q
    SpinMap spin_map = SpinMap::Rho2;
    Mat2 X, Y;
    long congruence_level = 0;        // 0: no congruence list
    std::vector<Mat2> congruence;     // matrices that must lie in Gamma(level) and in <X, Y>
};
const AppendixExample& appendix_example(int id);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
    bool informational = false;  // reported but not part of the verdict
};

struct WordResult {
    bool found = false;
    std::vector<int> word;  // +(i+1) for generator i, -(i+1) for its inverse; product equals +-target
};
WordResult word_search(const std::vector<Mat2>& gens, const Mat2& target, unsigned max_len,
                       std::size_t max_states = 4'000'000);
Mat2 evaluate_word(const std::vector<Mat2>& gens, const std::vector<int>& word);
std::string word_str(const std::vector<int>& word, const std::vector<std::string>& names);

bool congruence_check(const Mat2& g, long N);

// Hasse-Minkowski test for a nondegenerate ternary rational form.
bool isotropic_over_q(const RatMatrix& f);

struct BasisChangeReport {
    int example = 0;
    bool anisotropic = false;
    bool ok = false;
    std::vector<Check> checks;
    std::vector<std::pair<std::string, std::string>> words;  // congruence matrix, word in X, Y
};
BasisChangeReport verify_basis_change(int example_id, unsigned max_word_len = 30);

struct DirichletRegion {
    std::array<double, 2> basepoint{0, 0};  // Klein disk coordinates
    std::vector<std::array<double, 3>> half_planes;  // a x + b y <= c
    std::vector<std::array<double, 2>> vertices;
    bool bounded = false;
    double epsilon = 1e-6;
    std::size_t elements = 0;
    bool nudged = false;
};

// Generators acting on the hyperboloid model of a ternary form of signature (2,1) or (1,2).
DirichletRegion dirichlet_region_3d(const std::vector<RatMatrix>& generators, const RatMatrix& form,
                                    unsigned word_depth, std::array<double, 2> basepoint = {0, 0},
                                    double epsilon = 1e-6);
// SL2 generators, carried to SO(Q1) by Rho1.
DirichletRegion dirichlet_region(const std::vector<Mat2>& generators, unsigned word_depth,
                                 std::array<double, 2> basepoint = {0, 0}, double epsilon = 1e-6);

}  // namespace ht
