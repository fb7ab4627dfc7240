// Ball growth probe: counts group elements with trace(g^T g) <= T^2 reached by bounded words.
#pragma once

#include "arith.hpp"

namespace ht {

struct BallOptions {
    unsigned word_limit = 40;
    double margin = 4.0;                  // prune elements with trace(g^T g) > (margin T)^2
    std::size_t max_elements = 20'000'000;
    const RatMatrix* form = nullptr;      // optional invariant form checked on every counted element
};

struct BallResult {
    std::vector<double> t_grid;
    std::vector<std::uint64_t> counts;    // lower bounds for N(T)
    unsigned word_limit = 0;
    std::uint64_t reached = 0;            // distinct elements visited
    unsigned depth_reached = 0;           // last word length that produced a new element
    bool closed = false;                  // search stopped because no new elements appeared
    bool partial = false;                 // element budget hit
    std::uint64_t digest = 0;             // order independent hash of the counted set at the largest T
};

// Generators are closed under inverse before the search.
BallResult enumerate_ball(const std::vector<IntMatrix>& generators, const std::vector<double>& t_grid,
                          const BallOptions& opt = {});

std::vector<double> geometric_grid(double tmin, double tmax, std::size_t points);

struct SlopeFit {
    double slope = 0, intercept = 0, residual = 0;  // residual: root mean square
};
SlopeFit fit_slope(const std::vector<double>& t, const std::vector<std::uint64_t>& counts);

// Raises word_limit by 2 until the counts stop changing; returns the saturated run.
BallResult saturated_ball(const std::vector<IntMatrix>& generators, const std::vector<double>& t_grid,
                          BallOptions opt, unsigned max_word_limit = 200);

std::string growth_csv(const BallResult& r);

}  // namespace ht
