// Minimal distance graph X_f: neighbors, bidirectional path search, reflection factorization
// and the thinness certificate.
#pragma once

#include "lattice.hpp"

namespace ht {

using Vec64 = std::vector<std::int64_t>;

struct GraphConfig {
    IntMatrix gram;
    std::vector<std::int64_t> gram64;  // row-major copy for the hot loops
    std::size_t n = 0;
    std::int64_t edge_value = -3;
    int max_depth = 5;
    std::uint64_t node_budget = 1'000'000;

    static GraphConfig from_lattice(const QuadLattice& l, int max_depth = 5, std::uint64_t budget = 1'000'000);
    static GraphConfig from_gram(const IntMatrix& gram, std::int64_t edge_value);
    std::int64_t inner(const Vec64& x, const Vec64& y) const;
};

// Every w with (w, w) = -2 and (u, w) = edge_value, sorted lexicographically.
std::vector<Vec64> neighbors(const GraphConfig& cfg, const Vec64& u);

enum class SearchOutcome { Found, DepthExhausted, BudgetExhausted, ComponentExhausted };
std::string outcome_name(SearchOutcome o);

struct PathResult {
    SearchOutcome outcome = SearchOutcome::DepthExhausted;
    std::vector<Vec64> path;
    std::uint64_t expanded = 0;
};
PathResult find_path(const GraphConfig& cfg, const Vec64& src, const Vec64& dst);

struct EdgeFactor {
    Vec64 root1, root2;  // w_i - w_{i+1} and w_i - k w_{i+1}, k = 2 (even) or 3 (odd)
};
// Verifies every identity exactly; throws Internal on failure.
std::vector<EdgeFactor> factorize_path(const GraphConfig& cfg, const std::vector<Vec64>& path);

// Path (v_a, w, v_{a+1}) for N1(3, n, n) in lattice coordinates, from the explicit norm 2 vector.
std::vector<Vec64> explicit_path_N1_3(int n);

std::vector<IntMatrix> component_generators(const GraphConfig& cfg, const Vec64& u);

enum class CertStatus { ThinCertified, PathFoundGateInconclusive, NoPathFound };
std::string status_name(CertStatus s);

struct CertificateReport {
    CertStatus status = CertStatus::NoPathFound;
    SearchOutcome search = SearchOutcome::DepthExhausted;
    std::int64_t edge_value = 0;
    Vec64 source, target;
    std::vector<Vec64> path;
    std::vector<EdgeFactor> factorization;
    QuotientGate gate;
    std::uint64_t expanded = 0;
    std::string detail;
};

struct CertifyOptions {
    int max_depth = 5;
    std::uint64_t node_budget = 1'000'000;
};
CertificateReport certify(const MonodromySystem& m, const CertifyOptions& opt = {});

Vec64 to_vec64(const IntVec& v);
IntVec to_intvec(const Vec64& v);

}  // namespace ht
