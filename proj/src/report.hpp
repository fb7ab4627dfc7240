// JSON and CSV serialization of every result type. Integers print as decimal strings,
// rationals as "p/q", so output is exact and byte-deterministic.
#pragma once

#include "graph.hpp"
#include "growth.hpp"
#include "spin2d.hpp"

#include <json.hpp>

namespace ht {

using Json = nlohmann::ordered_json;

Json to_json(const IntMatrix& m);
Json to_json(const RatMatrix& m);
Json to_json(const IntVec& v);
Json to_json(const Vec64& v);
Json rationals_json(const std::vector<BigRational>& xs);

Json pair_json(const ExponentPair& p);
Json classification_json(const ExponentPair& p);
Json family_json(const FamilyId& id, const ExponentPair& p);
Json build_json(const MonodromySystem& m);
Json gram_json(const MonodromySystem& m, const QuadLattice& l);
Json certificate_json(const CertificateReport& r);
Json growth_json(const BallResult& r, const SlopeFit* fit, double margin);
Json landau_json(const ExponentPair& p);
Json appendix_json(const BasisChangeReport& r, const DirichletRegion* region, unsigned depth);
Json dirichlet_json(const DirichletRegion& d);
Json error_json(const std::string& kind, const std::string& message);

std::string dump(const Json& j);

}  // namespace ht
