#pragma once

#include <json.hpp>

#include "corecount/ehrhart.hpp"
#include "corecount/fibre.hpp"
#include "corecount/multiset.hpp"
#include "corecount/partition.hpp"
#include "corecount/polynomial.hpp"
#include "corecount/polytope.hpp"

namespace corecount {

nlohmann::json to_json(const BetaSet& x);
nlohmann::json to_json(const ResidueMultiset& f);
nlohmann::json to_json(const MarginPair& m);
nlohmann::json to_json(const Matching& m);
nlohmann::json to_json(const ConstraintSystem& sys);
nlohmann::json to_json(const FibreProblem& p);
nlohmann::json to_json(const Quasipolynomial& q);
nlohmann::json to_json(const VolumeReport& report);
nlohmann::json to_json(const VerifyReport& report);

FibreProblem fibre_problem_from_json(const nlohmann::json& j);
Quasipolynomial quasipoly_from_json(const nlohmann::json& j);

}  // namespace corecount
