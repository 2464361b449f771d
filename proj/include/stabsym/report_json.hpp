#pragma once

#include <string>

#include <json.hpp>

#include "stabsym/apps.hpp"
#include "stabsym/symalgo.hpp"

namespace stabsym {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "stabsym/1";

/* Angle as an exact fraction of pi when it is one ("3/4*pi"), else radians. */
std::string pi_fraction(double alpha, double tol = 1e-9);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json local_factor_to_json(const LocalFactor& f);
LocalFactor local_factor_from_json(const Json& j);

Json local_symmetry_to_json(const LocalSymmetry& u);
LocalSymmetry local_symmetry_from_json(const Json& j);

/* Top-level report document carrying the "schema" key; parses back exactly. */
Json report_to_json(const SymmetryGroupReport& r);
SymmetryGroupReport report_from_json(const Json& j);

/* 2x2 complex matrix as rows of [re, im] pairs. */
Json matrix_to_json(const Eigen::Matrix2cd& m);
Eigen::Matrix2cd matrix_from_json(const Json& j);

Json kraus_to_json(const KrausSet& ks);
Json code_pair_to_json(const CodePair& cp);
Json projectors_to_json(const ProjectorSet& ps);
Json loccn_to_json(const LOCCNResult& res);

}  // namespace stabsym
