#pragma once

#include <string>

#include <json.hpp>

#include "lexcount/biword.hpp"
#include "lexcount/lpp.hpp"
#include "lexcount/moments.hpp"
#include "lexcount/partition.hpp"
#include "lexcount/rsk.hpp"
#include "lexcount/tableau.hpp"

namespace lexcount {

// Key order is fixed so identical values serialize to identical bytes.
using json = nlohmann::ordered_json;

/* Counts travel as decimal strings; they outgrow 64-bit JSON numbers fast. */
std::string dec_string(const mpz_class& v);

/*
 * Plain decimal rendering of a rational with the given number of
 * significant digits (round half up), e.g. "1.08333333333". Falls back
 * to scientific form for extreme magnitudes.
 */
std::string decimal_approx(const mpq_class& v, int significant_digits = 12);

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const SemistandardTableau& t);
SemistandardTableau tableau_from_json(const json& j);

json to_json(const Biword& a);
Biword biword_from_json(const json& j);

json to_json(const PlanarArray& x);
PlanarArray planar_array_from_json(const json& j);

json to_json(const TableauPair& pair);
TableauPair tableau_pair_from_json(const json& j);

json to_json(const PathChain& chain);

json to_json(const ZetaFactorEstimate& est);

json to_json(const LimitDiagnostic& diag, int significant_digits = 12);

} // namespace lexcount
