#pragma once

#include <json.hpp>

#include <string>

#include "wreathrep/gz_rep.hpp"
#include "wreathrep/johnson.hpp"
#include "wreathrep/tableaux.hpp"
#include "wreathrep/wreath.hpp"

namespace wreathrep {

using json = nlohmann::json;

// {"shape": {"<sigma>": [parts]}, "entries": [[sigma,row,col] per number]}
json tableau_to_json(const GTableau& T);
GTableau tableau_from_json(const json& j);

json gdiagram_to_json(const GYoungDiagram& mu);
// Accepts either the {"<sigma>": [parts]} object or a plain array of
// partitions; t is the number of components expected (missing trailing
// components are padded with empty shapes).
GYoungDiagram gdiagram_from_json(const json& j, int t);

// [{"g": [...], "perm": [...], "coef": "p/q"}]
json algebra_to_json(const AlgebraElement& a);
AlgebraElement algebra_from_json(const json& j);

// [{"start_rank": k, "tableau": [[sigma,row,col]...],
//   "vectors": [[{"subset": [...], "coef": "p/q"}...] per vector]}]
json sjb_to_json(const std::vector<SJChain>& sjb);

json check_report_to_json(const CheckReport& rep);

// Representation export: metadata, tableaux, Coxeter generator matrices and
// the slot-wise base group action. Entries are exact strings when the
// scalar kind is exact, [re,im] pairs otherwise.
json rep_to_json(const GZRep& rep, const std::string& group_name, int n);

}  // namespace wreathrep
