#ifndef STALLINGS_IO_HPP
#define STALLINGS_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "stallings/based_core.hpp"
#include "stallings/bounds.hpp"
#include "stallings/covering.hpp"
#include "stallings/pullback.hpp"

namespace stallings {

using json = nlohmann::ordered_json;

// {"vertices":[ints], "darts":[{"id":int,"inv":int,"src":int}]}
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& doc);

// Graph dump plus {"labels":{dartId: signedInt}}.
json labeled_graph_to_json(const LabeledGraph& lg);
LabeledGraph labeled_graph_from_json(const json& doc);

// Labeled dump plus {"basepoint":int, "rank":int}.
json core_to_json(const BasedCore& core);
BasedCore core_from_json(const json& doc);

// {"rank":r, "generators":["ab", ...]}
json subgroup_spec_to_json(int rank, const std::vector<Word>& gens);
std::pair<int, std::vector<Word>> subgroup_spec_from_json(const json& doc);

// {"H":..,"n1":..,"n2":..,"rank":..,"index":int|"infinite","galois":bool|null}
json invariants_report_json(const BasedCore& core);

// {"components":[{"rank":..,"simply_connected":..,"rep":..}],
//  "sum_rk_minus_1":..}
json intersect_report_json(const PullbackReport& report);

json bound_report_json(const BoundReport& r);

// rk1,rk2,H1,n11,n12,H2,n21,n22,exact,paper_i1,paper_i2,neumann,burns,
// tardos,dicks — bound columns carry the total bound values.
std::string bound_report_csv_header();
std::string bound_report_csv_row(const BoundReport& r);

// Static scatter plot of exact sums against each bound.
std::string bound_reports_svg(const std::vector<BoundReport>& reports);

}  // namespace stallings

#endif
