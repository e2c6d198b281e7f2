#include "stallings/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stallings {

json graph_to_json(const Graph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (VertexId v : g.vertices()) doc["vertices"].push_back(v);
  doc["darts"] = json::array();
  for (DartId d : g.darts()) {
    doc["darts"].push_back(json{{"id", d}, {"inv", g.inv(d)}, {"src", g.src(d)}});
  }
  return doc;
}

Graph graph_from_json(const json& doc) {
  Graph g;
  for (const auto& v : doc.at("vertices")) g.add_vertex(v.get<VertexId>());
  std::map<DartId, std::pair<DartId, VertexId>> darts;
  for (const auto& d : doc.at("darts")) {
    darts[d.at("id").get<DartId>()] = {d.at("inv").get<DartId>(),
                                       d.at("src").get<VertexId>()};
  }
  for (const auto& [d, rec] : darts) {
    auto [di, src] = rec;
    if (di == d) {
      throw std::invalid_argument("involution has unexpected fixed point");
    }
    auto it = darts.find(di);
    if (it == darts.end() || it->second.first != d) {
      throw std::invalid_argument("graph document: inv references not symmetric");
    }
    if (d < di) {
      g.add_arc_with_ids(d, di, src, it->second.second);
    }
  }
  return g;
}

json labeled_graph_to_json(const LabeledGraph& lg) {
  json doc = graph_to_json(lg.graph);
  json labels = json::object();
  for (const auto& [d, lab] : lg.labels) labels[std::to_string(d)] = lab;
  doc["labels"] = std::move(labels);
  return doc;
}

LabeledGraph labeled_graph_from_json(const json& doc) {
  LabeledGraph lg;
  lg.graph = graph_from_json(doc);
  for (const auto& [key, value] : doc.at("labels").items()) {
    lg.labels[std::stoi(key)] = value.get<int>();
  }
  if (lg.labels.size() != lg.graph.num_darts()) {
    throw std::invalid_argument("labeled graph document: label/dart mismatch");
  }
  return lg;
}

json core_to_json(const BasedCore& core) {
  json doc = labeled_graph_to_json(core.labeled());
  doc["basepoint"] = core.basepoint();
  doc["rank"] = core.base_rank();
  return doc;
}

BasedCore core_from_json(const json& doc) {
  return BasedCore::from_graph(labeled_graph_from_json(doc),
                               doc.at("basepoint").get<VertexId>(),
                               doc.at("rank").get<int>());
}

json subgroup_spec_to_json(int rank, const std::vector<Word>& gens) {
  json doc;
  doc["rank"] = rank;
  doc["generators"] = json::array();
  for (const Word& w : gens) doc["generators"].push_back(word_to_string(w));
  return doc;
}

std::pair<int, std::vector<Word>> subgroup_spec_from_json(const json& doc) {
  int rank = doc.at("rank").get<int>();
  std::vector<Word> gens;
  for (const auto& g : doc.at("generators")) {
    gens.push_back(parse_word(g.get<std::string>(), rank));
  }
  return {rank, gens};
}

json invariants_report_json(const BasedCore& core) {
  SpineInvariants inv = spine_invariants(core);
  json doc;
  doc["H"] = inv.H;
  doc["n1"] = inv.n1;
  doc["n2"] = inv.n2;
  doc["rank"] = inv.rank;
  auto deg = index(core);
  if (deg) {
    doc["index"] = *deg;
    doc["galois"] = is_galois(core).galois;
  } else {
    doc["index"] = "infinite";
    doc["galois"] = nullptr;
  }
  return doc;
}

json intersect_report_json(const PullbackReport& report) {
  json doc;
  doc["components"] = json::array();
  for (const PullbackComponent& pc : report.components) {
    doc["components"].push_back(json{{"rank", pc.rank},
                                     {"simply_connected", pc.simply_connected},
                                     {"rep", word_to_string(pc.rep)}});
  }
  doc["sum_rk_minus_1"] = intersection_rank_sum(report);
  return doc;
}

json bound_report_json(const BoundReport& r) {
  auto invariants = [](const SpineInvariants& inv) {
    return json{{"H", inv.H}, {"n1", inv.n1}, {"n2", inv.n2}, {"rank", inv.rank}};
  };
  json doc;
  doc["inv1"] = invariants(r.inv1);
  doc["inv2"] = invariants(r.inv2);
  doc["exact_sum"] = r.exact_sum;
  doc["paper_bound_i1"] = r.paper_bound_i1;
  doc["paper_bound_i2"] = r.paper_bound_i2;
  doc["paper_bound_best"] = r.paper_bound_best;
  doc["eps_neumann"] = r.eps_neumann;
  doc["eps_burns"] = r.eps_burns;
  doc["eps_tardos"] = r.eps_tardos;
  doc["eps_dicks"] = r.eps_dicks;
  doc["total_neumann"] = r.total_neumann;
  doc["total_burns"] = r.total_burns;
  doc["total_tardos"] = r.total_tardos;
  doc["total_dicks"] = r.total_dicks;
  doc["satisfied"] = json{{"paper_i1", r.satisfied_paper_i1},
                          {"paper_i2", r.satisfied_paper_i2},
                          {"neumann", r.satisfied_neumann},
                          {"burns", r.satisfied_burns},
                          {"tardos", r.satisfied_tardos},
                          {"dicks", r.satisfied_dicks}};
  return doc;
}

std::string bound_report_csv_header() {
  return "rk1,rk2,H1,n11,n12,H2,n21,n22,exact,paper_i1,paper_i2,neumann,burns,"
         "tardos,dicks";
}

std::string bound_report_csv_row(const BoundReport& r) {
  std::ostringstream out;
  out << r.inv1.rank << ',' << r.inv2.rank << ',' << r.inv1.H << ',' << r.inv1.n1
      << ',' << r.inv1.n2 << ',' << r.inv2.H << ',' << r.inv2.n1 << ','
      << r.inv2.n2 << ',' << r.exact_sum << ',' << r.paper_bound_i1 << ','
      << r.paper_bound_i2 << ',' << r.total_neumann << ',' << r.total_burns << ','
      << r.total_tardos << ',' << r.total_dicks;
  return out.str();
}

std::string bound_reports_svg(const std::vector<BoundReport>& reports) {
  const int width = 640, height = 480, margin = 48;
  int max_val = 1;
  for (const BoundReport& r : reports) {
    max_val = std::max({max_val, r.exact_sum, r.paper_bound_best, r.total_neumann});
  }
  auto sx = [&](double v) {
    return margin + v / max_val * (width - 2 * margin);
  };
  auto sy = [&](double v) {
    return height - margin - v / max_val * (height - 2 * margin);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
      << width - margin << "\" y2=\"" << height - margin
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
      << margin << "\" y2=\"" << margin << "\" stroke=\"black\"/>\n";
  // Diagonal: a point below it is a bound exceeding the exact sum.
  svg << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(max_val)
      << "\" y2=\"" << sy(max_val) << "\" stroke=\"#cccccc\"/>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
      << "\" font-size=\"12\">exact sum of (rk-1)</text>\n";
  svg << "<text x=\"12\" y=\"" << margin - 12
      << "\" font-size=\"12\">bound value (blue: this bound, red: Neumann)</text>\n";
  for (const BoundReport& r : reports) {
    svg << "<circle cx=\"" << sx(r.exact_sum) << "\" cy=\"" << sy(r.paper_bound_best)
        << "\" r=\"3\" fill=\"blue\" fill-opacity=\"0.5\"/>\n";
    svg << "<circle cx=\"" << sx(r.exact_sum) << "\" cy=\"" << sy(r.total_neumann)
        << "\" r=\"3\" fill=\"red\" fill-opacity=\"0.5\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace stallings
