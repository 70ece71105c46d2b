#include "cli/serialize.hpp"

#include <sstream>
#include <variant>

namespace raag::cli {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string group_label(const GroupDescriptor& group) {
  std::string out(to_string(group.kind));
  out += ':';
  for (const auto& v : group.vertices) out += v;
  return out;
}

}  // namespace

Json to_json(const VertexSubset& s) {
  Json out = Json::array();
  for (const auto& v : s) out.push_back(v);
  return out;
}

Json to_json(const SimplicialGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"vertices", g.vertices()}, {"edges", edges}};
}

Json to_json(const Witness& w) {
  return std::visit(
      overloaded{
          [](const ZSplitWitness& z) {
            return Json{{"kind", "amalgam"}, {"gamma1", to_json(z.gamma1)}, {"gamma2", to_json(z.gamma2)}, {"v", z.v}};
          },
          [](const NonSplitCover& cover) {
            Json entries = Json::array();
            for (const auto& [seg, entry] : cover.entries) {
              entries.push_back(Json{{"segment", {seg.u, seg.v, seg.w}},
                                     {"delta", to_json(entry.delta)},
                                     {"cycle", entry.cycle.sequence}});
            }
            return Json{{"kind", "cover"}, {"cover", entries}};
          },
          [](const SmallCaseWitness& s) { return Json{{"kind", "small_case"}, {"tag", to_string(s.tag)}}; },
      },
      w);
}

Json to_json(const SplitReport& report) {
  Json out;
  out["free_split"] = report.free_split;
  if (report.free_partition) {
    Json parts = Json::array();
    for (const auto& part : *report.free_partition) parts.push_back(to_json(part));
    out["free_partition"] = parts;
  }
  out["z_split"] = to_string(report.z_split);
  out["witness"] = to_json(report.witness);
  return out;
}

Json to_json(const GraphOfGroups& gog) {
  Json vertices = Json::array();
  for (const auto& x : gog.vertices) {
    vertices.push_back(Json{{"id", x.id},
                            {"color", to_string(x.color)},
                            {"group", {{"kind", to_string(x.group.kind)}, {"vertices", to_json(x.group.vertices)}}},
                            {"hanging", x.hanging},
                            {"toral", x.toral}});
  }
  Json edges = Json::array();
  for (const auto& e : gog.edges) {
    edges.push_back(Json{{"id", e.id},
                         {"ends", {e.ends[0], e.ends[1]}},
                         {"group_vertex", e.group_vertex},
                         {"loop", e.loop},
                         {"stable_letter", e.stable_letter ? Json(*e.stable_letter) : Json(nullptr)}});
  }
  return Json{{"vertices", vertices}, {"edges", edges}};
}

std::string to_dot(const SimplicialGraph& g) {
  const auto cuts = cut_vertices(g);
  std::ostringstream out;
  out << "graph gamma {\n";
  for (const auto& v : g.vertices()) {
    out << "  " << quoted(v) << " [shape=circle, style=filled, fillcolor="
        << (cuts.contains(v) ? "black, fontcolor=white" : "white") << "];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << quoted(u) << " -- " << quoted(v) << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const GraphOfGroups& gog) {
  std::ostringstream out;
  out << "graph jsj {\n";
  for (const auto& x : gog.vertices) {
    const bool black = x.color == NodeColor::black;
    out << "  " << quoted(x.id) << " [shape=" << (x.hanging ? "doublecircle" : "circle")
        << ", style=filled, fillcolor=" << (black ? "black, fontcolor=white" : "white")
        << ", label=" << quoted(group_label(x.group)) << "];\n";
  }
  for (const auto& e : gog.edges) {
    const auto label = e.loop && e.stable_letter ? *e.stable_letter : e.group_vertex;
    out << "  " << quoted(e.ends[0]) << " -- " << quoted(e.ends[1]) << " [label=" << quoted(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace raag::cli
