#include "raag/presentation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "raag/error.hpp"

namespace raag {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return out;
}

void Presentation::add_relator(Word r) {
  r = free_reduce(std::move(r));
  if (!r.empty()) relators.push_back(std::move(r));
}

std::string Presentation::format_word(const Word& w) const {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += generators.at(l.generator);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

namespace {

Word commutator(std::size_t a, std::size_t b) { return {{a, 1}, {b, 1}, {a, -1}, {b, -1}}; }

// Union-find over (gog vertex, defining-graph vertex) generator copies.
class CopyClasses {
 public:
  std::size_t copy(const std::string& gog_vertex, const VertexId& v) {
    auto [it, inserted] = index_.try_emplace({gog_vertex, v}, parent_.size());
    if (inserted) {
      parent_.push_back(parent_.size());
      names_.push_back(v);
      owners_.push_back(gog_vertex);
    }
    return it->second;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  std::size_t size() const { return parent_.size(); }
  const VertexId& name(std::size_t x) const { return names_[x]; }
  const std::string& owner(std::size_t x) const { return owners_[x]; }

 private:
  std::map<std::pair<std::string, VertexId>, std::size_t> index_;
  std::vector<std::size_t> parent_;
  std::vector<VertexId> names_;
  std::vector<std::string> owners_;
};

}  // namespace

Presentation raag_presentation(const SimplicialGraph& g) {
  Presentation p;
  p.generators = g.vertices();
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (auto j : g.neighbors(i)) {
      if (i < j) p.add_relator(commutator(i, j));
    }
  }
  return p;
}

Presentation emit_presentation(const GraphOfGroups& gog) {
  if (!gog.base_connected()) throw DomainError("presentation needs a connected base graph");

  CopyClasses copies;
  for (const auto& x : gog.vertices) {
    for (const auto& v : x.group.vertices) copies.copy(x.id, v);
  }

  // Breadth-first spanning tree from the least vertex id; loops never qualify.
  std::map<std::string, std::vector<std::size_t>> incident;
  for (std::size_t i = 0; i < gog.edges.size(); ++i) {
    const auto& e = gog.edges[i];
    if (e.loop || e.ends[0] == e.ends[1]) continue;
    incident[e.ends[0]].push_back(i);
    incident[e.ends[1]].push_back(i);
  }
  const auto root = std::min_element(gog.vertices.begin(), gog.vertices.end(),
                                     [](const GoGVertex& a, const GoGVertex& b) { return a.id < b.id; })
                        ->id;
  std::set<std::string> reached{root};
  std::vector<bool> in_tree(gog.edges.size(), false);
  std::deque<std::string> queue{root};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto i : incident[x]) {
      const auto& e = gog.edges[i];
      const auto& y = e.ends[0] == x ? e.ends[1] : e.ends[0];
      if (reached.insert(y).second) {
        in_tree[i] = true;
        queue.push_back(y);
      }
    }
  }

  for (std::size_t i = 0; i < gog.edges.size(); ++i) {
    if (!in_tree[i]) continue;
    const auto& e = gog.edges[i];
    copies.unite(copies.copy(e.ends[0], e.inclusion[0]), copies.copy(e.ends[1], e.inclusion[1]));
  }

  // Name each class after its root's vertex; classes sharing a name get "@owner".
  std::map<VertexId, std::set<std::size_t>> classes_by_name;
  for (std::size_t c = 0; c < copies.size(); ++c) {
    const auto root = copies.find(c);
    classes_by_name[copies.name(root)].insert(root);
  }
  std::map<std::size_t, std::string> class_symbol;
  for (const auto& [name, roots] : classes_by_name) {
    for (auto r : roots) class_symbol[r] = roots.size() == 1 ? name : name + "@" + copies.owner(r);
  }

  std::vector<std::string> stable_symbols(gog.edges.size());
  std::set<std::string> taken;
  for (const auto& [r, sym] : class_symbol) taken.insert(sym);
  for (std::size_t i = 0; i < gog.edges.size(); ++i) {
    if (in_tree[i]) continue;
    const auto& e = gog.edges[i];
    auto sym = e.stable_letter.value_or("t@" + e.id);
    if (taken.contains(sym)) sym += "@" + e.id;
    taken.insert(sym);
    stable_symbols[i] = sym;
  }

  Presentation p;
  p.generators.assign(taken.begin(), taken.end());
  auto gen = [&](const std::string& sym) {
    return static_cast<std::size_t>(std::lower_bound(p.generators.begin(), p.generators.end(), sym) -
                                    p.generators.begin());
  };
  auto copy_gen = [&](const std::string& owner, const VertexId& v) {
    return gen(class_symbol.at(copies.find(copies.copy(owner, v))));
  };

  for (const auto& x : gog.vertices) {
    if (x.group.kind != GroupKind::raag) continue;
    const auto& members = x.group.vertices.members();
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (gog.source_graph.adjacent(members[a], members[b])) {
          p.add_relator(commutator(copy_gen(x.id, members[a]), copy_gen(x.id, members[b])));
        }
      }
    }
  }
  for (std::size_t i = 0; i < gog.edges.size(); ++i) {
    const auto& e = gog.edges[i];
    const auto lhs = copy_gen(e.ends[0], e.inclusion[0]);
    const auto rhs = copy_gen(e.ends[1], e.inclusion[1]);
    if (in_tree[i]) {
      p.add_relator({{lhs, 1}, {rhs, -1}});
    } else {
      const auto t = gen(stable_symbols[i]);
      p.add_relator({{t, 1}, {lhs, 1}, {t, -1}, {rhs, -1}});
    }
  }
  return p;
}

std::vector<std::string> normalized_relators(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& r : p.relators) {
    // Cyclically reduce.
    Word w = free_reduce(r);
    while (w.size() >= 2 && w.front().generator == w.back().generator && w.front().exponent == -w.back().exponent) {
      w.erase(w.begin());
      w.pop_back();
    }
    std::string best;
    bool have = false;
    for (const auto& candidate : {w, inverse(w)}) {
      for (std::size_t shift = 0; shift < std::max<std::size_t>(candidate.size(), 1); ++shift) {
        Word rotated = candidate;
        std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(shift), rotated.end());
        auto text = p.format_word(rotated);
        if (!have || text < best) {
          best = std::move(text);
          have = true;
        }
      }
    }
    if (!best.empty()) out.push_back(std::move(best));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace raag
