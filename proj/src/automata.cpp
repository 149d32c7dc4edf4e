#include "subword/automata.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "subword/error.hpp"

namespace subword {

PairAutomaton::PairAutomaton(std::string initial, std::string final_vertex) {
  initial_ = vertex(initial);
  final_ = vertex(final_vertex);
}

std::size_t PairAutomaton::vertex(const std::string& name) {
  auto [it, inserted] = index_.try_emplace(name, names_.size());
  if (inserted) names_.push_back(name);
  return it->second;
}

std::size_t PairAutomaton::find_vertex(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ValidationError("unknown vertex: " + name);
  return it->second;
}

void PairAutomaton::add_arc(const std::string& from, const std::string& to, const Word& u_part,
                            const Word& w_part, int coeff) {
  if (coeff != 1 && coeff != -1) throw ValidationError("arc coefficient must be +1 or -1");
  const std::size_t f = vertex(from);
  const std::size_t t = vertex(to);
  arcs_.push_back({f, t, {u_part, w_part, coeff}});
}

namespace {

const Word kEps;
const Word kA("a");
const Word kB("b");

std::string prefix_name(int i) { return i == 0 ? "alpha" : "alpha" + std::to_string(i); }
std::string gamma_name(int c) { return "gamma" + std::to_string(c); }
std::string beta_name(int k, int m) { return "beta" + std::to_string(k) + "_" + std::to_string(m); }
std::string leg_name(int l, int j) { return "leg" + std::to_string(l) + "_" + std::to_string(j); }

} // namespace

// Vertices:
//   alpha_i    unsupported prefix of w ending in i b's (alpha_0 is the initial vertex);
//   gamma_c    after a supported a, then c unsupported b's;
//   beta_{k,m} after a supported b closing k supported b's in a run of u, m = current w b-run
//              length bound (k <= m <= d);
//   omega      final.
PairAutomaton build_zeta_automaton(RestrictionParam d) {
  const int n = d.value();
  PairAutomaton A("alpha", "omega");
  for (int i = 0; i <= n; ++i) A.vertex(prefix_name(i));
  for (int c = 0; c <= n; ++c) A.vertex(gamma_name(c));
  for (int k = 1; k <= n; ++k) {
    for (int m = k; m <= n; ++m) A.vertex(beta_name(k, m));
  }
  for (int i = 0; i <= n; ++i) {
    const std::string v = prefix_name(i);
    A.add_arc(v, prefix_name(0), kEps, kA);
    if (i < n) {
      A.add_arc(v, prefix_name(i + 1), kEps, kB);
      A.add_arc(v, beta_name(1, i + 1), kB, kB);
    }
    A.add_arc(v, gamma_name(0), kA, kA);
    A.add_arc(v, "omega", kEps, kEps);
  }
  for (int c = 0; c <= n; ++c) {
    const std::string v = gamma_name(c);
    A.add_arc(v, gamma_name(0), kA, kA);
    A.add_arc(v, "omega", kEps, kEps);
    if (c < n) {
      A.add_arc(v, gamma_name(c + 1), kEps, kB);
      A.add_arc(v, beta_name(1, c + 1), kB, kB);
    }
  }
  for (int k = 1; k <= n; ++k) {
    for (int m = k; m <= n; ++m) {
      const std::string v = beta_name(k, m);
      A.add_arc(v, beta_name(k, k), kEps, kA);
      A.add_arc(v, gamma_name(0), kA, kA);
      A.add_arc(v, "omega", kEps, kEps);
      if (k < n && m < n) A.add_arc(v, beta_name(k + 1, m + 1), kB, kB);
    }
  }
  return A;
}

// Vertices:
//   alpha            initial;
//   alpha1, alpha2   alternating unsupported prefix, last letter a-or-nothing / b;
//   alpha3, alpha4   after a supported a, unsupported gap ends in a-or-nothing / b;
//   entry            supported a directly before a run of d b's;
//   legl_j, legl_ja  j-th supported b of a run of l b's, gap ends in b-or-nothing / a;
//   omega            final.
PairAutomaton build_mobius_automaton(RestrictionParam d) {
  const int n = d.value();
  PairAutomaton A("alpha", "omega");
  A.add_arc("alpha", "alpha1", kEps, kEps);
  A.add_arc("alpha", "alpha1", kEps, kA, -1);
  A.add_arc("alpha1", "alpha2", kEps, kB, -1);
  A.add_arc("alpha2", "alpha1", kEps, kA, -1);
  A.add_arc("alpha3", "alpha4", kEps, kB, -1);
  A.add_arc("alpha4", "alpha3", kEps, kA, -1);
  for (const char* v : {"alpha1", "alpha2", "alpha3", "alpha4"}) {
    A.add_arc(v, "alpha3", kA, kA);
    A.add_arc(v, "entry", kA, kA);
    A.add_arc(v, "omega", kEps, kEps);
    for (int l = 1; l < n; ++l) A.add_arc(v, leg_name(l, 1), kB, kB);
  }
  A.add_arc("entry", leg_name(n, 1), kB, kB);
  A.add_arc("alpha", leg_name(n, 1), kB, kB);
  A.add_arc("alpha", leg_name(n, 1), kB, Word("ab"), -1);
  for (int l = 1; l <= n; ++l) {
    for (int j = 1; j <= l; ++j) {
      const std::string y = leg_name(l, j);
      const std::string z = y + "a";
      A.add_arc(y, z, kEps, kA, -1);
      A.add_arc(z, y, kEps, kB, -1);
      for (const std::string& v : {y, z}) {
        if (j < l) {
          A.add_arc(v, leg_name(l, j + 1), kB, kB);
        } else {
          A.add_arc(v, "alpha3", kA, kA);
          A.add_arc(v, "entry", kA, kA);
          A.add_arc(v, "omega", kEps, kEps);
        }
      }
    }
  }
  return A;
}

namespace {

struct ArcRow {
  const char* from;
  const char* to;
  const char* u_part;
  const char* w_part;
  int coeff;
};

PairAutomaton from_table(const std::vector<ArcRow>& rows) {
  PairAutomaton A("alpha", "omega");
  for (const ArcRow& r : rows) A.add_arc(r.from, r.to, Word(r.u_part), Word(r.w_part), r.coeff);
  return A;
}

} // namespace

PairAutomaton zeta_automaton_d3_table() {
  return from_table({
    {"alpha", "alpha", "", "a", 1},
    {"alpha", "alpha1", "", "b", 1},
    {"alpha", "beta1_1", "b", "b", 1},
    {"alpha", "gamma0", "a", "a", 1},
    {"alpha", "omega", "", "", 1},
    {"alpha1", "alpha", "", "a", 1},
    {"alpha1", "alpha2", "", "b", 1},
    {"alpha1", "beta1_2", "b", "b", 1},
    {"alpha1", "gamma0", "a", "a", 1},
    {"alpha1", "omega", "", "", 1},
    {"alpha2", "alpha", "", "a", 1},
    {"alpha2", "alpha3", "", "b", 1},
    {"alpha2", "beta1_3", "b", "b", 1},
    {"alpha2", "gamma0", "a", "a", 1},
    {"alpha2", "omega", "", "", 1},
    {"alpha3", "alpha", "", "a", 1},
    {"alpha3", "gamma0", "a", "a", 1},
    {"alpha3", "omega", "", "", 1},
    {"gamma0", "gamma0", "a", "a", 1},
    {"gamma0", "omega", "", "", 1},
    {"gamma0", "gamma1", "", "b", 1},
    {"gamma0", "beta1_1", "b", "b", 1},
    {"gamma1", "gamma0", "a", "a", 1},
    {"gamma1", "omega", "", "", 1},
    {"gamma1", "gamma2", "", "b", 1},
    {"gamma1", "beta1_2", "b", "b", 1},
    {"gamma2", "gamma0", "a", "a", 1},
    {"gamma2", "omega", "", "", 1},
    {"gamma2", "gamma3", "", "b", 1},
    {"gamma2", "beta1_3", "b", "b", 1},
    {"gamma3", "gamma0", "a", "a", 1},
    {"gamma3", "omega", "", "", 1},
    {"beta1_1", "beta1_1", "", "a", 1},
    {"beta1_1", "gamma0", "a", "a", 1},
    {"beta1_1", "omega", "", "", 1},
    {"beta1_1", "beta2_2", "b", "b", 1},
    {"beta1_2", "beta1_1", "", "a", 1},
    {"beta1_2", "gamma0", "a", "a", 1},
    {"beta1_2", "omega", "", "", 1},
    {"beta1_2", "beta2_3", "b", "b", 1},
    {"beta1_3", "beta1_1", "", "a", 1},
    {"beta1_3", "gamma0", "a", "a", 1},
    {"beta1_3", "omega", "", "", 1},
    {"beta2_2", "beta2_2", "", "a", 1},
    {"beta2_2", "gamma0", "a", "a", 1},
    {"beta2_2", "omega", "", "", 1},
    {"beta2_2", "beta3_3", "b", "b", 1},
    {"beta2_3", "beta2_2", "", "a", 1},
    {"beta2_3", "gamma0", "a", "a", 1},
    {"beta2_3", "omega", "", "", 1},
    {"beta3_3", "beta3_3", "", "a", 1},
    {"beta3_3", "gamma0", "a", "a", 1},
    {"beta3_3", "omega", "", "", 1},
  });
}

PairAutomaton mobius_automaton_d3_table() {
  return from_table({
    {"alpha", "alpha1", "", "", 1},
    {"alpha", "alpha1", "", "a", -1},
    {"alpha1", "alpha2", "", "b", -1},
    {"alpha2", "alpha1", "", "a", -1},
    {"alpha3", "alpha4", "", "b", -1},
    {"alpha4", "alpha3", "", "a", -1},
    {"alpha1", "alpha3", "a", "a", 1},
    {"alpha1", "entry", "a", "a", 1},
    {"alpha1", "omega", "", "", 1},
    {"alpha1", "leg1_1", "b", "b", 1},
    {"alpha1", "leg2_1", "b", "b", 1},
    {"alpha2", "alpha3", "a", "a", 1},
    {"alpha2", "entry", "a", "a", 1},
    {"alpha2", "omega", "", "", 1},
    {"alpha2", "leg1_1", "b", "b", 1},
    {"alpha2", "leg2_1", "b", "b", 1},
    {"alpha3", "alpha3", "a", "a", 1},
    {"alpha3", "entry", "a", "a", 1},
    {"alpha3", "omega", "", "", 1},
    {"alpha3", "leg1_1", "b", "b", 1},
    {"alpha3", "leg2_1", "b", "b", 1},
    {"alpha4", "alpha3", "a", "a", 1},
    {"alpha4", "entry", "a", "a", 1},
    {"alpha4", "omega", "", "", 1},
    {"alpha4", "leg1_1", "b", "b", 1},
    {"alpha4", "leg2_1", "b", "b", 1},
    {"entry", "leg3_1", "b", "b", 1},
    {"alpha", "leg3_1", "b", "b", 1},
    {"alpha", "leg3_1", "b", "ab", -1},
    {"leg1_1", "leg1_1a", "", "a", -1},
    {"leg1_1a", "leg1_1", "", "b", -1},
    {"leg1_1", "alpha3", "a", "a", 1},
    {"leg1_1", "entry", "a", "a", 1},
    {"leg1_1", "omega", "", "", 1},
    {"leg1_1a", "alpha3", "a", "a", 1},
    {"leg1_1a", "entry", "a", "a", 1},
    {"leg1_1a", "omega", "", "", 1},
    {"leg2_1", "leg2_1a", "", "a", -1},
    {"leg2_1a", "leg2_1", "", "b", -1},
    {"leg2_1", "leg2_2", "b", "b", 1},
    {"leg2_1a", "leg2_2", "b", "b", 1},
    {"leg2_2", "leg2_2a", "", "a", -1},
    {"leg2_2a", "leg2_2", "", "b", -1},
    {"leg2_2", "alpha3", "a", "a", 1},
    {"leg2_2", "entry", "a", "a", 1},
    {"leg2_2", "omega", "", "", 1},
    {"leg2_2a", "alpha3", "a", "a", 1},
    {"leg2_2a", "entry", "a", "a", 1},
    {"leg2_2a", "omega", "", "", 1},
    {"leg3_1", "leg3_1a", "", "a", -1},
    {"leg3_1a", "leg3_1", "", "b", -1},
    {"leg3_1", "leg3_2", "b", "b", 1},
    {"leg3_1a", "leg3_2", "b", "b", 1},
    {"leg3_2", "leg3_2a", "", "a", -1},
    {"leg3_2a", "leg3_2", "", "b", -1},
    {"leg3_2", "leg3_3", "b", "b", 1},
    {"leg3_2a", "leg3_3", "b", "b", 1},
    {"leg3_3", "leg3_3a", "", "a", -1},
    {"leg3_3a", "leg3_3", "", "b", -1},
    {"leg3_3", "alpha3", "a", "a", 1},
    {"leg3_3", "entry", "a", "a", 1},
    {"leg3_3", "omega", "", "", 1},
    {"leg3_3a", "alpha3", "a", "a", 1},
    {"leg3_3a", "entry", "a", "a", 1},
    {"leg3_3a", "omega", "", "", 1},
  });
}

bool same_arcs(const PairAutomaton& lhs, const PairAutomaton& rhs) {
  using Row = std::tuple<std::string, std::string, std::string, std::string, int>;
  const auto rows = [](const PairAutomaton& A) {
    std::vector<Row> out;
    const auto& names = A.vertex_names();
    for (const PairArc& a : A.arcs()) {
      out.emplace_back(names[a.from], names[a.to], a.label.u_part.str(), a.label.w_part.str(), a.label.coeff);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto lnames = lhs.vertex_names();
  auto rnames = rhs.vertex_names();
  std::sort(lnames.begin(), lnames.end());
  std::sort(rnames.begin(), rnames.end());
  return lnames == rnames && lhs.vertex_names()[lhs.initial()] == rhs.vertex_names()[rhs.initial()] &&
         lhs.vertex_names()[lhs.final_vertex()] == rhs.vertex_names()[rhs.final_vertex()] && rows(lhs) == rows(rhs);
}

namespace {

// Vertices ordered so that every arc with empty w-part (other than arcs leaving the final
// vertex, which walks never use) goes forward.
std::vector<std::size_t> stationary_order(const PairAutomaton& A) {
  const std::size_t n = A.vertex_names().size();
  std::vector<std::vector<std::size_t>> next(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const PairArc& a : A.arcs()) {
    if (!a.label.w_part.empty() || a.from == A.final_vertex()) continue;
    next[a.from].push_back(a.to);
    ++indegree[a.to];
  }
  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t t : next[order[i]]) {
      if (--indegree[t] == 0) order.push_back(t);
    }
  }
  if (order.size() != n) {
    for (std::size_t v = 0; v < n; ++v) {
      if (indegree[v] != 0) {
        throw ValidationError("cycle of arcs with empty w-part through vertex " + A.vertex_names()[v]);
      }
    }
  }
  return order;
}

} // namespace

AcceptedSeries accepted_coefficients(const PairAutomaton& A, std::size_t max_len) {
  const std::size_t n = A.vertex_names().size();
  const std::vector<std::size_t> order = stationary_order(A);
  std::vector<std::vector<std::size_t>> outgoing(n);
  for (std::size_t i = 0; i < A.arcs().size(); ++i) outgoing[A.arcs()[i].from].push_back(i);

  // levels[k][v]: walks from the initial vertex to v having emitted a w-part of length k.
  using States = std::map<std::pair<Word, Word>, AcceptedCoefficient, PairShortLex>;
  std::vector<std::vector<States>> levels(max_len + 1, std::vector<States>(n));
  levels[0][A.initial()][{Word(), Word()}] = {1, 1};

  AcceptedSeries result;
  for (std::size_t k = 0; k <= max_len; ++k) {
    for (std::size_t v : order) {
      for (const auto& [key, acc] : levels[k][v]) {
        if (v == A.final_vertex()) {
          AcceptedCoefficient& slot = result[key];
          slot.value += acc.value;
          slot.walks += acc.walks;
          continue;
        }
        for (std::size_t i : outgoing[v]) {
          const PairArc& arc = A.arcs()[i];
          const std::size_t nk = k + arc.label.w_part.size();
          if (nk > max_len) continue;
          AcceptedCoefficient& slot =
              levels[nk][arc.to][{key.first + arc.label.u_part, key.second + arc.label.w_part}];
          slot.value += acc.value * arc.label.coeff;
          slot.walks += acc.walks;
        }
      }
      levels[k][v].clear();
    }
  }
  return result;
}

std::string arc_label(const PairMonomial& m) {
  return std::string(m.coeff < 0 ? "-" : "+") + m.u_part.display() + "⊗" + m.w_part.display();
}

std::string automaton_to_dot(const PairAutomaton& A) {
  std::ostringstream os;
  os << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
  const auto& names = A.vertex_names();
  for (std::size_t v = 0; v < names.size(); ++v) {
    os << "  \"" << names[v] << "\"";
    if (v == A.initial()) {
      os << " [style=filled, fillcolor=lightblue]";
    } else if (v == A.final_vertex()) {
      os << " [shape=doublecircle]";
    }
    os << ";\n";
  }
  for (const PairArc& a : A.arcs()) {
    os << "  \"" << names[a.from] << "\" -> \"" << names[a.to] << "\" [label=\"" << arc_label(a.label)
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace subword
