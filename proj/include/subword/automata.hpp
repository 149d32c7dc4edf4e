#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "subword/integer.hpp"
#include "subword/word.hpp"

namespace subword {

/// coeff * (u_part ⊗ w_part); coeff is +1 or -1.
struct PairMonomial {
  Word u_part;
  Word w_part;
  int coeff = 1;
  friend bool operator==(const PairMonomial&, const PairMonomial&) = default;
};

struct PairArc {
  std::size_t from;
  std::size_t to;
  PairMonomial label;
};

/// Digraph with named vertices, an initial vertex and a final vertex, whose arcs carry
/// signed monomial pairs. Walks stop at the final vertex.
class PairAutomaton {
public:
  /// Creates the automaton with its initial and final vertices.
  PairAutomaton(std::string initial, std::string final_vertex);

  /// Index of `name`, adding the vertex if it is new.
  std::size_t vertex(const std::string& name);
  /// Throws ValidationError for an unknown name.
  std::size_t find_vertex(const std::string& name) const;
  void add_arc(const std::string& from, const std::string& to, const Word& u_part, const Word& w_part,
               int coeff = 1);

  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  const std::vector<PairArc>& arcs() const noexcept { return arcs_; }
  std::size_t initial() const noexcept { return initial_; }
  std::size_t final_vertex() const noexcept { return final_; }

private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::vector<PairArc> arcs_;
  std::size_t initial_;
  std::size_t final_;
};

/// Accepts sum over u <= w in A*_d of u ⊗ w, with exactly one walk per pair.
PairAutomaton build_zeta_automaton(RestrictionParam d);

/// Accepts sum over u <= w in A*_d of mu(u,w) u ⊗ w; the walks emitting (u,w) are in
/// bijection with the d-normal embeddings of u in w and all carry sign (-1)^{|u|+|w|}.
PairAutomaton build_mobius_automaton(RestrictionParam d);

/// The d = 3 instances written out arc by arc.
PairAutomaton zeta_automaton_d3_table();
PairAutomaton mobius_automaton_d3_table();

/// Same vertex names and the same multiset of labeled arcs.
bool same_arcs(const PairAutomaton& lhs, const PairAutomaton& rhs);

struct AcceptedCoefficient {
  Integer value;  // signed sum of walk products
  Integer walks;  // number of walks
};

struct PairShortLex {
  bool operator()(const std::pair<Word, Word>& lhs, const std::pair<Word, Word>& rhs) const noexcept {
    const ShortLex less;
    if (lhs.second != rhs.second) return less(lhs.second, rhs.second);
    return less(lhs.first, rhs.first);
  }
};

using AcceptedSeries = std::map<std::pair<Word, Word>, AcceptedCoefficient, PairShortLex>;

/// Every pair (u, w) with |w| <= max_len emitted by at least one walk from the initial to
/// the final vertex. Throws ValidationError if the arcs with empty w-part contain a cycle.
AcceptedSeries accepted_coefficients(const PairAutomaton& A, std::size_t max_len);

/// "±u⊗w" with eps for the empty word.
std::string arc_label(const PairMonomial& m);

std::string automaton_to_dot(const PairAutomaton& A);

} // namespace subword
