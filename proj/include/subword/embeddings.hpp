#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "subword/word.hpp"

namespace subword {

/// Strictly increasing 1-based positions into a host word.
using Embedding = std::vector<std::size_t>;

/// The letters of `w` at the positions of `iota`.
Word restrict_to(const Word& w, const Embedding& iota);

/// Positions j >= 2 with w_j = w_{j-1}.
std::set<std::size_t> repetition_set(const Word& w);

/// Every embedding of u in w, lexicographic. Empty iff u is not a subword of w.
std::vector<Embedding> all_embeddings(const Word& u, const Word& w);

/// The coordinatewise-largest embedding, by greedy right-to-left matching.
/// Throws ValidationError if u is not a subword of w.
Embedding rightmost_embedding(const Word& u, const Word& w);

/// d-normal test for an embedding `iota` of u in w:
///  (a) the repetition set of w is supported;
///  (b) every maximal run of exactly d b's in u, whose first b sits at w-position p,
///      has p = 1, or w_{p-1} = a with p-1 supported or p-1 = 1.
/// Clause (b) only admits the unsupported p-1 = 1 for a run opening u.
bool is_d_normal(const Embedding& iota, const Word& u, const Word& w, RestrictionParam d);

/// Number of d-normal embeddings of u in w.
std::int64_t count_d_normal(const Word& u, const Word& w, RestrictionParam d);

/// (-1)^{|w|+|u|} times the d-normal count.
std::int64_t mobius_formula(const Word& u, const Word& w, RestrictionParam d);

/// The family N for a pair u < w: index sets iota of w that are d-normal embeddings
/// of w_iota, with w_iota in A*_d and u <= w_iota. Lexicographic.
std::vector<Embedding> normal_family(const Word& u, const Word& w, RestrictionParam d);

/// The sign-reversing involution on N: toggle the least position of w outside the
/// image (through iota) of the right-most embedding of u in w_iota.
/// Throws ValidationError if iota is not in N or u == w.
Embedding psi(const Embedding& iota, const Word& u, const Word& w, RestrictionParam d);

} // namespace subword
