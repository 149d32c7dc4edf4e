#include "subword/embeddings.hpp"

#include <algorithm>
#include <functional>

#include "subword/error.hpp"

namespace subword {

Word restrict_to(const Word& w, const Embedding& iota) {
  std::string s;
  s.reserve(iota.size());
  for (std::size_t pos : iota) s += w.at_position(pos);
  return Word(s);
}

std::set<std::size_t> repetition_set(const Word& w) {
  std::set<std::size_t> r;
  for (std::size_t j = 2; j <= w.size(); ++j) {
    if (w.at_position(j) == w.at_position(j - 1)) r.insert(j);
  }
  return r;
}

namespace {

// Visits embeddings of u in w in lexicographic order. Positions flagged in `must_support`
// may not be left unsupported.
void for_each_embedding(const Word& u, const Word& w, const std::vector<bool>& must_support,
                        const std::function<void(const Embedding&)>& visit) {
  Embedding current;
  std::function<void(std::size_t)> rec = [&](std::size_t next_pos) {
    if (current.size() == u.size()) {
      for (std::size_t p = next_pos; p <= w.size(); ++p) {
        if (must_support[p]) return;
      }
      visit(current);
      return;
    }
    const char want = u[current.size()];
    const std::size_t letters_left = u.size() - current.size();
    for (std::size_t p = next_pos; p + letters_left <= w.size() + 1; ++p) {
      if (w.at_position(p) == want) {
        current.push_back(p);
        rec(p + 1);
        current.pop_back();
      }
      if (must_support[p]) return;  // skipping p would leave it unsupported
    }
  };
  rec(1);
}

} // namespace

std::vector<Embedding> all_embeddings(const Word& u, const Word& w) {
  std::vector<Embedding> out;
  const std::vector<bool> none(w.size() + 1, false);
  for_each_embedding(u, w, none, [&](const Embedding& e) { out.push_back(e); });
  return out;
}

Embedding rightmost_embedding(const Word& u, const Word& w) {
  Embedding out(u.size());
  std::size_t pos = w.size();
  for (std::size_t j = u.size(); j-- > 0;) {
    while (pos > 0 && w.at_position(pos) != u[j]) --pos;
    if (pos == 0) {
      throw ValidationError("'" + u.display() + "' is not a subword of '" + w.display() + "'");
    }
    out[j] = pos--;
  }
  return out;
}

namespace {

bool run_condition_holds(const Embedding& iota, const Word& u, const Word& w, RestrictionParam d) {
  const auto supported = [&](std::size_t p) { return std::binary_search(iota.begin(), iota.end(), p); };
  for (const Run& r : runs(u)) {
    if (r.letter != 'b' || r.length != static_cast<std::size_t>(d.value())) continue;
    const std::size_t p = iota[r.start - 1];
    if (p == 1) continue;
    if (w.at_position(p - 1) != 'a') return false;
    if (!supported(p - 1) && p - 1 != 1) return false;
  }
  return true;
}

bool repetitions_supported(const Embedding& iota, const Word& w) {
  for (std::size_t j : repetition_set(w)) {
    if (!std::binary_search(iota.begin(), iota.end(), j)) return false;
  }
  return true;
}

std::vector<bool> repetition_mask(const Word& w) {
  std::vector<bool> mask(w.size() + 1, false);
  for (std::size_t j : repetition_set(w)) mask[j] = true;
  return mask;
}

} // namespace

bool is_d_normal(const Embedding& iota, const Word& u, const Word& w, RestrictionParam d) {
  if (iota.size() != u.size() || !std::is_sorted(iota.begin(), iota.end())) return false;
  if (!iota.empty() && (iota.front() < 1 || iota.back() > w.size())) return false;
  if (std::adjacent_find(iota.begin(), iota.end()) != iota.end()) return false;
  if (restrict_to(w, iota) != u) return false;
  return repetitions_supported(iota, w) && run_condition_holds(iota, u, w, d);
}

std::int64_t count_d_normal(const Word& u, const Word& w, RestrictionParam d) {
  std::int64_t count = 0;
  for_each_embedding(u, w, repetition_mask(w), [&](const Embedding& e) {
    if (run_condition_holds(e, u, w, d)) ++count;
  });
  return count;
}

std::int64_t mobius_formula(const Word& u, const Word& w, RestrictionParam d) {
  const std::int64_t n = count_d_normal(u, w, d);
  return (u.size() + w.size()) % 2 == 0 ? n : -n;
}

std::vector<Embedding> normal_family(const Word& u, const Word& w, RestrictionParam d) {
  std::vector<Embedding> out;
  const std::size_t n = w.size();
  const auto mask = repetition_mask(w);
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    Embedding iota;
    bool ok = true;
    for (std::size_t p = 1; p <= n && ok; ++p) {
      if (bits & (std::size_t{1} << (p - 1))) {
        iota.push_back(p);
      } else if (mask[p]) {
        ok = false;
      }
    }
    if (!ok) continue;
    const Word v = restrict_to(w, iota);
    if (is_restricted(v, d) && is_subword(u, v) && run_condition_holds(iota, v, w, d)) {
      out.push_back(std::move(iota));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Embedding psi(const Embedding& iota, const Word& u, const Word& w, RestrictionParam d) {
  if (u.size() >= w.size()) throw ValidationError("psi needs u strictly below w");
  const Word v = restrict_to(w, iota);
  if (!is_restricted(v, d) || !is_subword(u, v) || !is_d_normal(iota, v, w, d)) {
    throw ValidationError("embedding is not in the normal family N");
  }
  const Embedding inner = rightmost_embedding(u, v);
  std::vector<bool> in_image(w.size() + 1, false);
  for (std::size_t k : inner) in_image[iota[k - 1]] = true;
  std::size_t f = 1;
  while (f <= w.size() && in_image[f]) ++f;
  if (f > w.size()) throw ValidationError("no free position: u equals w");
  Embedding out = iota;
  auto it = std::lower_bound(out.begin(), out.end(), f);
  if (it != out.end() && *it == f) {
    out.erase(it);
  } else {
    out.insert(it, f);
  }
  return out;
}

} // namespace subword
