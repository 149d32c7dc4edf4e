#include "subword/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "subword/automata.hpp"
#include "subword/embeddings.hpp"
#include "subword/genfun.hpp"
#include "subword/ncseries.hpp"
#include "subword/poset.hpp"
#include "subword/shelling.hpp"

namespace subword {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first few mismatches of a sweep.
class Tally {
public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) samples_ += (samples_.empty() ? "" : "; ") + describe();
  }
  bool ok() const { return failed_ == 0; }
  std::string summary(const std::string& what) const {
    std::ostringstream os;
    os << checked_ << " " << what;
    if (failed_ > 0) os << ", " << failed_ << " mismatches (" << samples_ << ")";
    return os.str();
  }

private:
  long checked_ = 0;
  long failed_ = 0;
  std::string samples_;
};

std::string pair_text(const Word& u, const Word& w, int d) {
  return "(" + u.display() + "," + w.display() + ",d=" + std::to_string(d) + ")";
}

// mu(v, w) for every w in A*_d up to a length, from the downward recursion.
class MobiusTable {
public:
  MobiusTable(std::size_t max_len, RestrictionParam d) : d_(d) {
    for (const Word& w : restricted_words_up_to(max_len, d)) columns_.emplace(w, mobius_column(w, d));
  }
  std::int64_t operator()(const Word& u, const Word& w) const {
    auto col = columns_.find(w);
    if (col == columns_.end()) return 0;
    auto it = col->second.find(u);
    return it == col->second.end() ? 0 : it->second;
  }
  const std::map<Word, std::map<Word, std::int64_t, ShortLex>, ShortLex>& columns() const { return columns_; }

private:
  RestrictionParam d_;
  std::map<Word, std::map<Word, std::int64_t, ShortLex>, ShortLex> columns_;
};

std::vector<Word> all_words_up_to(std::size_t n) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= n; ++len) {
    for (Word& w : words_of_length(len)) out.push_back(std::move(w));
  }
  return out;
}

CriterionResult figure_interval(bool) {
  const auto start = Clock::now();
  const RestrictionParam d(3);
  const Interval iv = interval(Word("abb"), Word("aabbab"), d);
  std::vector<Word> expected;
  for (const char* s : {"abb", "aabb", "abab", "abba", "abbb", "aabab", "aabba", "aabbb", "abbab", "aabbab"}) {
    expected.emplace_back(s);
  }
  std::sort(expected.begin(), expected.end(), ShortLex{});
  const bool elements_ok = iv.elements() == expected;

  const auto asc = ascending_chains(iv);
  bool chain_ok = asc.size() == 1;
  std::string chain_text;
  if (chain_ok) {
    const std::vector<Word> top_down{Word("aabbab"), Word("abbab"), Word("abab"), Word("abb")};
    std::vector<Word> words(asc[0].words.rbegin(), asc[0].words.rend());
    const ChainLabel lab = label_chain(asc[0]);
    chain_ok = words == top_down && lab.labels == std::vector<std::size_t>{1, 3, 5};
    for (const Word& w : words) chain_text += (chain_text.empty() ? "" : " > ") + w.display();
  }
  const double secs = seconds_since(start);
  std::ostringstream detail;
  detail << iv.size() << " elements, " << asc.size() << " ascending chain";
  if (!chain_text.empty()) detail << " " << chain_text;
  if (secs >= 1.0) detail << ", over the 1 s budget";
  return {1, "interval [abb, aabbab] for d=3 and its ascending chain", elements_ok && chain_ok && secs < 1.0,
          detail.str()};
}

CriterionResult mobius_theorem(bool quick) {
  const auto start = Clock::now();
  const std::size_t max_len = quick ? 6 : 8;
  Tally tally;
  for (int dv = 1; dv <= 4; ++dv) {
    const RestrictionParam d(dv);
    for (const Word& w : restricted_words_up_to(max_len, d)) {
      for (const auto& [u, mu] : mobius_column(w, d)) {
        const std::int64_t formula = mobius_formula(u, w, d);
        tally.check(formula == mu, [&] {
          return pair_text(u, w, dv) + " formula " + std::to_string(formula) + " recursion " + std::to_string(mu);
        });
      }
    }
  }
  const double secs = seconds_since(start);
  const bool in_time = secs < 120.0;
  return {2, "signed d-normal count equals the Mobius recursion",
          tally.ok() && in_time,
          tally.summary("pairs, d=1..4, |w|<=" + std::to_string(max_len)) + (in_time ? "" : ", over the 2 min budget")};
}

CriterionResult shelling(bool quick) {
  const auto start = Clock::now();
  const std::size_t max_len = quick ? 5 : 7;
  Tally tally;
  for (int dv = 1; dv <= 3; ++dv) {
    const RestrictionParam d(dv);
    for (const Word& w : restricted_words_up_to(max_len, d)) {
      for (const Word& u : distinct_subwords(w)) {
        if (!is_restricted(u, d)) continue;
        const Interval iv = interval(u, w, d);
        std::vector<ChainLabel> ascending;
        std::int64_t descending = 0;
        for (const MaximalChain& c : all_maximal_chains(iv)) {
          ChainLabel lab = label_chain(c);
          if (lab.descending()) ++descending;
          if (lab.ascending()) ascending.push_back(std::move(lab));
        }
        tally.check(ascending.size() == 1, [&] {
          return pair_text(u, w, dv) + " has " + std::to_string(ascending.size()) + " ascending chains";
        });
        if (ascending.size() == 1) {
          std::set<std::size_t> complement;
          for (std::size_t p = 1; p <= w.size(); ++p) complement.insert(p);
          for (std::size_t p : rightmost_embedding(u, w)) complement.erase(p);
          const std::set<std::size_t> deleted(ascending[0].labels.begin(), ascending[0].labels.end());
          tally.check(deleted == complement,
                      [&] { return pair_text(u, w, dv) + " ascending chain misses the rightmost complement"; });
        }
        const std::int64_t normal = count_d_normal(u, w, d);
        tally.check(descending == normal, [&] {
          return pair_text(u, w, dv) + " descending " + std::to_string(descending) + " normal " +
                 std::to_string(normal);
        });
      }
    }
  }
  const double secs = seconds_since(start);
  const bool in_time = secs < 300.0;
  return {3, "chain labeling: unique ascending chain, rightmost complement, descending count",
          tally.ok() && in_time,
          tally.summary("checks, d=1..3, |w|<=" + std::to_string(max_len)) + (in_time ? "" : ", over the 5 min budget")};
}

CriterionResult involution(bool quick) {
  const std::size_t max_len = quick ? 5 : 7;
  const RestrictionParam d(3);
  Tally tally;
  long family_total = 0;
  for (const Word& w : restricted_words_up_to(max_len, d)) {
    for (const Word& u : distinct_subwords(w)) {
      if (u == w || !is_restricted(u, d)) continue;
      const std::vector<Embedding> family = normal_family(u, w, d);
      family_total += static_cast<long>(family.size());
      long even = 0;
      long odd = 0;
      for (const Embedding& iota : family) {
        (iota.size() % 2 == 0 ? even : odd) += 1;
        const Embedding image = psi(iota, u, w, d);
        const bool in_family = std::binary_search(family.begin(), family.end(), image);
        tally.check(in_family, [&] { return pair_text(u, w, 3) + " psi leaves N"; });
        if (!in_family) continue;
        tally.check(psi(image, u, w, d) == iota, [&] { return pair_text(u, w, 3) + " psi is not an involution"; });
        tally.check((image.size() + iota.size()) % 2 == 1,
                    [&] { return pair_text(u, w, 3) + " psi keeps parity"; });
      }
      tally.check(even == odd, [&] { return pair_text(u, w, 3) + " even and odd parts of N differ"; });
    }
  }
  return {4, "involution psi on the normal family", tally.ok(),
          tally.summary("checks over " + std::to_string(family_total) + " members of N, d=3, |w|<=" +
                        std::to_string(max_len))};
}

void sweep_series(Tally& tally, int dv, std::size_t max_u, std::size_t max_len) {
  const RestrictionParam d(dv);
  const MobiusTable mu(max_len, d);
  const std::vector<Word> hosts = all_words_up_to(max_len);
  for (const Word& u : restricted_words_up_to(max_u, d)) {
    const TruncatedSeries z = expand(build_Z(u, d), max_len);
    const TruncatedSeries m = expand(build_M(u, d), max_len);
    for (const Word& w : hosts) {
      const bool below = is_restricted(w, d) && is_subword(u, w);
      const Integer zc = z.coefficient(w);
      const Integer mc = m.coefficient(w);
      tally.check(zc == (below ? 1 : 0),
                  [&] { return "Z" + pair_text(u, w, dv) + " coefficient " + zc.str(); });
      tally.check(mc == mu(u, w),
                  [&] { return "M" + pair_text(u, w, dv) + " coefficient " + mc.str() + " mu " + std::to_string(mu(u, w)); });
    }
  }
}

CriterionResult rational_series(bool quick) {
  Tally tally;
  const std::size_t max_len = quick ? 6 : 8;
  const std::size_t max_u = quick ? 3 : 4;
  const std::size_t general_len = quick ? 5 : 7;
  sweep_series(tally, 3, max_u, max_len);
  for (int dv : {1, 2, 4}) sweep_series(tally, dv, 3, general_len);
  return {5, "Z and M expressions expand to zeta and mu", tally.ok(),
          tally.summary("coefficients, d=3 |u|<=" + std::to_string(max_u) + " L=" + std::to_string(max_len) +
                        "; d=1,2,4 |u|<=3 L=" + std::to_string(general_len))};
}

void check_automaton_sweep(Tally& tally, bool mobius_kind, RestrictionParam d, std::size_t max_len) {
  const int dv = d.value();
  const MobiusTable mu(max_len, d);
  const PairAutomaton A = mobius_kind ? build_mobius_automaton(d) : build_zeta_automaton(d);
  const AcceptedSeries accepted = accepted_coefficients(A, max_len);
  const std::string name = mobius_kind ? "mobius" : "zeta";

  // Every emitted pair must be expected.
  for (const auto& [key, c] : accepted) {
    const auto& [u, w] = key;
    const bool both = is_restricted(u, d) && is_restricted(w, d);
    if (mobius_kind) {
      const std::int64_t expected = mu(u, w);
      const std::int64_t normal = both ? count_d_normal(u, w, d) : 0;
      const int sign = (u.size() + w.size()) % 2 == 0 ? 1 : -1;
      tally.check(c.value == expected && c.walks == normal && c.value == sign * c.walks, [&, &u = u, &w = w, &c = c] {
        return name + pair_text(u, w, dv) + " value " + c.value.str() + " walks " + c.walks.str() + " mu " +
               std::to_string(expected) + " normal " + std::to_string(normal);
      });
    } else {
      const bool below = both && is_subword(u, w);
      tally.check(below && c.value == 1 && c.walks == 1, [&, &u = u, &w = w, &c = c] {
        return name + pair_text(u, w, dv) + " value " + c.value.str() + " walks " + c.walks.str();
      });
    }
  }
  // Every expected pair must be emitted.
  for (const auto& [w, column] : mu.columns()) {
    for (const auto& [u, value] : column) {
      if (mobius_kind && value == 0) continue;
      tally.check(accepted.count({u, w}) == 1, [&, &u = u, &w = w] { return name + " misses " + pair_text(u, w, dv); });
    }
  }
}

CriterionResult automata(bool quick) {
  const auto start = Clock::now();
  const std::size_t max_len = quick ? 6 : 8;
  Tally tally;
  for (int dv : {2, 3}) {
    check_automaton_sweep(tally, false, RestrictionParam(dv), max_len);
    check_automaton_sweep(tally, true, RestrictionParam(dv), max_len);
  }
  const double secs = seconds_since(start);
  const bool in_time = secs < 300.0;
  return {6, "pair automata accept zeta and mu with the stated walk counts", tally.ok() && in_time,
          tally.summary("pair checks, d=2,3, |w|<=" + std::to_string(max_len)) +
              (in_time ? "" : ", over the 5 min budget")};
}

CriterionResult norm_genfun(bool quick) {
  const RestrictionParam d(3);
  const int max_norm = quick ? 4 : 6;
  const std::size_t max_n = quick ? 10 : 14;
  const int route_norm = quick ? 4 : 5;
  Tally tally;

  std::vector<std::vector<Word>> hosts(max_n + 1);
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const Composition& beta : compositions_of(static_cast<int>(n), 4)) hosts[n].push_back(phi(beta));
  }
  for (int norm = 1; norm <= max_norm; ++norm) {
    for (const Composition& alpha : compositions_of(norm, 4)) {
      const Word u = phi(alpha);
      const std::vector<Integer> z = series_coeffs(zeta_genfun(alpha, d), max_n);
      const std::vector<Integer> m = series_coeffs(mobius_genfun(alpha, d), max_n);
      for (std::size_t n = 0; n <= max_n; ++n) {
        std::int64_t count = 0;
        std::int64_t mu_sum = 0;
        for (const Word& w : hosts[n]) {
          if (!is_subword(u, w)) continue;
          ++count;
          mu_sum += mobius_formula(u, w, d);
        }
        tally.check(z[n] == count, [&] {
          return "Z(" + alpha.display() + ") x^" + std::to_string(n) + " " + z[n].str() + " vs " + std::to_string(count);
        });
        tally.check(m[n] == mu_sum, [&] {
          return "M(" + alpha.display() + ") x^" + std::to_string(n) + " " + m[n].str() + " vs " + std::to_string(mu_sum);
        });
      }
      if (norm <= route_norm && !u.empty()) {
        tally.check(zeta_genfun_closed(alpha, d) == zeta_genfun_image(alpha, d),
                    [&] { return "Z routes differ at " + alpha.display(); });
        tally.check(mobius_genfun_closed(alpha, d) == mobius_genfun_image(alpha, d),
                    [&] { return "M routes differ at " + alpha.display(); });
      }
    }
  }
  return {7, "norm generating functions match enumeration; closed form equals image route", tally.ok(),
          tally.summary("checks, d=3, |alpha|<=" + std::to_string(max_norm) + ", n<=" + std::to_string(max_n) +
                        ", routes |alpha|<=" + std::to_string(route_norm))};
}

CriterionResult spot_values(bool) {
  const RestrictionParam d(3);
  const Word u("abb");
  const Word w("aabbab");
  const std::int64_t formula = mobius_formula(u, w, d);
  const std::int64_t normal = count_d_normal(u, w, d);
  const std::int64_t recursion = mobius_recursive(u, w, d);

  const Word b("b");
  const std::int64_t brute = mobius_recursive(b, Word("bb"), d) + mobius_recursive(b, Word("ab"), d) +
                             mobius_recursive(b, Word("ba"), d);
  const Integer x3 = series_coeffs(mobius_genfun(Composition({2}), d), 3)[3];

  const bool ok = formula == -2 && normal == 2 && recursion == -2 && brute == -3 && x3 == -3;
  std::ostringstream detail;
  detail << "mu(abb,aabbab)=" << formula << " normal=" << normal << " recursion=" << recursion
         << "; [x^3] M((2))=" << x3 << " brute=" << brute;
  return {8, "spot values", ok, detail.str()};
}

} // namespace

CriterionResult automaton_check(bool mobius_kind, RestrictionParam d, std::size_t max_len) {
  Tally tally;
  check_automaton_sweep(tally, mobius_kind, d, max_len);
  return {6, std::string(mobius_kind ? "mobius" : "zeta") + " automaton, d=" + std::to_string(d.value()), tally.ok(),
          tally.summary("pair checks, |w|<=" + std::to_string(max_len))};
}

int criterion_count() { return 8; }

CriterionResult run_criterion(int id, bool quick) {
  switch (id) {
    case 1: return figure_interval(quick);
    case 2: return mobius_theorem(quick);
    case 3: return shelling(quick);
    case 4: return involution(quick);
    case 5: return rational_series(quick);
    case 6: return automata(quick);
    case 7: return norm_genfun(quick);
    case 8: return spot_values(quick);
    default: return {id, "unknown criterion", false, "no such id"};
  }
}

std::string format_result(const CriterionResult& r) {
  return std::string(r.pass ? "PASS " : "FAIL ") + std::to_string(r.id) + " " + r.title + ": " + r.detail;
}

bool run_acceptance(bool quick, std::ostream& out) {
  bool all = true;
  for (int id = 1; id <= criterion_count(); ++id) {
    CriterionResult r;
    try {
      r = run_criterion(id, quick);
    } catch (const std::exception& e) {
      r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
    }
    out << format_result(r) << std::endl;
    all = all && r.pass;
  }
  return all;
}

} // namespace subword
