#pragma once

// Brute-force reference implementations on plain strings. Nothing here calls the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline bool restricted(const std::string& w, int d) { return w.find(std::string(d + 1, 'b')) == std::string::npos; }

inline bool subword(const std::string& u, const std::string& w) {
  std::size_t i = 0;
  for (char c : w) {
    if (i < u.size() && u[i] == c) ++i;
  }
  return i == u.size();
}

inline std::vector<std::string> all_words(std::size_t max_len) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() < max_len) {
      out.push_back(out[i] + 'a');
      out.push_back(out[i] + 'b');
    }
  }
  return out;
}

// Every distinct word obtained from w by deleting letters.
inline std::set<std::string> subwords_of(const std::string& w) {
  std::set<std::string> out;
  for (std::uint32_t mask = 0; mask < (1u << w.size()); ++mask) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (mask & (1u << i)) s += w[i];
    }
    out.insert(s);
  }
  return out;
}

// mu(u, w) over A*_d from mu(u,u) = 1, sum_{u <= v <= w} mu(u, v) = 0.
inline std::int64_t mu(const std::string& u, const std::string& w, int d) {
  if (!restricted(u, d) || !restricted(w, d) || !subword(u, w)) return 0;
  std::vector<std::string> between;
  for (const std::string& v : subwords_of(w)) {
    if (restricted(v, d) && subword(u, v)) between.push_back(v);
  }
  std::sort(between.begin(), between.end(),
            [](const std::string& x, const std::string& y) { return x.size() != y.size() ? x.size() < y.size() : x < y; });
  std::map<std::string, std::int64_t> m;
  for (const std::string& v : between) {
    if (v == u) {
      m[v] = 1;
      continue;
    }
    std::int64_t s = 0;
    for (const auto& [z, val] : m) {
      if (z.size() < v.size() && subword(z, v)) s += val;
    }
    m[v] = -s;
  }
  return m[w];
}

// Increasing 1-based position lists of w spelling u.
inline std::vector<std::vector<std::size_t>> embeddings(const std::string& u, const std::string& w) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << w.size()); ++mask) {
    std::vector<std::size_t> pos;
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (mask & (1u << i)) {
        pos.push_back(i + 1);
        s += w[i];
      }
    }
    if (s == u) out.push_back(pos);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Embeddings that support every repeated letter of w and put an a in front of each
// maximal run of exactly d b's in u: that a is supported, or it is w's first letter.
inline std::int64_t normal_count(const std::string& u, const std::string& w, int d) {
  std::int64_t count = 0;
  for (const auto& e : embeddings(u, w)) {
    std::set<std::size_t> in(e.begin(), e.end());
    bool ok = true;
    for (std::size_t j = 2; j <= w.size() && ok; ++j) {
      if (w[j - 1] == w[j - 2] && !in.count(j)) ok = false;
    }
    for (std::size_t k = 0; k < u.size() && ok; ++k) {
      if (u[k] != 'b' || (k > 0 && u[k - 1] == 'b')) continue;
      std::size_t len = 0;
      while (k + len < u.size() && u[k + len] == 'b') ++len;
      if (len != static_cast<std::size_t>(d)) continue;
      const std::size_t p = e[k];
      if (p == 1) continue;
      if (w[p - 2] != 'a' || (!in.count(p - 1) && p - 1 != 1)) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

inline std::vector<std::vector<int>> compositions(int n, int max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int p = 1; p <= std::min(n, max_part); ++p) {
    for (auto rest : compositions(n - p, max_part)) {
      rest.insert(rest.begin(), p);
      out.push_back(rest);
    }
  }
  return out;
}

inline std::string phi(const std::vector<int>& parts) {
  std::string s;
  for (int p : parts) s += 'a' + std::string(static_cast<std::size_t>(p - 1), 'b');
  return s.substr(1);
}

} // namespace oracle
