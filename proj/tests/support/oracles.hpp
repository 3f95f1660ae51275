#pragma once

// Brute-force reference implementations used to check the library. None of
// these call into the code under test beyond plain data accessors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Vertices as strings "0101"; comparability by direct coordinate scan.
inline bool comparable(const std::string& u, const std::string& v) {
  bool le = true, ge = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    le = le && u[i] <= v[i];
    ge = ge && u[i] >= v[i];
  }
  return u != v && (le || ge);
}

inline std::vector<std::string> all_tuples(unsigned k) {
  std::vector<std::string> out;
  for (std::uint32_t m = 0; m < (1u << k); ++m) {
    std::string s;
    for (unsigned b = 0; b < k; ++b) s += ((m >> (k - 1 - b)) & 1u) ? '1' : '0';
    out.push_back(s);
  }
  return out;
}

inline std::size_t edge_count(unsigned k) {
  const auto vs = all_tuples(k);
  std::size_t n = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) n += comparable(vs[i], vs[j]);
  return n;
}

// The pairing rule evaluated directly on strings.
inline int pairing(const std::string& i, const std::string& j) {
  if (i == j || !comparable(i, j)) return 0;
  if (i > j) return -pairing(j, i);
  int s = 0;
  for (std::size_t t = 0; t < i.size(); ++t) s += (i[t] - '0') - (j[t] - '0');
  return (s % 2 == 0) ? -1 : 1;
}

// Rank over Q by fraction-free Gaussian elimination on long double-free rationals.
inline std::size_t rational_rank(std::vector<std::vector<long long>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const long long a = m[r][c], b = m[i][c];
      if (b == 0) continue;
      long long g = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        m[i][j] = m[i][j] * a - m[r][j] * b;
        g = std::gcd(g, m[i][j]);
      }
      if (g > 1)
        for (auto& x : m[i]) x /= g;
    }
    ++r;
  }
  return r;
}

// Determinant by Laplace expansion (small matrices only).
inline long long laplace_det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<long long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    d += ((c % 2) ? -1 : 1) * m[0][c] * laplace_det(minor);
  }
  return d;
}

// Rank over F_2 by elimination on bit rows.
inline std::size_t f2_rank(const std::vector<std::vector<int>>& m) {
  std::vector<std::vector<int>> a = m;
  for (auto& row : a)
    for (auto& x : row) x = ((x % 2) + 2) % 2;
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != r && a[i][c])
        for (std::size_t j = 0; j < cols; ++j) a[i][j] ^= a[r][j];
    ++r;
  }
  return r;
}

// Ribbon surfaces from a different encoding: darts are (curve, slot, end),
// where slot t is the arc from the t-th to the (t+1)-th crossing of the
// curve and end 0/1 is its start/finish.
struct Traced {
  int genus = 0;
  int faces = 0;
  int components = 0;
};

inline Traced trace(const std::vector<std::vector<int>>& inter, const std::vector<std::vector<std::size_t>>& orders,
                    const std::map<std::pair<std::size_t, std::size_t>, int>& bits) {
  const std::size_t n = inter.size();
  std::map<std::tuple<std::size_t, std::size_t, int>, int> dart_id;
  std::vector<std::tuple<std::size_t, std::size_t, int>> darts;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t t = 0; t < orders[x].size(); ++t)
      for (int e = 0; e < 2; ++e) {
        dart_id[{x, t, e}] = static_cast<int>(darts.size());
        darts.emplace_back(x, t, e);
      }
  auto slot_of = [&](std::size_t x, std::size_t partner) {
    return static_cast<std::size_t>(std::find(orders[x].begin(), orders[x].end(), partner) - orders[x].begin());
  };
  // At the crossing of x and partner: outgoing dart = start of slot s,
  // incoming dart = finish of slot s-1.
  auto out_dart = [&](std::size_t x, std::size_t partner) { return dart_id[{x, slot_of(x, partner), 0}]; };
  auto in_dart = [&](std::size_t x, std::size_t partner) {
    const std::size_t m = orders[x].size();
    return dart_id[{x, (slot_of(x, partner) + m - 1) % m, 1}];
  };
  std::vector<int> twin(darts.size()), rot(darts.size());
  for (std::size_t d = 0; d < darts.size(); ++d) {
    auto [x, t, e] = darts[d];
    twin[d] = dart_id[{x, t, 1 - e}];
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  int crossings = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!inter[x][y]) continue;
      ++crossings;
      parent[find(static_cast<int>(x))] = find(static_cast<int>(y));
      const int xo = out_dart(x, y), xi = in_dart(x, y), yo = out_dart(y, x), yi = in_dart(y, x);
      std::vector<int> cyc = bits.at({x, y}) ? std::vector<int>{xo, yi, xi, yo} : std::vector<int>{xo, yo, xi, yi};
      for (int i = 0; i < 4; ++i) rot[cyc[i]] = cyc[(i + 1) % 4];
    }
  Traced t;
  std::vector<char> seen(darts.size(), 0);
  for (std::size_t d = 0; d < darts.size(); ++d) {
    if (seen[d]) continue;
    ++t.faces;
    for (int c = static_cast<int>(d); !seen[c]; c = rot[twin[c]]) seen[c] = 1;
  }
  std::vector<char> used(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    if (!orders[x].empty()) used[find(static_cast<int>(x))] = 1;
  t.components = static_cast<int>(std::count(used.begin(), used.end(), 1));
  // sum over components of (2 - chi - b) / 2 with chi = -V
  t.genus = (2 * t.components + crossings - t.faces) / 2;
  return t;
}

// Minimum genus over every visit order (first partner fixed) and every bit assignment.
inline int naive_min_genus(const std::vector<std::vector<int>>& inter) {
  const std::size_t n = inter.size();
  std::vector<std::vector<std::size_t>> base(n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (inter[x][y]) {
        base[x].push_back(y);
        if (x < y) pairs.emplace_back(x, y);
      }
  int best = 1 << 20;
  std::vector<std::vector<std::size_t>> orders = base;
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    if (x == n) {
      for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::map<std::pair<std::size_t, std::size_t>, int> bits;
        for (std::size_t c = 0; c < pairs.size(); ++c) bits[pairs[c]] = (mask >> c) & 1u;
        best = std::min(best, trace(inter, orders, bits).genus);
      }
      return;
    }
    orders[x] = base[x];
    if (orders[x].size() <= 2) {
      rec(x + 1);
      return;
    }
    do rec(x + 1);
    while (std::next_permutation(orders[x].begin() + 1, orders[x].end()));
  };
  rec(0);
  return best;
}

// Random symmetric 0/1 matrix without isolated curves.
inline std::vector<std::vector<int>> random_pattern(std::mt19937& rng, std::size_t n, std::size_t max_edges) {
  for (;;) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    std::vector<std::pair<std::size_t, std::size_t>> all;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) all.emplace_back(i, j);
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t e = std::uniform_int_distribution<std::size_t>(1, std::min(max_edges, all.size()))(rng);
    for (std::size_t t = 0; t < e; ++t) m[all[t].first][all[t].second] = m[all[t].second][all[t].first] = 1;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) ok = ok && std::count(m[i].begin(), m[i].end(), 1) > 0;
    if (ok) return m;
  }
}

}  // namespace oracle
