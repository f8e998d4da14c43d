#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "ybx/set_yb.hpp"

namespace ybx {

namespace {

// Enumeration works on a flat table of pair codes a*n+b, -1 for not-yet-set.
using Table = std::vector<int>;

struct Chains {
  // Evaluate both sides on one triple; returns false in *decided if any
  // needed cell is still unset.  Codes: lhs/rhs packed as ((a*n)+b)*n+c.
  int n;
  Form form;
  const Table* t;

  int at(int x, int y) const { return (*t)[static_cast<size_t>(x) * n + y]; }

  bool triple_consistent(int x, int y, int z) const {
    // Unknown cells make the triple vacuously consistent at this depth.
    if (form == Form::braid) {
      const int u = at(x, y);
      if (u < 0) return true;
      const int u1 = u / n, u2 = u % n;
      const int v = at(u2, z);
      const int a = at(y, z);
      if (a < 0) return true;
      const int a1 = a / n, a2 = a % n;
      const int b = at(x, a1);
      if (v < 0 || b < 0) return true;
      const int v1 = v / n, v2 = v % n;
      const int b1 = b / n, b2 = b % n;
      const int w = at(u1, v1);
      const int c = at(b2, a2);
      if (w < 0 || c < 0) return true;
      return (w / n == b1) && (w % n == c / n) && (v2 == c % n);
    }
    const int a = at(y, z);
    const int d = at(x, y);
    if (a < 0 || d < 0) return true;
    const int a1 = a / n, a2 = a % n;
    const int d1 = d / n, d2 = d % n;
    const int b = at(x, a2);
    const int e = at(d1, z);
    if (b < 0 || e < 0) return true;
    const int b1 = b / n, b2 = b % n;
    const int e1 = e / n, e2 = e % n;
    const int c = at(b1, a1);
    const int f = at(d2, e2);
    if (c < 0 || f < 0) return true;
    return (c / n == e1) && (c % n == f / n) && (b2 == f % n);
  }

  bool all_consistent() const {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (!triple_consistent(x, y, z)) return false;
    return true;
  }
};

void dfs(Table& t, size_t cell, int n, const Chains& ch, std::vector<Table>& out) {
  if (cell == t.size()) {
    out.push_back(t);
    return;
  }
  for (int v = 0; v < n * n; ++v) {
    t[cell] = v;
    // Full rescan is cheap at n <= 3 and prunes hard: a bad partial value
    // dies before the remaining cells multiply the subtree out.
    if (ch.all_consistent()) dfs(t, cell + 1, n, ch, out);
  }
  t[cell] = -1;
}

int thread_budget() {
  if (const char* env = std::getenv("YBX_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

FiniteMap from_table(const Table& t, int n) {
  FiniteMap s;
  s.n = n;
  s.table.reserve(t.size());
  for (int code : t) s.table.emplace_back(code / n, code % n);
  return s;
}

std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

FiniteMap relabel(const FiniteMap& s, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != s.n) throw DimError("relabel: permutation size");
  std::vector<int> inv(s.n);
  for (int i = 0; i < s.n; ++i) inv[sigma[i]] = i;
  FiniteMap r;
  r.n = s.n;
  r.table.resize(s.table.size());
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      auto [a, b] = s.apply(inv[x], inv[y]);
      r.table[static_cast<size_t>(x) * s.n + y] = {sigma[a], sigma[b]};
    }
  return r;
}

FiniteMap canonical_form(const FiniteMap& s) {
  FiniteMap best = s;
  for (const auto& p : all_perms(s.n)) {
    FiniteMap c = relabel(s, p);
    if (c < best) best = c;
  }
  return best;
}

EnumerationResult enumerate_solutions(int n, Form form, bool up_to_iso) {
  if (n < 1 || n > 3) throw DomainError("enumerate: n must be 1, 2 or 3");
  const auto t0 = std::chrono::steady_clock::now();

  // Partition on the value of the first table cell; each partition explores
  // independently and results are concatenated in partition order, so the
  // output never depends on how many workers ran.
  const int parts = n * n;
  std::vector<std::vector<Table>> found(parts);
  auto run_part = [&](int v0) {
    Table t(static_cast<size_t>(n) * n, -1);
    t[0] = v0;
    Chains ch{n, form, &t};
    if (ch.all_consistent()) dfs(t, 1, n, ch, found[v0]);
  };

  const int workers = std::min(thread_budget(), parts);
  if (workers <= 1) {
    for (int v = 0; v < parts; ++v) run_part(v);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int v; (v = next.fetch_add(1)) < parts;) run_part(v);
      });
    for (auto& th : pool) th.join();
  }

  EnumerationResult res;
  res.summary.n = n;
  res.summary.form = form;
  res.summary.up_to_iso = up_to_iso;

  std::vector<FiniteMap> all;
  for (const auto& bucket : found)
    for (const auto& t : bucket) all.push_back(from_table(t, n));
  res.summary.count = all.size();

  std::vector<FiniteMap> reps;
  for (const auto& s : all) reps.push_back(canonical_form(s));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  res.summary.count_up_to_iso = reps.size();

  res.solutions = up_to_iso ? std::move(reps) : std::move(all);

  res.summary.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace ybx
