#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdlib>
#include <set>

#include "doctest.h"
#include "ybx/set_yb.hpp"

using namespace ybx;

namespace {

// Straight-line re-derivation of the relation on one map, used as the oracle.
bool naive_passes(const FiniteMap& s, Form form) {
  auto S = [&](int a, int b) { return s.apply(a, b); };
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      for (int z = 0; z < s.n; ++z) {
        std::array<int, 3> lhs, rhs;
        if (form == Form::braid) {
          auto [u1, u2] = S(x, y);
          auto [v1, v2] = S(u2, z);
          auto [w1, w2] = S(u1, v1);
          lhs = {w1, w2, v2};
          auto [a1, a2] = S(y, z);
          auto [b1, b2] = S(x, a1);
          auto [c1, c2] = S(b2, a2);
          rhs = {b1, c1, c2};
        } else {
          auto [a1, a2] = S(y, z);
          auto [b1, b2] = S(x, a2);
          auto [c1, c2] = S(b1, a1);
          lhs = {c1, c2, b2};
          auto [d1, d2] = S(x, y);
          auto [e1, e2] = S(d1, z);
          auto [f1, f2] = S(d2, e2);
          rhs = {e1, f1, f2};
        }
        if (lhs != rhs) return false;
      }
  return true;
}

std::vector<FiniteMap> naive_all(int n, Form form) {
  const int cells = n * n;
  long total = 1;
  for (int i = 0; i < cells; ++i) total *= cells;
  std::vector<FiniteMap> out;
  for (long code = 0; code < total; ++code) {
    FiniteMap s;
    s.n = n;
    long c = code;
    for (int i = 0; i < cells; ++i) {
      s.table.emplace_back(static_cast<int>(c % cells) / n, static_cast<int>(c % cells) % n);
      c /= cells;
    }
    if (naive_passes(s, form)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteMap flip_compose(const FiniteMap& s) {
  FiniteMap t = s;
  for (auto& [a, b] : t.table) std::swap(a, b);
  return t;
}

}  // namespace

TEST_CASE("n=1 has exactly the one map") {
  for (Form f : {Form::braid, Form::qybe}) {
    const auto res = enumerate_solutions(1, f, false);
    CHECK(res.summary.count == 1);
    CHECK(res.summary.count_up_to_iso == 1);
    CHECK(res.solutions.size() == 1);
  }
}

TEST_CASE("n=2 solutions equal the naive 256-map oracle, both forms") {
  for (Form f : {Form::braid, Form::qybe}) {
    const auto naive = naive_all(2, f);
    CHECK(naive.size() == 43);
    auto res = enumerate_solutions(2, f, false);
    CHECK(res.summary.count == 43);
    std::sort(res.solutions.begin(), res.solutions.end());
    CHECK(res.solutions == naive);

    const auto iso = enumerate_solutions(2, f, true);
    CHECK(iso.summary.count == 43);
    CHECK(iso.summary.count_up_to_iso == 26);
    CHECK(iso.solutions.size() == 26);
  }
}

TEST_CASE("flip-compose is a bijection between the two forms at n=2") {
  const auto braid = naive_all(2, Form::braid);
  const auto qybe = naive_all(2, Form::qybe);
  std::vector<FiniteMap> mapped;
  for (const auto& s : qybe) mapped.push_back(flip_compose(s));
  std::sort(mapped.begin(), mapped.end());
  CHECK(mapped == braid);
  // And pointwise on every one of the 256 maps.
  for (long code = 0; code < 256; ++code) {
    FiniteMap s;
    s.n = 2;
    long c = code;
    for (int i = 0; i < 4; ++i) {
      s.table.emplace_back(static_cast<int>(c % 4) / 2, static_cast<int>(c % 4) % 2);
      c /= 4;
    }
    CHECK(naive_passes(s, Form::braid) == naive_passes(flip_compose(s), Form::qybe));
    CHECK(set_yb_check(s, Form::braid).pass == naive_passes(s, Form::braid));
  }
}

TEST_CASE("relabeling permutes solutions onto solutions") {
  const auto res = enumerate_solutions(2, Form::braid, false);
  const std::vector<int> swap01 = {1, 0};
  std::set<FiniteMap> all(res.solutions.begin(), res.solutions.end());
  for (const auto& s : res.solutions) {
    const FiniteMap t = relabel(s, swap01);
    CHECK(all.count(t) == 1);
    CHECK(canonical_form(t) == canonical_form(s));
  }
}

TEST_CASE("canonical form is idempotent and minimal") {
  const auto res = enumerate_solutions(2, Form::braid, true);
  for (const auto& s : res.solutions) {
    CHECK(canonical_form(s) == s);
    CHECK_FALSE(relabel(s, {1, 0}) < s);
  }
}

TEST_CASE("thread count does not change the result") {
  setenv("YBX_THREADS", "1", 1);
  const auto one = enumerate_solutions(2, Form::braid, true);
  setenv("YBX_THREADS", "3", 1);
  const auto three = enumerate_solutions(2, Form::braid, true);
  setenv("YBX_THREADS", "8", 1);
  const auto eight = enumerate_solutions(3, Form::braid, false);
  setenv("YBX_THREADS", "2", 1);
  const auto two = enumerate_solutions(3, Form::braid, false);
  unsetenv("YBX_THREADS");
  CHECK(one.solutions == three.solutions);
  CHECK(eight.solutions == two.solutions);
  CHECK(eight.summary.count == two.summary.count);
}

TEST_CASE("n=3 solutions: counts, containment and orbit consistency") {
  const auto res = enumerate_solutions(3, Form::braid, false);
  CHECK(res.summary.count == 5707);
  CHECK(res.summary.count == res.solutions.size());

  std::set<FiniteMap> all(res.solutions.begin(), res.solutions.end());
  CHECK(all.count(identity_map(3)) == 1);
  CHECK(all.count(twist_map(3)) == 1);
  FiniteMap minmax;
  minmax.n = 3;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) minmax.table.emplace_back(std::min(i, j), std::max(i, j));
  CHECK(all.count(minmax) == 1);

  // Spot-check a deterministic sample against the exhaustive checker.
  for (size_t i = 0; i < res.solutions.size(); i += 97)
    CHECK(set_yb_check(res.solutions[i], Form::braid).pass);

  // Summing the orbit sizes of the canonical representatives must return the
  // raw count: the reduced and raw enumerations describe the same set.
  const auto iso = enumerate_solutions(3, Form::braid, true);
  CHECK(iso.summary.count_up_to_iso == 1045);
  std::vector<int> perm = {0, 1, 2};
  std::uint64_t orbit_total = 0;
  for (const auto& rep : iso.solutions) {
    std::set<FiniteMap> orbit;
    std::vector<int> p = perm;
    do {
      orbit.insert(relabel(rep, p));
    } while (std::next_permutation(p.begin(), p.end()));
    orbit_total += orbit.size();
  }
  CHECK(orbit_total == res.summary.count);
}

TEST_CASE("size limits are enforced") {
  CHECK_THROWS_AS(enumerate_solutions(0, Form::braid, false), DomainError);
  CHECK_THROWS_AS(enumerate_solutions(4, Form::braid, false), DomainError);
}
