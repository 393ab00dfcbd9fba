// Acceptance suite: one line per criterion, "[PASS]" or "[FAIL]", with the
// wall-clock budget of each criterion enforced. Exit status is non-zero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "job_support.hpp"
#include "linkage_kit/linkage.hpp"
#include "linkage_kit/oracle.hpp"
#include "linkage_kit/parabolic.hpp"
#include "test_support.hpp"

using namespace linkage_kit;
using namespace linkage_kit::testing;

namespace {

constexpr Convention kBoth[] = {Convention::paper, Convention::shifted};
const LinkageOptions kNoWitnesses{kDefaultOrbitGuard, false};

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (condition || !ok) {
      ok = ok && condition;
      return;
    }
    ok = false;
    detail = what;
  }
};

std::set<WeightL> algebraic(const std::set<LocAnChar>& chars) {
  std::set<WeightL> out;
  for (const auto& c : chars) out.insert(c.algebraic);
  return out;
}

// Every weight with |S| components, each drawn from the integer grid [lo, hi].
std::vector<WeightL> product_grid(std::size_t dim, std::size_t embeddings, long lo, long hi) {
  const auto one = integer_grid(dim, lo, hi);
  std::vector<WeightL> out{WeightL{}};
  for (std::size_t s = 0; s < embeddings; ++s) {
    std::vector<WeightL> next;
    for (const auto& prefix : out) {
      for (const auto& c : one) {
        WeightL w = prefix;
        w.components.push_back(c);
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

// Splits [0, n) over hardware threads; fn(i) must be thread-safe.
Verdict parallel_for(std::size_t n, const std::function<Verdict(std::size_t)>& fn) {
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<Verdict>> parts;
  for (std::size_t w = 0; w < workers; ++w) {
    parts.push_back(std::async(std::launch::async, [&, w] {
      Verdict v;
      for (std::size_t i = w; i < n && v.ok; i += workers) {
        const Verdict one = fn(i);
        v.require(one.ok, one.detail);
      }
      return v;
    }));
  }
  Verdict total;
  for (auto& p : parts) {
    const Verdict v = p.get();
    total.require(v.ok, v.detail);
  }
  return total;
}

Verdict rank_one_closed_form() {
  Verdict v;
  const auto ctx = context("A_1", 1);
  for (long l = -10; l <= 10; ++l) {
    std::set<WeightL> expected{weight({{l}})};
    if (l >= 0) expected.insert(weight({{-l - 2}}));
    for (auto c : kBoth)
      v.require(strongly_linked_set(ctx, character(weight({{l}})), c).algebraic_set() == expected,
                "lambda=" + std::to_string(l) + " convention=" + to_string(c));
  }
  return v;
}

Verdict oracle_equivalence() {
  Verdict total;
  for (const auto* type : {"A_1", "A_2", "B_2"}) {
    for (std::size_t embeddings : {1u, 2u}) {
      const auto ctx = context(type, embeddings);
      const auto grid = product_grid(ctx.base().dim(), embeddings, -3, 3);
      const Verdict v = parallel_for(grid.size(), [&](std::size_t i) {
        Verdict one;
        const auto chi = character(grid[i]);
        for (auto c : kBoth) {
          const auto bfs = strongly_linked_set(ctx, chi, c).algebraic_set();
          const auto chains = algebraic(linkage_by_chains_stabilized(ctx, chi, c).members);
          one.require(bfs == chains, std::string(type) + " |S|=" + std::to_string(embeddings) + " weight " +
                                         format_weight(grid[i]) + " convention " + to_string(c));
        }
        return one;
      });
      total.require(v.ok, v.detail);
    }
  }
  return total;
}

Verdict product_decomposition() {
  Verdict total;
  for (const auto* type : {"A_1", "A_2"}) {
    const auto one = context(type, 1);
    const auto grid = integer_grid(one.base().dim(), -3, 3);
    std::vector<std::set<RationalVector>> single;
    for (const auto& g : grid) {
      std::set<RationalVector> s;
      for (const auto& w : strongly_linked_set(one, character(WeightL{{g}}), Convention::paper).algebraic_set())
        s.insert(w.components[0]);
      single.push_back(std::move(s));
    }
    for (std::size_t embeddings : {2u, 3u}) {
      const auto ctx = context(type, embeddings);
      std::size_t count = 1;
      for (std::size_t s = 0; s < embeddings; ++s) count *= grid.size();
      const Verdict v = parallel_for(count, [&](std::size_t index) {
        std::vector<std::size_t> picks;
        WeightL w;
        for (std::size_t s = 0, rest = index; s < embeddings; ++s, rest /= grid.size()) {
          picks.push_back(rest % grid.size());
          w.components.push_back(grid[picks.back()]);
        }
        // Members are distinct, so the size match plus per-component membership
        // is set equality with the Cartesian product.
        const auto linked = strongly_linked_set(ctx, character(w), Convention::paper, kNoWitnesses).members;
        std::size_t expected = 1;
        for (const auto p : picks) expected *= single[p].size();
        Verdict one;
        bool inside = linked.size() == expected;
        for (const auto& m : linked)
          for (std::size_t s = 0; s < embeddings && inside; ++s)
            inside = single[picks[s]].contains(m.character.algebraic.components[s]);
        one.require(inside, std::string(type) + " weight " + format_weight(w));
        return one;
      });
      total.require(v.ok, v.detail);
    }
  }
  return total;
}

int coxeter_order(const RootSystem& rs, std::size_t i, std::size_t j) {
  switch (rs.cartan()[i][j] * rs.cartan()[j][i]) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    default: return 6;
  }
}

Verdict dot_action_laws() {
  Verdict v;
  Gen gen(2024);
  for (const auto* type : {"A_1", "A_2", "A_3", "B_2"}) {
    const auto ctx = context(type, 3);
    const auto& rs = ctx.base();
    for (int trial = 0; trial < 1000; ++trial) {
      const auto w = gen.weight(ctx);
      const auto r = gen.root(ctx);
      v.require(ctx.dot_reflect(ctx.dot_reflect(w, r), r) == w, std::string(type) + " involution");

      auto q = gen.root(ctx);
      q.sigma = (r.sigma + 1 + static_cast<std::size_t>(gen.integer(0, 1))) % ctx.num_embeddings();
      v.require(ctx.dot_reflect(ctx.dot_reflect(w, r), q) == ctx.dot_reflect(ctx.dot_reflect(w, q), r),
                std::string(type) + " cross-embedding commutation");

      if (rs.rank() >= 2) {
        const auto sigma = static_cast<std::size_t>(gen.integer(0, 2));
        const auto i = static_cast<std::size_t>(gen.integer(0, static_cast<long>(rs.rank()) - 1));
        auto j = static_cast<std::size_t>(gen.integer(0, static_cast<long>(rs.rank()) - 2));
        if (j >= i) ++j;
        std::vector<GlobalRoot> left, right;
        for (int k = 0; k < coxeter_order(rs, i, j); ++k) {
          left.push_back({sigma, k % 2 == 0 ? i : j});
          right.push_back({sigma, k % 2 == 0 ? j : i});
        }
        v.require(ctx.dot_action(w, left) == ctx.dot_action(w, right), std::string(type) + " braid relation");
      }

      // equal Weyl group elements act equally on the dot orbit
      std::vector<std::size_t> word(static_cast<std::size_t>(gen.integer(0, 6)));
      for (auto& l : word) l = static_cast<std::size_t>(gen.integer(0, static_cast<long>(rs.rank()) - 1));
      const auto element = WeylElement::from_word(rs, word);
      const auto reduced = weyl_generate(rs, 100);
      const auto match = std::find(reduced.begin(), reduced.end(), element);
      std::vector<GlobalRoot> as_roots, as_reduced;
      for (auto l : word) as_roots.push_back({0, l});
      for (auto l : match->word()) as_reduced.push_back({0, l});
      v.require(ctx.dot_action(w, as_roots) == ctx.dot_action(w, as_reduced),
                std::string(type) + " word/element agreement");
    }
  }
  return v;
}

Verdict borel_degeneration() {
  Verdict total;
  for (const auto* type : {"A_1", "A_2", "B_2"}) {
    for (std::size_t embeddings : {1u, 2u}) {
      const auto ctx = context(type, embeddings);
      const auto borel = ParabolicSubset::borel(ctx.base());
      const auto grid = product_grid(ctx.base().dim(), embeddings, -3, 3);
      const Verdict v = parallel_for(grid.size(), [&](std::size_t i) {
        Verdict one;
        const auto chi = character(grid[i]);
        for (auto c : kBoth) {
          const auto cand = verma_factor_candidates(ctx, chi, borel, c);
          one.require(!cand.upper_bound && cand.algebraic_set() == verma_factors_borel(ctx, chi, c).algebraic_set(),
                      std::string(type) + " weight " + format_weight(grid[i]));
        }
        return one;
      });
      total.require(v.ok, v.detail);
    }
  }
  return total;
}

Verdict parabolic_filtering() {
  Verdict v;
  const auto a1 = context("A_1", 1);
  const auto g = ParabolicSubset::full(a1.base());
  const auto chi = character(weight({{2}}), "omega");
  v.require(verma_factor_candidates(a1, chi, g, Convention::paper).algebraic_set() == std::set<WeightL>{weight({{2}})},
            "A_1 candidates");
  v.require(noncritical_obstruction_set(a1, chi, g, "pi", Convention::paper).empty(), "A_1 obstructions");

  const auto a2 = context("A_2", 1);
  const ParabolicSubset p(a2.base(), {0});
  const auto origin = character(weight({{0, 0}}));
  const auto orbit = strongly_linked_set(a2, origin, Convention::paper).algebraic_set();
  const auto cand = verma_factor_candidates(a2, origin, p, Convention::paper).algebraic_set();
  v.require(orbit.size() == 6, "A_2 orbit size");
  for (const auto& w : orbit) {
    const Rational shifted = a2.global_pairing(w, {0, 0}) + 1;
    const bool passes = is_integer(shifted) && shifted > 0;
    v.require(cand.contains(w) == passes, "A_2 filter at " + format_weight(w));
  }
  return v;
}

Verdict central_grouping() {
  Verdict v;
  const auto ctx = context("A_2", 1);
  const ParabolicSubset p(ctx.base(), {0});
  const auto& alpha1 = ctx.base().root_weight(0);
  const auto& alpha2 = ctx.base().root_weight(1);
  Gen gen(7);
  auto shifted = [](const WeightL& w, const RationalVector& root, long k) {
    WeightL out = w;
    for (std::size_t i = 0; i < root.size(); ++i) out.components[0][i] += k * root[i];
    return out;
  };
  for (int trial = 0; trial < 500; ++trial) {
    const auto base = gen.weight(ctx);
    const long k = gen.integer(-5, 5);
    const long m = gen.integer(1, 5) * (gen.integer(0, 1) ? 1 : -1);
    const auto key = central_class_key(ctx, character(base, "t"), p, "pi");
    v.require(key == central_class_key(ctx, character(shifted(base, alpha1, k), "t"), p, "pi"), "alpha1 multiple");
    v.require(!(key == central_class_key(ctx, character(shifted(base, alpha2, m), "t"), p, "pi")), "alpha2 multiple");

    // triples mixing alpha1 and alpha2 shifts so that both outcomes occur
    std::vector<WeightL> t;
    for (int j = 0; j < 3; ++j)
      t.push_back(shifted(shifted(base, alpha1, gen.integer(-3, 3)), alpha2, gen.integer(0, 1)));
    v.require(equal_on_center(ctx, t[0], t[0], p), "reflexive");
    v.require(equal_on_center(ctx, t[0], t[1], p) == equal_on_center(ctx, t[1], t[0], p), "symmetric");
    if (equal_on_center(ctx, t[0], t[1], p) && equal_on_center(ctx, t[1], t[2], p))
      v.require(equal_on_center(ctx, t[0], t[2], p), "transitive");
  }
  return v;
}

Verdict determinism() {
  Verdict v;
  Gen gen(8);
  for (int trial = 0; trial < 100; ++trial) {
    const cli::JobSpec job = random_job(gen);
    const auto first = cli::run(job);
    const auto second = cli::run(job);
    v.require(first.output == second.output && first.error == second.error && first.exit_code == second.exit_code,
              "byte-identical output for job " + std::to_string(trial));
    cli::JobSpec normalized = job;
    cli::normalize(normalized);
    v.require(cli::parse_job(cli::to_json(normalized)) == normalized, "round trip for job " + std::to_string(trial));
  }
  return v;
}

Verdict performance_guard() {
  Verdict v;
  using clock = std::chrono::steady_clock;
  const auto b2 = context("B_2", 2);
  auto start = clock::now();
  const auto linked = strongly_linked_set(b2, character(b2.zero()), Convention::paper);
  const double b2_seconds = std::chrono::duration<double>(clock::now() - start).count();
  v.require(linked.members.size() == 64, "B_2 |S|=2 linkage set size");
  v.require(b2_seconds < 1.0, "B_2 |S|=2 linkage took " + std::to_string(b2_seconds) + " s");

  const auto a4 = context("A_4", 1);
  start = clock::now();
  const auto orbit = dot_orbit(a4, a4.zero(), kDefaultOrbitGuard);
  const auto a4_linked = strongly_linked_set(a4, character(a4.zero()), Convention::paper);
  const double a4_seconds = std::chrono::duration<double>(clock::now() - start).count();
  v.require(orbit.size() == 120 && a4_linked.members.size() == 120, "A_4 orbit size");
  v.require(a4_seconds < 5.0, "A_4 orbit took " + std::to_string(a4_seconds) + " s");
  return v;
}

struct Criterion {
  const char* id;
  const char* name;
  double budget_seconds;
  Verdict (*check)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "rank-1 closed form", 1.0, rank_one_closed_form},
      {"AC2", "oracle equivalence (A_1, A_2, B_2; |S| = 1, 2; grid [-3,3])", 60.0, oracle_equivalence},
      {"AC3", "product decomposition over embeddings (|S| = 2, 3)", 30.0, product_decomposition},
      {"AC4", "dot-action laws (1000 trials per type)", 10.0, dot_action_laws},
      {"AC5", "Borel degeneration of parabolic candidates", 5.0, borel_degeneration},
      {"AC6", "Lambda_p^+ and obstruction filtering", 1.0, parabolic_filtering},
      {"AC7", "central grouping and equivalence axioms", 5.0, central_grouping},
      {"AC8", "CLI determinism and JSON round trip", 10.0, determinism},
      {"AC9", "performance guard", 10.0, performance_guard},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.ok && seconds >= c.budget_seconds) {
      v.ok = false;
      v.detail = "over time budget";
    }
    std::printf("[%s] %s %s (%.3f s, budget %.0f s)%s%s\n", v.ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.budget_seconds, v.ok ? "" : ": ", v.detail.c_str());
    if (!v.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
