#include "xcover/solve.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <memory>
#include <random>

#include "oracles.hpp"
#include "xcover/dlx.hpp"
#include "xcover/error.hpp"
#include "xcover/io.hpp"
#include "xcover/naive_engine.hpp"

namespace xcover {
namespace {

constexpr EngineKind kEngines[] = {EngineKind::Naive, EngineKind::Dlx};

std::set<std::set<RowId>> as_sets(const std::vector<std::vector<RowId>>& sols) {
  std::set<std::set<RowId>> out;
  for (const auto& s : sols) out.emplace(s.begin(), s.end());
  return out;
}

Instance toy(std::initializer_list<std::initializer_list<std::string>> rows) {
  Instance inst;
  for (auto r : rows) inst.add_row(r);
  return inst;
}

TEST(Solve, EmptyInstanceHasOneEmptySolution) {
  Instance inst;
  for (auto e : kEngines) {
    auto sols = all_solutions(inst, e);
    ASSERT_EQ(sols.size(), 1u);
    EXPECT_TRUE(sols[0].empty());
  }
}

TEST(Solve, UncoverableColumnHasNoSolutions) {
  Instance inst;
  inst.declare_primary({"a"});
  for (auto e : kEngines) EXPECT_EQ(count_solutions(inst, e), 0u);
}

TEST(Solve, OnlySecondaryColumnsYieldEmptyCover) {
  Instance inst;
  inst.declare_secondary({"s"});
  inst.add_row({"s"});
  for (auto e : kEngines) {
    auto sols = all_solutions(inst, e);
    ASSERT_EQ(sols.size(), 1u);
    EXPECT_TRUE(sols[0].empty());
  }
}

TEST(ChooseColumn, MinimumRowsWithOrdinalTieBreak) {
  // a: 2 rows, b: 1 row, c: 1 row.
  Instance inst = toy({{"a", "b"}, {"a", "c"}});
  NaiveEngine naive(inst);
  DlxArena arena(inst);
  EXPECT_EQ(naive.choose_column(ColumnPolicy::MinRemaining), 1u);
  EXPECT_EQ(arena.choose_column(ColumnPolicy::MinRemaining), 1u);
  EXPECT_EQ(naive.choose_column(ColumnPolicy::FirstUncovered), 0u);
  EXPECT_EQ(arena.choose_column(ColumnPolicy::FirstUncovered), 0u);
}

TEST(ChooseColumn, EmptyColumnIsChosenAndFailsImmediately) {
  Instance inst;
  inst.declare_primary({"b", "a"});
  inst.add_row({"b"});
  NaiveEngine naive(inst);
  EXPECT_EQ(naive.choose_column(ColumnPolicy::MinRemaining), 1u);
  for (auto e : kEngines) {
    auto stats = solve(inst, e, {}, nullptr);
    EXPECT_EQ(stats.solutions_found, 0u);
    EXPECT_EQ(stats.nodes, 1u);
    EXPECT_EQ(stats.total_updates, 0u);
  }
}

TEST(ChooseColumn, NeverPicksSecondary) {
  Instance inst;
  inst.declare_secondary({"s"});
  inst.add_row({"a"});
  inst.add_row({"s"});
  NaiveEngine naive(inst);
  DlxArena arena(inst);
  EXPECT_EQ(naive.choose_column(ColumnPolicy::MinRemaining), 1u);
  EXPECT_EQ(arena.choose_column(ColumnPolicy::MinRemaining), 1u);
  EXPECT_EQ(arena.ring(), std::vector<std::uint32_t>{1});
  Instance only_secondary;
  only_secondary.declare_secondary({"s"});
  EXPECT_FALSE(NaiveEngine(only_secondary).choose_column(ColumnPolicy::MinRemaining));
  EXPECT_FALSE(DlxArena(only_secondary).choose_column(ColumnPolicy::MinRemaining));
}

TEST(CheckSolution, Basics) {
  Instance inst = toy({{"a"}, {"b"}, {"a", "b"}});
  EXPECT_TRUE(check_solution(inst, std::vector<RowId>{RowId{1}, RowId{2}}));
  EXPECT_TRUE(check_solution(inst, std::vector<RowId>{RowId{3}}));
  EXPECT_FALSE(check_solution(inst, std::vector<RowId>{}));
  EXPECT_FALSE(check_solution(inst, std::vector<RowId>{RowId{1}, RowId{3}}));
  EXPECT_THROW(check_solution(inst, std::vector<RowId>{RowId{4}}), Error);
  EXPECT_THROW(check_solution(inst, std::vector<RowId>{RowId{0}}), Error);
}

TEST(CheckSolution, SharedSecondaryIsRejected) {
  Instance inst;
  inst.declare_secondary({"s"});
  inst.add_row({"a", "s"});
  inst.add_row({"b", "s"});
  inst.add_row({"b"});
  EXPECT_FALSE(check_solution(inst, std::vector<RowId>{RowId{1}, RowId{2}}));
  EXPECT_TRUE(check_solution(inst, std::vector<RowId>{RowId{1}, RowId{3}}));
}

TEST(CheckSolution, LatinListing) {
  std::ifstream file(XCOVER_DATA_DIR "/latin4_cyclic.xc");
  Instance inst = read_instance(file);
  std::vector<RowId> all;
  for (std::uint32_t r = 1; r <= 16; ++r) all.push_back(RowId{r});
  EXPECT_TRUE(check_solution(inst, all));
}

TEST(BruteForce, Examples) {
  using S = std::set<std::set<RowId>>;
  EXPECT_EQ(brute_force_solutions(toy({{"a"}, {"b"}, {"a", "b"}})),
            (S{{RowId{1}, RowId{2}}, {RowId{3}}}));
  EXPECT_EQ(brute_force_solutions(toy({{"a", "b"}, {"b", "c"}})), S{});
  EXPECT_EQ(brute_force_solutions(Instance{}), S{{}});
}

TEST(BruteForce, TooLarge) {
  Instance inst;
  for (int r = 0; r < 25; ++r) inst.add_row({"c" + std::to_string(r)});
  try {
    brute_force_solutions(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}

// Rows {a,b}, {a}, {b}. Hand trace of both engines:
//  naive: level 0 picks a (tie with b, smaller ordinal). Row 1 removes its 2
//  nodes plus rows 2 and 3 (1 node each) = 4. Row 2 removes itself (1) and
//  row 1 (2) = 3; level 1 then picks b and row 3 removes 1 node.
//  dlx: cover(a) unlinks row 1's b node = 1; row 1 covers b whose list is
//  now just row 3 (no siblings) = 0; row 2 has no siblings; level 1 covers
//  b = 0.
TEST(Solve, HandTracedUpdateCounts) {
  Instance inst = toy({{"a", "b"}, {"a"}, {"b"}});
  std::vector<std::vector<RowId>> expected{{RowId{1}}, {RowId{2}, RowId{3}}};

  std::vector<std::vector<RowId>> got;
  auto naive = solve(inst, EngineKind::Naive, {}, [&](auto rows) { got.emplace_back(rows.begin(), rows.end()); });
  EXPECT_EQ(got, expected);
  EXPECT_EQ(naive.updates_per_level, (std::vector<std::uint64_t>{7, 1}));
  EXPECT_EQ(naive.total_updates, 8u);
  EXPECT_EQ(naive.max_depth, 2u);

  got.clear();
  auto dlx = solve(inst, EngineKind::Dlx, {}, [&](auto rows) { got.emplace_back(rows.begin(), rows.end()); });
  EXPECT_EQ(got, expected);
  EXPECT_EQ(dlx.updates_per_level, (std::vector<std::uint64_t>{1, 0}));
  EXPECT_EQ(dlx.total_updates, 1u);
}

TEST(Solve, SolutionLimitHaltsAndRestores) {
  // A grid of independent choices: 2^4 solutions.
  Instance grid;
  for (int c = 0; c < 4; ++c) {
    grid.add_row({"p" + std::to_string(c)});
    grid.add_row({"p" + std::to_string(c)});
  }
  {
    NaiveEngine e(grid);
    const auto before = e.serialize_state();
    SearchLimits limits;
    limits.max_solutions = 3;
    auto stats = e.run(limits, ColumnPolicy::MinRemaining, nullptr);
    EXPECT_EQ(stats.solutions_found, 3u);
    EXPECT_EQ(stats.halted_by, HaltReason::SolutionLimit);
    EXPECT_EQ(e.serialize_state(), before);
  }
  {
    DlxEngine e(grid);
    const auto before = e.arena().serialize();
    SearchLimits limits;
    limits.max_solutions = 3;
    auto stats = e.run(limits, ColumnPolicy::MinRemaining, nullptr);
    EXPECT_EQ(stats.solutions_found, 3u);
    EXPECT_EQ(stats.halted_by, HaltReason::SolutionLimit);
    EXPECT_EQ(e.arena().serialize(), before);
    EXPECT_EQ(e.arena().check_links(), "");
  }
  EXPECT_EQ(count_solutions(grid), 16u);
}

TEST(Solve, UpdateLimitHaltsAndRestores) {
  Instance grid;
  for (int c = 0; c < 6; ++c)
    for (int k = 0; k < 3; ++k) grid.add_row({"p" + std::to_string(c), "q" + std::to_string(k)});
  for (auto engine : kEngines) {
    SearchLimits limits;
    limits.max_updates = 5;
    auto stats = solve(grid, engine, limits, nullptr);
    EXPECT_EQ(stats.halted_by, HaltReason::UpdateLimit) << engine_name(engine);
    EXPECT_GE(stats.total_updates, 5u);
  }
  NaiveEngine e(grid);
  const auto before = e.serialize_state();
  SearchLimits limits;
  limits.max_updates = 5;
  e.run(limits, ColumnPolicy::MinRemaining, nullptr);
  EXPECT_EQ(e.serialize_state(), before);
}

TEST(Solve, TimeLimitHalts) {
  // 8-queens without diagonals has 8! covers, enough nodes to reach the
  // periodic clock check.
  Instance inst;
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) inst.add_row({"R" + std::to_string(i), "F" + std::to_string(j)});
  for (auto engine : kEngines) {
    SearchLimits limits;
    limits.time_budget = std::chrono::nanoseconds(0);
    auto stats = solve(inst, engine, limits, nullptr);
    EXPECT_EQ(stats.halted_by, HaltReason::TimeLimit);
    EXPECT_LT(stats.solutions_found, 40320u);
  }
}

TEST(Solve, StatsTotalsAgree) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = oracle::random_instance(rng);
    for (auto e : kEngines) {
      auto stats = solve(inst, e, {}, nullptr);
      std::uint64_t sum = 0;
      for (auto u : stats.updates_per_level) sum += u;
      EXPECT_EQ(sum, stats.total_updates);
      EXPECT_LE(stats.max_depth, inst.primary_count());
      EXPECT_EQ(stats.halted_by, HaltReason::Exhausted);
    }
  }
}

// The four engine properties over one shared random corpus.
class RandomCorpus : public ::testing::Test {
 protected:
  static std::vector<Instance> corpus() {
    std::mt19937_64 rng(20240601);
    std::vector<Instance> out;
    for (int i = 0; i < 1000; ++i) out.push_back(oracle::random_instance(rng));
    return out;
  }
};

TEST_F(RandomCorpus, EnginesMatchBruteForce) {
  for (const auto& inst : corpus()) {
    const auto expected = brute_force_solutions(inst);
    for (auto e : kEngines) ASSERT_EQ(as_sets(all_solutions(inst, e)), expected) << write_instance(inst);
  }
}

TEST_F(RandomCorpus, EnginesEmitIdenticalStreams) {
  for (const auto& inst : corpus())
    ASSERT_EQ(all_solutions(inst, EngineKind::Naive), all_solutions(inst, EngineKind::Dlx))
        << write_instance(inst);
}

TEST_F(RandomCorpus, RestoreInvariant) {
  for (const auto& inst : corpus()) {
    const auto text = write_instance(inst);
    NaiveEngine naive(inst);
    const auto naive_before = naive.serialize_state();
    naive.run({}, ColumnPolicy::MinRemaining, nullptr);
    ASSERT_EQ(naive.serialize_state(), naive_before);

    DlxEngine dlx(inst);
    const auto dlx_before = dlx.arena().serialize();
    dlx.run({}, ColumnPolicy::MinRemaining, nullptr);
    ASSERT_EQ(dlx.arena().serialize(), dlx_before);
    ASSERT_EQ(dlx.arena().check_links(), "");
    ASSERT_EQ(write_instance(inst), text);
  }
}

TEST_F(RandomCorpus, ColumnPolicyDoesNotChangeSolutions) {
  for (const auto& inst : corpus()) {
    for (auto e : kEngines) {
      auto mrv = all_solutions(inst, e, ColumnPolicy::MinRemaining);
      auto first = all_solutions(inst, e, ColumnPolicy::FirstUncovered);
      ASSERT_EQ(mrv.size(), first.size());
      ASSERT_EQ(as_sets(mrv), as_sets(first));
    }
  }
}

TEST_F(RandomCorpus, RunsAreDeterministic) {
  for (const auto& inst : corpus()) {
    for (auto e : kEngines) {
      std::string a, b;
      auto sa = solve(inst, e, {}, [&](auto rows) { for (auto r : rows) a += std::to_string(r.value) + ","; a += ";"; });
      auto sb = solve(inst, e, {}, [&](auto rows) { for (auto r : rows) b += std::to_string(r.value) + ","; b += ";"; });
      ASSERT_EQ(a, b);
      ASSERT_EQ(sa.updates_per_level, sb.updates_per_level);
      ASSERT_EQ(sa.nodes, sb.nodes);
      ASSERT_EQ(sa.max_depth, sb.max_depth);
    }
  }
}

TEST(Solve, EngineNames) {
  EXPECT_EQ(parse_engine("naive"), EngineKind::Naive);
  EXPECT_EQ(parse_engine("dlx"), EngineKind::Dlx);
  EXPECT_FALSE(parse_engine("fast"));
  EXPECT_EQ(engine_name(EngineKind::Dlx), "dlx");
}

}  // namespace
}  // namespace xcover
