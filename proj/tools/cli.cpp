#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "xcover/error.hpp"
#include "xcover/io.hpp"
#include "xcover/latin.hpp"
#include "xcover/pentomino.hpp"
#include "xcover/queens.hpp"
#include "xcover/solve.hpp"
#include "xcover/sudoku.hpp"

namespace xcover::cli {

namespace {

namespace fs = std::filesystem;

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::uint64_t max_updates = 0;  // 0 = unbounded
};

// Input failures that map to exit status 2.
struct InputError {
  std::string message;
};

std::string slurp(Context& ctx, const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(ctx.in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError{path + ": cannot open"};
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

EngineKind engine_from(const std::string& name) {
  auto engine = parse_engine(name);
  if (!engine) throw InputError{"unknown engine '" + name + "' (expected naive or dlx)"};
  return *engine;
}

SearchLimits base_limits(const Context& ctx) {
  SearchLimits limits;
  if (ctx.max_updates > 0) limits.max_updates = ctx.max_updates;
  return limits;
}

Instance load_instance(Context& ctx, const std::string& path) {
  const std::string text = slurp(ctx, path);
  std::vector<Warning> warnings;
  try {
    Instance instance = read_instance(std::string_view(text), &warnings);
    for (const auto& w : warnings) ctx.err << path << ": warning: " << w.describe() << '\n';
    return instance;
  } catch (const Error& e) {
    throw InputError{path + ": " + e.what()};
  }
}

pentomino::Board load_board(Context& ctx, const std::string& name, const std::string& file) {
  if (!file.empty()) {
    try {
      return pentomino::read_board(slurp(ctx, file));
    } catch (const Error& e) {
      throw InputError{file + ": " + e.what()};
    }
  }
  auto which = pentomino::parse_board_name(name);
  if (!which)
    throw InputError{"unknown board '" + name + "' (3x20, 4x15, 5x12, 6x10, chess, cross)"};
  return pentomino::builtin_board(*which);
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string file;
  std::string engine = "dlx";
  bool first = false;
  std::uint64_t max = 0;
  bool stats = false;
  bool quiet = false;
};

int cmd_solve(Context& ctx, const SolveArgs& a) {
  const Instance instance = load_instance(ctx, a.file);
  SearchLimits limits = base_limits(ctx);
  if (a.first) limits.max_solutions = 1;
  if (a.max > 0) limits.max_solutions = a.max;
  std::uint64_t ordinal = 0;
  const auto stats = solve(instance, engine_from(a.engine), limits, [&](std::span<const RowId> rows) {
    ++ordinal;
    if (!a.quiet) ctx.out << write_solution(make_solution(instance, rows), ordinal);
  });
  if (a.stats) ctx.err << write_stats(stats);
  return stats.solutions_found > 0 ? kFound : kNotFound;
}

int cmd_count(Context& ctx, const SolveArgs& a) {
  const Instance instance = load_instance(ctx, a.file);
  const auto stats = solve(instance, engine_from(a.engine), base_limits(ctx), nullptr);
  ctx.out << stats.solutions_found << '\n';
  if (a.stats) ctx.err << write_stats(stats);
  return stats.solutions_found > 0 ? kFound : kNotFound;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string board = "6x10";
  std::string board_file;
  bool one_sided = false;
  bool placements = false;
  int n = 0;
  bool normalized = false;
  int order = 0;
  std::string puzzle;
};

int cmd_gen(Context& ctx, const std::string& kind, const GenArgs& a) {
  try {
    if (kind == "pentomino") {
      const auto board = load_board(ctx, a.board, a.board_file);
      const auto table = pentomino::build_instance(board, a.one_sided);
      ctx.out << (a.placements ? pentomino::format_placements(table)
                               : write_instance(table.instance));
    } else if (kind == "latin") {
      if (a.n < 1) throw InputError{"gen latin: --n must be at least 1"};
      write_instance(ctx.out, latin::build_instance({a.n, a.normalized}));
    } else if (kind == "sudoku") {
      if (a.order < 1) throw InputError{"gen sudoku: --order must be at least 1"};
      const sudoku::Spec spec{a.order};
      if (a.puzzle.empty()) {
        write_instance(ctx.out, sudoku::build_instance(spec));
      } else {
        const auto grid = sudoku::read_puzzle(slurp(ctx, a.puzzle), spec);
        write_instance(ctx.out, sudoku::build_instance(spec, grid));
      }
    } else if (kind == "queens") {
      if (a.n < 1) throw InputError{"gen queens: --n must be at least 1"};
      write_instance(ctx.out, queens::build_instance(a.n));
    } else {
      throw InputError{"gen: unknown kind '" + kind + "'"};
    }
  } catch (const Error& e) {
    throw InputError{std::string("gen ") + kind + ": " + e.what()};
  }
  return kFound;
}

// ---------------------------------------------------------------------------

struct PentominoArgs {
  std::string board = "6x10";
  std::string board_file;
  bool unique = false;
  bool render = false;
  bool one_sided = false;
  bool stats = false;
  std::string engine = "dlx";
};

int cmd_pentomino(Context& ctx, const PentominoArgs& a) {
  const auto board = load_board(ctx, a.board, a.board_file);
  const auto table = pentomino::build_instance(board, a.one_sided);
  std::vector<pentomino::Tiling> tilings;
  const bool keep = a.unique || a.render;
  const auto stats =
      solve(table.instance, engine_from(a.engine), base_limits(ctx), [&](std::span<const RowId> rows) {
        if (keep) tilings.push_back(pentomino::tiling_from_rows(table, rows));
      });

  std::vector<pentomino::Orbit> orbits;
  if (a.unique) orbits = pentomino::dedupe_unique(board, tilings);
  if (a.render) {
    if (a.unique) {
      for (const auto& orbit : orbits) ctx.out << pentomino::render(board, orbit.representative) << '\n';
    } else {
      for (const auto& t : tilings) ctx.out << pentomino::render(board, t) << '\n';
    }
  }
  ctx.out << "solutions " << stats.solutions_found << '\n';
  if (a.unique) ctx.out << "unique " << orbits.size() << '\n';
  if (a.stats) ctx.err << write_stats(stats);
  return stats.solutions_found > 0 ? kFound : kNotFound;
}

// ---------------------------------------------------------------------------

struct SudokuArgs {
  std::string puzzle;
  int order = 3;
  bool check_unique = false;
  bool all = false;
  bool render = false;
  bool stats = false;
  std::string engine = "dlx";
};

int cmd_sudoku(Context& ctx, const SudokuArgs& a) {
  if (a.order < 1) throw InputError{"sudoku: --order must be at least 1"};
  const sudoku::Spec spec{a.order};
  Grid grid;
  try {
    grid = sudoku::read_puzzle(slurp(ctx, a.puzzle), spec);
  } catch (const Error& e) {
    throw InputError{a.puzzle + ": " + e.what()};
  }
  sudoku::Mode mode = sudoku::Mode::First;
  if (a.check_unique) mode = sudoku::Mode::CheckUnique;
  if (a.all) mode = sudoku::Mode::All;

  const Instance instance = sudoku::build_instance(spec, grid);
  SearchLimits limits = base_limits(ctx);
  if (mode == sudoku::Mode::First) limits.max_solutions = 1;
  if (mode == sudoku::Mode::CheckUnique) limits.max_solutions = 2;
  bool first_grid = true;
  const auto stats = solve(instance, engine_from(a.engine), limits, [&](std::span<const RowId> rows) {
    const auto completed = grid_from_labeled_rows(spec.n(), make_solution(instance, rows));
    if (!first_grid) ctx.out << '\n';
    first_grid = false;
    ctx.out << (a.render ? sudoku::format_boxed(spec, completed) : format_grid(completed));
  });
  const auto found = stats.solutions_found;
  if (mode != sudoku::Mode::First) {
    ctx.out << "solutions ";
    if (mode == sudoku::Mode::CheckUnique && found >= 2)
      ctx.out << "2+";
    else
      ctx.out << found;
    ctx.out << '\n';
  }
  if (a.stats) ctx.err << write_stats(stats);
  if (found == 0) return kNotFound;
  if (found >= 2 && mode != sudoku::Mode::First) return kMultiple;
  return kFound;
}

// ---------------------------------------------------------------------------

struct QueensArgs {
  int n = 8;
  bool render = false;
  bool stats = false;
  std::string engine = "dlx";
};

int cmd_queens(Context& ctx, const QueensArgs& a) {
  if (a.n < 1) throw InputError{"queens: --n must be at least 1"};
  const Instance instance = queens::build_instance(a.n);
  const auto stats =
      solve(instance, engine_from(a.engine), base_limits(ctx), [&](std::span<const RowId> rows) {
        if (a.render) ctx.out << queens::render(a.n, make_solution(instance, rows)) << '\n';
      });
  ctx.out << "solutions " << stats.solutions_found << '\n';
  if (a.stats) ctx.err << write_stats(stats);
  return stats.solutions_found > 0 ? kFound : kNotFound;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  std::string corpus;
  std::string engines = "naive,dlx";
  int repeats = 1;
};

int cmd_bench(Context& ctx, const BenchArgs& a) {
  std::vector<EngineKind> engines;
  std::stringstream list(a.engines);
  for (std::string name; std::getline(list, name, ',');)
    if (!name.empty()) engines.push_back(engine_from(name));
  if (engines.empty()) throw InputError{"bench: no engines given"};
  if (a.repeats < 1) throw InputError{"bench: --repeats must be at least 1"};

  std::error_code ec;
  if (!fs::is_directory(a.corpus, ec)) throw InputError{a.corpus + ": not a directory"};
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.corpus, ec))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  ctx.out << "# instance engine repeat solutions total_updates wall_time_s* updates_per_second*\n";
  for (const auto& path : files) {
    std::optional<Instance> instance;
    try {
      instance = load_instance(ctx, path.string());
    } catch (const InputError& e) {
      ctx.err << "bench: skipping " << e.message << '\n';
      continue;
    }
    for (EngineKind engine : engines) {
      std::optional<std::uint64_t> reference;
      for (int r = 1; r <= a.repeats; ++r) {
        const auto stats = solve(*instance, engine, base_limits(ctx), nullptr);
        char timing[96];
        std::snprintf(timing, sizeof timing, "%.6f %.0f",
                      std::chrono::duration<double>(stats.wall_time).count(),
                      stats.updates_per_second());
        ctx.out << path.filename().string() << ' ' << engine_name(engine) << ' ' << r << ' '
                << stats.solutions_found << ' ' << stats.total_updates << ' ' << timing << '\n';
        if (reference && *reference != stats.total_updates)
          ctx.err << "bench: update count changed between repeats for " << path << '\n';
        reference = stats.total_updates;
      }
    }
  }
  ctx.out << "# * wall time and rate are nondeterministic\n";
  return kFound;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Exact cover solver (Algorithm X, naive and dancing-links engines)", "xcover"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--max-updates", ctx.max_updates, "Stop a search after this many updates (0 = unbounded)");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Print every exact cover of an instance file");
  solve_cmd->add_option("file", solve_args.file, "Instance file ('-' for stdin)")->required();
  solve_cmd->add_option("--engine", solve_args.engine, "naive or dlx");
  auto* first_flag = solve_cmd->add_flag("--first", solve_args.first, "Stop after one solution");
  solve_cmd->add_flag("--all", "Print all solutions (default)");
  solve_cmd->add_option("--max", solve_args.max, "Stop after N solutions")->excludes(first_flag);
  solve_cmd->add_flag("--stats", solve_args.stats, "Print search statistics to stderr");
  solve_cmd->add_flag("--quiet", solve_args.quiet, "Do not print solutions");

  SolveArgs count_args;
  auto* count_cmd = app.add_subcommand("count", "Count exact covers of an instance file");
  count_cmd->add_option("file", count_args.file, "Instance file ('-' for stdin)")->required();
  count_cmd->add_option("--engine", count_args.engine, "naive or dlx");
  count_cmd->add_flag("--stats", count_args.stats, "Print search statistics to stderr");

  GenArgs gen_args;
  std::string gen_kind;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated instance to stdout");
  gen_cmd->add_option("kind", gen_kind, "pentomino, latin, sudoku or queens")
      ->required()
      ->check(CLI::IsMember({"pentomino", "latin", "sudoku", "queens"}));
  gen_cmd->add_option("--board", gen_args.board, "Built-in pentomino board");
  gen_cmd->add_option("--board-file", gen_args.board_file, "Pentomino board mask file");
  gen_cmd->add_flag("--one-sided", gen_args.one_sided, "Forbid reflected pentominoes");
  gen_cmd->add_flag("--placements", gen_args.placements, "Write the pentomino placement table");
  gen_cmd->add_option("--n", gen_args.n, "Latin square or queens board size");
  gen_cmd->add_flag("--normalized", gen_args.normalized, "Normalized Latin squares");
  gen_cmd->add_option("--order", gen_args.order, "Sudoku order k (grid is k^2 x k^2)");
  gen_cmd->add_option("--puzzle", gen_args.puzzle, "Sudoku puzzle file with givens");

  PentominoArgs pento_args;
  auto* pento_cmd = app.add_subcommand("pentomino", "Enumerate pentomino tilings of a board");
  pento_cmd->add_option("--board", pento_args.board, "3x20, 4x15, 5x12, 6x10, chess or cross");
  pento_cmd->add_option("--board-file", pento_args.board_file, "Board mask file ('#' cell, '.' hole)");
  pento_cmd->add_flag("--unique", pento_args.unique, "Also count solutions up to board symmetry");
  pento_cmd->add_flag("--render", pento_args.render, "Print tilings as letter grids");
  pento_cmd->add_flag("--one-sided", pento_args.one_sided, "Forbid reflected pentominoes");
  pento_cmd->add_flag("--stats", pento_args.stats, "Print search statistics to stderr");
  pento_cmd->add_option("--engine", pento_args.engine, "naive or dlx");

  SudokuArgs sudoku_args;
  auto* sudoku_cmd = app.add_subcommand("sudoku", "Complete a Sudoku puzzle");
  sudoku_cmd->add_option("puzzle", sudoku_args.puzzle, "Puzzle file ('-' for stdin)")->required();
  sudoku_cmd->add_option("--order", sudoku_args.order, "Order k (default 3)");
  auto* unique_flag =
      sudoku_cmd->add_flag("--check-unique", sudoku_args.check_unique, "Classify 0, 1 or 2+ solutions");
  sudoku_cmd->add_flag("--all", sudoku_args.all, "Print every completion")->excludes(unique_flag);
  sudoku_cmd->add_flag("--render", sudoku_args.render, "Print grids with box rules");
  sudoku_cmd->add_flag("--stats", sudoku_args.stats, "Print search statistics to stderr");
  sudoku_cmd->add_option("--engine", sudoku_args.engine, "naive or dlx");

  QueensArgs queens_args;
  auto* queens_cmd = app.add_subcommand("queens", "Count N-queens placements");
  queens_cmd->add_option("--n", queens_args.n, "Board size (default 8)");
  queens_cmd->add_flag("--render", queens_args.render, "Print each placement");
  queens_cmd->add_flag("--stats", queens_args.stats, "Print search statistics to stderr");
  queens_cmd->add_option("--engine", queens_args.engine, "naive or dlx");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time both engines over a directory of instances");
  bench_cmd->add_option("corpus", bench_args.corpus, "Directory of instance files")->required();
  bench_cmd->add_option("--engines", bench_args.engines, "Comma-separated engines (default naive,dlx)");
  bench_cmd->add_option("--repeats", bench_args.repeats, "Runs per instance and engine");

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "xcover: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(ctx, solve_args);
    if (*count_cmd) return cmd_count(ctx, count_args);
    if (*gen_cmd) return cmd_gen(ctx, gen_kind, gen_args);
    if (*pento_cmd) return cmd_pentomino(ctx, pento_args);
    if (*sudoku_cmd) return cmd_sudoku(ctx, sudoku_args);
    if (*queens_cmd) return cmd_queens(ctx, queens_args);
    if (*bench_cmd) return cmd_bench(ctx, bench_args);
  } catch (const InputError& e) {
    err << "xcover: " << e.message << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "xcover: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace xcover::cli
