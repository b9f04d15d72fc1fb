#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace xcover::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "xcover");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = XCOVER_DATA_DIR;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("xcover_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                         "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
};

void write_file(const fs::path& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

TEST(Cli, SolveLatinListing) {
  const auto r = call({"solve", kData + "/latin4_cyclic.xc"});
  EXPECT_EQ(r.code, kFound);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "SOLUTION 1");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    EXPECT_NE(line.find(" R"), std::string::npos);
    ++rows;
  }
  EXPECT_EQ(rows, 16);
}

TEST(Cli, UncoverableInstance) {
  const auto r = call({"solve", "-", "--stats"}, "%primary z\na\n");
  EXPECT_EQ(r.code, kNotFound);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("solutions 0\n"), std::string::npos);
}

TEST(Cli, EnginesPrintIdenticalStreams) {
  const auto naive = call({"solve", kData + "/queens_secondary.xc", "--engine", "naive"});
  const auto dlx = call({"solve", kData + "/queens_secondary.xc", "--engine", "dlx"});
  EXPECT_EQ(naive.code, kFound);
  EXPECT_EQ(naive.out, dlx.out);
  EXPECT_NE(naive.out.find("SOLUTION 2\n"), std::string::npos);
  EXPECT_EQ(naive.out.find("SOLUTION 3\n"), std::string::npos);
}

TEST(Cli, SolveLimits) {
  const auto first = call({"solve", "-", "--first"}, "a\na\na\n");
  EXPECT_EQ(first.out, "SOLUTION 1\na\n");
  const auto two = call({"solve", "-", "--max", "2", "--quiet", "--stats"}, "a\na\na\n");
  EXPECT_EQ(two.out, "");
  EXPECT_NE(two.err.find("solutions 2\n"), std::string::npos);
  EXPECT_NE(two.err.find("halted_by solution_limit\n"), std::string::npos);
  const auto bounded = call({"--max-updates", "3", "count", "--stats", "-"}, "a b\na b\na b\nb\n");
  EXPECT_NE(bounded.err.find("halted_by update_limit\n"), std::string::npos);
}

TEST(Cli, GeneratorsFeedCount) {
  const struct {
    std::vector<std::string> gen;
    std::string count;
  } cases[] = {
      {{"gen", "latin", "--n", "4", "--normalized"}, "4\n"},
      {{"gen", "latin", "--n", "5", "--normalized"}, "56\n"},
      {{"gen", "latin", "--n", "4"}, "576\n"},
      {{"gen", "sudoku", "--order", "2"}, "288\n"},
      {{"gen", "queens", "--n", "6"}, "4\n"},
      {{"gen", "pentomino", "--board", "3x20"}, "8\n"},
  };
  for (const auto& c : cases) {
    const auto gen = call(c.gen);
    ASSERT_EQ(gen.code, kFound) << gen.err;
    for (const std::string engine : {"naive", "dlx"}) {
      const auto count = call({"count", "-", "--engine", engine}, gen.out);
      EXPECT_EQ(count.out, c.count) << c.gen[1];
    }
  }
}

TEST(Cli, GenSudokuWithPuzzle) {
  const auto gen = call({"gen", "sudoku", "--order", "3", "--puzzle", kData + "/hardest.sudoku"});
  ASSERT_EQ(gen.code, kFound);
  EXPECT_EQ(call({"count", "-"}, gen.out).out, "1\n");
}

TEST(Cli, GenPlacements) {
  const auto r = call({"gen", "pentomino", "--board", "6x10", "--placements"});
  EXPECT_EQ(r.code, kFound);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2056);
}

TEST(Cli, Pentomino) {
  const auto r = call({"pentomino", "--board", "3x20", "--unique"});
  EXPECT_EQ(r.code, kFound);
  EXPECT_EQ(r.out, "solutions 8\nunique 2\n");
  const auto cross = call({"pentomino", "--board-file", kData + "/cross.board", "--unique"});
  EXPECT_EQ(cross.out, "solutions 42\nunique 21\n");
  EXPECT_EQ(call({"pentomino", "--board", "chess", "--unique"}).out, "solutions 520\nunique 65\n");
  const auto rendered = call({"pentomino", "--board", "3x20", "--unique", "--render"});
  EXPECT_EQ(rendered.out.size(), 2u * (3u * 21u + 1u) + r.out.size());
}

TEST(Cli, PentominoBadBoard) {
  EXPECT_EQ(call({"pentomino", "--board", "7x7"}).code, kInputError);
  const auto r = call({"pentomino", "--board-file", "-"}, "##\n#?\n");
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(Cli, SudokuHardest) {
  const auto r = call({"sudoku", kData + "/hardest.sudoku", "--check-unique"});
  EXPECT_EQ(r.code, kFound);
  EXPECT_NE(r.out.find("solutions 1\n"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 10);
}

TEST(Cli, SudokuEmptyIsAmbiguous) {
  const std::string blank = std::string(81, '.');
  const auto r = call({"sudoku", "-", "--check-unique"}, blank);
  EXPECT_EQ(r.code, kMultiple);
  EXPECT_NE(r.out.find("solutions 2+\n"), std::string::npos);
  const auto all = call({"sudoku", "-", "--order", "2", "--all"}, "................");
  EXPECT_EQ(all.code, kMultiple);
  EXPECT_NE(all.out.find("solutions 288\n"), std::string::npos);
}

TEST(Cli, SudokuErrors) {
  const auto bad = call({"sudoku", "-", "--order", "2"}, "11..\n....\n....\n....\n");
  EXPECT_EQ(bad.code, kInputError);
  EXPECT_NE(bad.err.find("InconsistentGivens"), std::string::npos);
  const auto stuck = call({"sudoku", "-", "--order", "2"}, "12..\n..3.\n....\n....\n");
  EXPECT_EQ(stuck.code, kNotFound);
}

TEST(Cli, Queens) {
  EXPECT_EQ(call({"queens", "--n", "8"}).out, "solutions 92\n");
  const auto r = call({"queens", "--n", "4", "--render", "--engine", "naive"});
  EXPECT_EQ(r.out, ".Q..\n...Q\nQ...\n..Q.\n\n..Q.\nQ...\n...Q\n.Q..\n\nsolutions 2\n");
  EXPECT_EQ(call({"queens", "--n", "3"}).code, kNotFound);
}

TEST(Cli, InputErrors) {
  const auto bad = call({"solve", "-"}, "a\n%secondary b\n");
  EXPECT_EQ(bad.code, kInputError);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  EXPECT_NE(bad.err.find("LateDirective"), std::string::npos);
  EXPECT_EQ(call({"solve", "/nonexistent/file.xc"}).code, kInputError);
  EXPECT_EQ(call({"solve", "-", "--engine", "quantum"}, "a\n").code, kInputError);
  EXPECT_EQ(call({"frobnicate"}).code, kInputError);
  EXPECT_EQ(call({}).code, kInputError);
}

TEST(Cli, EmptyInstanceWarns) {
  const auto r = call({"count", "-"}, "# nothing\n");
  EXPECT_EQ(r.code, kFound);
  EXPECT_EQ(r.out, "1\n");
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, Bench) {
  TempDir dir;
  write_file(dir / "latin5.xc", call({"gen", "latin", "--n", "5", "--normalized"}).out);
  write_file(dir / "queens6.xc", call({"gen", "queens", "--n", "6"}).out);
  write_file(dir / "broken.xc", "a\n%bogus\n");
  const auto r = call({"bench", dir.str(), "--repeats", "3"});
  EXPECT_EQ(r.code, kFound);
  EXPECT_NE(r.err.find("skipping"), std::string::npos);
  EXPECT_EQ(r.err.find("changed"), std::string::npos);

  std::map<std::string, std::set<std::string>> updates;
  std::istringstream lines(r.out);
  int data_lines = 0;
  for (std::string line; std::getline(lines, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string name, engine, repeat, solutions, total;
    fields >> name >> engine >> repeat >> solutions >> total;
    if (name == "latin5.xc") EXPECT_EQ(solutions, "56");
    if (name == "queens6.xc") EXPECT_EQ(solutions, "4");
    updates[name + " " + engine].insert(total);
    ++data_lines;
  }
  EXPECT_EQ(data_lines, 2 * 2 * 3);
  for (const auto& [key, values] : updates) EXPECT_EQ(values.size(), 1u) << key;
}

}  // namespace
}  // namespace xcover::cli
