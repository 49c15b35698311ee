#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct CmdResult {
  int status = -1;
  std::string out;
};

// Runs a shell command, capturing stdout; stderr passes through to the test
// log. The binary and fixture locations come in from the build system.
CmdResult run(const std::string& cmd) {
  CmdResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

const std::string bin = ESGAME_BIN;
const std::string fix = FIXTURE_DIR;

std::string in(const std::string& name) { return fix + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "esgame-cli-tests";
  std::filesystem::create_directories(dir);
  auto path = (dir / name).string();
  std::ofstream out(path);
  out << text;
  return path;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("validate accepts every filed fixture") {
  for (const auto& entry : std::filesystem::directory_iterator(fix)) {
    CmdResult r = run(bin + " validate " + entry.path().string());
    CHECK(r.status == 0);
  }
}

TEST_CASE("configs lists configurations in canonical order") {
  CmdResult r = run(bin + " configs " + in("nondet-coin.game"));
  CHECK(r.status == 0);
  CHECK(r.out == "{}\n{coin}\n{coffee, coin}\n{coin, tea}\n");
}

TEST_CASE("configs can include the covering relation and dot output") {
  CmdResult r = run(bin + " configs --covers " + in("nondet-coin.game"));
  CHECK(r.status == 0);
  CHECK(count_lines(r.out) > 4);
  std::string dot = temp_file("coin.dot", "");
  CmdResult d =
      run(bin + " configs --dot " + dot + " " + in("nondet-coin.game"));
  CHECK(d.status == 0);
  std::ifstream f(dot);
  std::string text((std::istreambuf_iterator<char>(f)),
                   std::istreambuf_iterator<char>());
  CHECK(text.find("digraph") != std::string::npos);
}

TEST_CASE("the vending strategy checks out courteous") {
  CmdResult r = run(bin + " check " + in("vend.strat") + " --courteous");
  CHECK(r.status == 0);
  CHECK(r.out.find("ok") != std::string::npos);
}

TEST_CASE("negation composed with the boolean strategy is itself") {
  CmdResult r = run(bin + " compose " + in("nondet-bool.strat") + " " +
                    in("neg.strat") + " | " + bin + " iso - " +
                    in("nondet-bool.strat"));
  CHECK(r.status == 0);
}

TEST_CASE("composition through the pipeline is associative") {
  std::string left = temp_file("assoc-left.strat", "");
  std::string right = temp_file("assoc-right.strat", "");
  CmdResult a = run(bin + " compose " + in("nondet-bool.strat") + " " +
                    in("neg.strat") + " | " + bin + " compose - " +
                    in("neg.strat") + " > " + left);
  REQUIRE(a.status == 0);
  CmdResult b = run(bin + " compose " + in("neg.strat") + " " +
                    in("neg.strat") + " | " + bin + " compose " +
                    in("nondet-bool.strat") + " - > " + right);
  REQUIRE(b.status == 0);
  CmdResult iso = run(bin + " iso " + left + " " + right);
  CHECK(iso.status == 0);
}

TEST_CASE("failing properties exit with status one and a counterexample") {
  CmdResult r = run(bin + " check " + in("y-empty.strat") + " 2>/dev/null");
  CHECK(r.status == 1);
  // Same event count, opposite polarities.
  CmdResult iso = run(bin + " iso " + in("bool.game") + " " +
                      in("two-neg.game") + " 2>/dev/null");
  CHECK(iso.status == 1);
  CHECK(iso.out.find("not isomorphic") != std::string::npos);
  CmdResult shape = run(bin + " iso " + in("coffee.game") + " " +
                        in("nondet-coin.game") + " 2>/dev/null");
  CHECK(shape.status == 1);
}

TEST_CASE("isomorphic games print a witness") {
  CmdResult self =
      run(bin + " iso " + in("coffee.game") + " " + in("coffee.game"));
  CHECK(self.status == 0);
  CHECK(self.out.find("coin") != std::string::npos);
  CmdResult strat = run(bin + " iso " + in("vend.strat") + " " +
                        in("vend.strat") + " --over " + in("vend.game"));
  CHECK(strat.status == 0);
  CmdResult differ = run(bin + " iso " + in("vend.strat") + " " +
                         in("vend-dup.strat") + " 2>/dev/null");
  CHECK(differ.status == 1);
}

TEST_CASE("invalid input exits with status two") {
  std::string bad = temp_file("bad.game", "{\"kind\": \"esp\"");
  CmdResult r = run(bin + " validate " + bad + " 2>/dev/null");
  CHECK(r.status == 2);
  std::string wrong = temp_file("wrong.game", R"({"kind": "esp",
    "name": "g", "events": [{"id": "a", "pol": "+"}],
    "prec": [["a", "a"]], "conflicts": []})");
  CmdResult cycle = run(bin + " validate " + wrong + " 2>/dev/null");
  CHECK(cycle.status == 2);
  CmdResult flag = run(bin + " check " + in("vend.strat") +
                       " --fibration sideways 2>/dev/null");
  CHECK(flag.status == 2);
  CmdResult none = run(bin + " nonsense 2>/dev/null");
  CHECK(none.status == 2);
}

TEST_CASE("guard ceilings exit with status three") {
  CmdResult r = run("ESGAME_GUARD=3 " + bin + " configs " + in("vend.game") +
                    " 2>/dev/null");
  CHECK(r.status == 3);
  CmdResult bad = run("ESGAME_GUARD=nope " + bin + " configs " +
                      in("vend.game") + " 2>/dev/null");
  CHECK(bad.status == 2);
  CmdResult fine =
      run("ESGAME_GUARD=24 " + bin + " configs " + in("vend.game"));
  CHECK(fine.status == 0);
}

TEST_CASE("structural subcommands pipe into each other") {
  CmdResult dd = run(bin + " dual " + in("coffee.game") + " | " + bin +
                     " dual -");
  CHECK(dd.status == 0);
  std::ifstream f(in("coffee.game"));
  std::string orig((std::istreambuf_iterator<char>(f)),
                   std::istreambuf_iterator<char>());
  CHECK(dd.out == orig);

  CmdResult par = run(bin + " parallel " + in("coffee.game") + " " +
                      in("tea.game") + " | " + bin + " configs -");
  CHECK(par.status == 0);
  CHECK(count_lines(par.out) == 9);

  CmdResult proj = run(bin + " project --keep coin,selC " + in("vend.game") +
                       " | " + bin + " configs -");
  CHECK(proj.status == 0);
  CHECK(count_lines(proj.out) == 4);
}

TEST_CASE("copycat of a game is a strategy on its hom game") {
  CmdResult r = run(bin + " copycat " + in("w.game") + " | " + bin +
                    " check - --strategy");
  CHECK(r.status == 0);
}

TEST_CASE("interaction output is itself a valid document") {
  CmdResult r = run(bin + " interact " + in("nondet-bool.strat") + " " +
                    in("neg.strat") + " | " + bin + " validate -");
  CHECK(r.status == 0);
}

TEST_CASE("tensor and lift produce checkable strategies") {
  CmdResult t = run(bin + " tensor " + in("nondet-bool.strat") + " " +
                    in("nondet-bool.strat") + " | " + bin +
                    " check - --strategy");
  CHECK(t.status == 0);
  CmdResult l = run(bin + " lift " + in("bool-id.map") + " | " + bin +
                    " check - --strategy");
  CHECK(l.status == 0);
}

TEST_CASE("snake and pentagon close over the fixtures") {
  CmdResult s = run(bin + " snake " + in("y.game"));
  CHECK(s.status == 0);
  CmdResult p = run(bin + " pentagon " + in("nondet-bool.strat") + " " +
                    in("neg.strat") + " " + in("neg.strat") + " " +
                    in("neg.strat"));
  CHECK(p.status == 0);
}

TEST_CASE("generation is deterministic in the seed") {
  CmdResult a = run(bin + " gen --seed 5 --events 4");
  CmdResult b = run(bin + " gen --seed 5 --events 4");
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  CmdResult c = run(bin + " gen --seed 6 --events 4");
  CHECK(a.out != c.out);
  CmdResult empty = run(bin + " gen --seed 1 --events 0");
  CHECK(empty.status == 0);
  CmdResult strat = run(bin + " gen --seed 2 --events 3 --prestrategy " +
                        in("y.game") + " | " + bin + " validate -");
  CHECK(strat.status == 0);
  CmdResult fam = run(bin + " gen --seed 3 --family | " + bin +
                      " check - --strategy");
  CHECK(fam.status == 0);
}

TEST_CASE("the law runner reports a summary table") {
  CmdResult r = run(bin + " laws --seed 3 --trials 2 --max-events 3");
  CHECK(r.status == 0);
  CHECK(r.out.find("law") != std::string::npos);
  CHECK(r.out.find("copycat_clauses") != std::string::npos);
  CHECK(count_lines(r.out) == 12);
}
