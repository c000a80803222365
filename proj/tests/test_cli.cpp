#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the CLI with a shell-quoted argument string; stderr is appended to
// stdout when `merge` is set and discarded otherwise.
Result run(const std::string& args, bool merge = false, const std::string& env = "") {
  const std::string cmd = env + " " + TIEKNOT_CLI + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("validate") {
  auto r = run("validate --tw TWWWTTTUTTU");
  CHECK(r.code == 0);
  CHECK(r.out == "valid\n");
  r = run("validate --tw TWTTUU");
  CHECK(r.code == 0);
  r = run("validate --clr LL");
  CHECK(r.code == 1);
  CHECK(r.out.find("Ƭ1") != std::string::npos);
  r = run("validate --clr LL --format json");
  CHECK(r.code == 1);
  CHECK(r.out.find("\"Ƭ1\"") != std::string::npos);
  r = run("validate --tw TTX", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("position 2") != std::string::npos);
  CHECK(run("validate --tw TWTTUU --max-depth 1").code == 1);
  CHECK(run("validate --tw TTUTU --hidden --max-depth 1").code == 0);
  CHECK(run("validate").code == 2);
}

TEST_CASE("convert") {
  CHECK(run("convert --to-clr --start L TTTWWTTUTTWWU").out == "LCRLRCRLUCRCLU\n");
  CHECK(run("convert --to-tw LCLRCRLCURLU").out == "TWWWTTTUTTU\n");
  CHECK(run("convert LCLRCRLCURLU").out == "TWWWTTTUTTU\n");
  CHECK(run("convert --annotate --spaced RCLCRCLCRCLRUCRCLU").out ==
        "Ri Co Li Co Ri Co Li Co Ri Co Li Ro U Ci Ro Ci Lo U\n");
  CHECK(run("convert --annotate RCLCRCLCRCLRURCLU").code == 0);
  CHECK(run("convert --to-clr --annotate TTU").out == "LoCiRoU\n");
  CHECK(run("convert --to-tw LCCU").code == 1);
  CHECK(run("convert --to-tw LCXU").code == 2);
  // Round trip.
  const auto clr = run("convert --to-clr \"TWTTU'UU\"").out;
  REQUIRE(!clr.empty());
  CHECK(run("convert --to-tw \"" + clr.substr(0, clr.size() - 1) + "\"").out == "TWTTU'UU\n");
}

TEST_CASE("enumerate") {
  CHECK(run("enumerate --class single --max-moves 12 --count").out == "9330\n");
  CHECK(run("enumerate --class single --max-windings 11 --count").out == "9330\n");
  CHECK(run("enumerate --class fm --max-moves 9 --count").out == "85\n");
  const auto four = lines(run("enumerate --class full --windings 4").out);
  CHECK(four.size() == 20);
  CHECK(four.front() == "TTTTU");
  CHECK(run("enumerate --class full --max-windings 4 --count").out == "26\n");

  auto r = run("enumerate --class single --max-windings 3 --both-mirrors");
  CHECK(lines(r.out) == std::vector<std::string>{"L\tTTU", "R\tWWU", "L\tWWU", "R\tTTU",
                                                 "L\tTTTU", "R\tWWWU", "L\tTWWU", "R\tWTTU",
                                                 "L\tWTTU", "R\tTWWU", "L\tWWWU", "R\tTTTU"});
  CHECK(run("enumerate --class single --max-windings 3 --both-mirrors --count").out == "12\n");

  r = run("enumerate --class single --max-windings 2 --format jsonl");
  const auto json = lines(r.out);
  REQUIRE(json.size() == 2);
  CHECK(json[0].find("\"tw\":\"TTU\"") != std::string::npos);

  r = run("enumerate --class single --max-windings 2 --format csv");
  const auto csv = lines(r.out);
  REQUIRE(csv.size() == 3);
  CHECK(csv[0].rfind("tw,clr,", 0) == 0);
  CHECK(csv[1].rfind("TTU,LCRU,L,", 0) == 0);

  CHECK(lines(run("enumerate --class single --max-windings 4 --final L").out) ==
        std::vector<std::string>{"TTTU", "WWWU", "TTWWU", "TTUWWU", "WWTTU", "WWUTTU"});

  r = run("enumerate --class single --max-windings 4 --count --progress", true);
  CHECK(r.out.find("windings 4: 12 knots") != std::string::npos);

  CHECK(run("enumerate --class nope").code == 2);
  CHECK(run("enumerate --max-windings 14").code == 2);
  CHECK(run("enumerate --max-windings 5 --count", false, "TIEKNOT_MAX_WINDINGS=4").code == 2);
  CHECK(run("enumerate --max-windings 4 --count", false, "TIEKNOT_MAX_WINDINGS=4").code == 0);
  CHECK(run("enumerate --max-windings 4 --count", false, "TIEKNOT_MAX_WINDINGS=x").code == 2);
}

TEST_CASE("series") {
  CHECK(run("series full 12").out == "0,0,2,4,20,40,192,384,1896,3792,19320,38640,202392\n");
  CHECK(run("series fm 9").out == "0,0,0,1,1,3,5,11,21,43\n");
  CHECK(run("series single 3").out == "0,0,0,2\n");
  CHECK(run("series r-final 6").out == "0,0,0,1,1,4,8\n");
  CHECK(run("series windings-l 6").out == "0,0,0,0,2,2,6\n");
  CHECK(run("series hidden 5").out == "0,0,0,2,6,18\n");
  CHECK(run("series --expand '2z^3(2z+1)/(1-6z^2)' 5").out == "0,0,0,2,4,12\n");
  auto r = run("series fm 12 --fit");
  CHECK(lines(r.out).back() == "z^3/(1 - z - 2z^2)");
  r = run("series l-final 13 --compare '2z^4(2z^2-2z-1)/(1-6z^2)'");
  CHECK(r.code == 1);
  CHECK(r.out.find("index 4") != std::string::npos);
  CHECK(run("series full 12 --fit --max-order 6").code == 1);
  CHECK(run("series nope 3").code == 2);
  CHECK(run("series --expand '1/(' 3").code == 2);
  CHECK(run("series --list").out.find("windings-r") != std::string::npos);
}

TEST_CASE("name, instructions, aesthetics") {
  auto r = run("name --tw TWWWTTTUTTU");
  CHECK(r.code == 0);
  CHECK(r.out.ends_with(".2\n"));
  CHECK(run("name --tw TTTWWTTUTTWWU").out.ends_with(".4\n"));
  CHECK(run("name --tw TWU").code == 1);
  CHECK(run("name --named trinity").out == run("name --tw TWWWTTTUTTU").out);

  r = run("instructions --name R-1.0");
  CHECK(r.code == 0);
  CHECK(r.out.find("3.") != std::string::npos);
  CHECK(r.out.find("4.") == std::string::npos);

  r = run("aesthetics --tw TTTWWTTUTTWWU");
  CHECK(r.out.find("symmetry 0\n") != std::string::npos);
  CHECK(r.out.find("balance 3\n") != std::string::npos);
  r = run("aesthetics --named Trinity --format jsonl");
  CHECK(r.out.find("\"balance\":2") != std::string::npos);
  CHECK(run("aesthetics --named Nobody").code == 2);
  CHECK(run("aesthetics --tw TTU --clr LCRU").code == 2);
  CHECK(run("name --named four-in-hand --registry " TIEKNOT_REGISTRY).code == 0);
}

TEST_CASE("sample") {
  const auto a = run("sample 3 --seed 7 --max-windings 12");
  CHECK(a.code == 0);
  const auto rows = lines(a.out);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    const auto tab = row.find('\t');
    REQUIRE(tab != std::string::npos);
    CHECK(row.substr(tab + 1).rfind("-") != std::string::npos);
    CHECK(run("validate --tw " + row.substr(0, tab)).code == 0);
  }
  CHECK(run("sample 3 --seed 7 --max-windings 12").out == a.out);
  CHECK(run("sample 3 --seed 8 --max-windings 12").out != a.out);
}

TEST_CASE("census, grammar, check, registry") {
  auto r = run("census --max-windings 4 --format csv");
  CHECK(lines(r.out).size() == 5);
  r = run("census --max-windings 4");
  CHECK(r.out.find("total_knots") != std::string::npos);
  r = run("census --max-windings 4 --format jsonl");
  CHECK(lines(r.out)[2].find("\"total_knots\":20") != std::string::npos);

  CHECK(run("grammar fm").out.find("::=") != std::string::npos);
  CHECK(run("grammar single --generate 3").out == "TTU\nWWU\n");
  CHECK(run("grammar nope").code == 2);
  CHECK(run("grammar --list").out.find("full") != std::string::npos);

  r = run("check --max-windings 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = run("registry");
  CHECK(r.out.find("Eldredge") != std::string::npos);
  CHECK(run("registry --registry " TIEKNOT_REGISTRY).out.find("Four-in-hand") !=
        std::string::npos);
}

TEST_CASE("usage") {
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("--version").out.find('.') != std::string::npos);
}
