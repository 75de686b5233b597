#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "fastmis/cli.hpp"
#include "fastmis/io.hpp"
#include "support.hpp"

using namespace fastmis;
namespace fs = std::filesystem;

namespace {

Graph metis(const std::string& text) {
  std::istringstream in(text);
  return read_metis(in);
}

std::string parse_error(const std::string& text) {
  try {
    metis(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("fastmis_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
  static std::string read(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

int cli(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "fastmis");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

}  // namespace

TEST_CASE("read_metis") {
  Graph p3 = metis("3 2\n2\n1 3\n2\n");
  CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(metis("% comment\n3 2\n2\n1 3\n2\n").edges() == p3.edges());
  CHECK(metis("3 0 0\n\n\n\n").alive_count() == 3);
  CHECK(parse_error("3 2\n0\n1 3\n2\n").find("line 2") != std::string::npos);
  CHECK(parse_error("3 2\n2\n1 3\n4\n").find("line 4") != std::string::npos);
  CHECK(parse_error("3 2\n2 3\n1 3\n2\n").find("asymmetric") != std::string::npos);
  CHECK(parse_error("3 3\n2\n1 3\n2\n").find("declares 3") != std::string::npos);
  CHECK(parse_error("3 2\n2\nx\n2\n").find("line 3") != std::string::npos);
  CHECK(parse_error("3 2 11\n2\n1 3\n2\n").find("weighted") != std::string::npos);
}

TEST_CASE("metis round trip") {
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    Graph g = gen::gnp(40, 0.1, rng);
    std::stringstream ss;
    write_metis(ss, g);
    CHECK(read_metis(ss).edges() == g.edges());
  }
}

TEST_CASE("read_edge_list") {
  std::istringstream a("0 1\n1 2\n");
  CHECK(read_edge_list(a).edges() == gen::path(3).edges());
  std::istringstream b("# header\n0 1\n0 1\n1 0\n");
  CHECK(read_edge_list(b).edge_count() == 1);
  std::istringstream c("");
  CHECK_THROWS_AS(read_edge_list(c), ParseError);
  std::istringstream d("");
  CHECK(read_edge_list(d, 4).alive_count() == 4);
  std::istringstream e("0 one\n");
  CHECK_THROWS_AS(read_edge_list(e), ParseError);
}

TEST_CASE("verify") {
  Graph p5 = gen::path(5);
  auto ok = verify(p5, {0, 2, 4});
  CHECK(ok.ok());
  CHECK(ok.size == 3);
  CHECK(ok.insertable == 0);
  auto bad = verify(p5, {0, 1});
  CHECK_FALSE(bad.ok());
  CHECK(*bad.conflict == Edge{0, 1});
  auto none = verify(p5, {});
  CHECK(none.ok());
  CHECK(none.size == 0);
  CHECK_FALSE(verify(p5, {7}).ok());
  CHECK_FALSE(verify(p5, {2, 2}).ok());
}

TEST_CASE("solution files") {
  std::stringstream ss;
  write_solution(ss, {4, 0, 2});
  CHECK(ss.str() == "0\n2\n4\n");
  CHECK(read_solution(ss) == std::vector<Vertex>{0, 2, 4});
}

TEST_CASE("cli") {
  Scratch tmp;
  std::string p5 = tmp.write("p5.metis", "5 4\n2\n1 3\n2 4\n3 5\n4\n");

  SUBCASE("solve writes a verified optimal solution") {
    std::string out;
    CHECK(cli({"solve", "--algo", "onlinemis", "--graph", p5, "--seed", "1", "--iterations", "1000",
               "--solution", tmp.path("s.txt"), "--log", tmp.path("l.csv")},
              &out) == 0);
    CHECK(Scratch::read(tmp.path("s.txt")) == "0\n2\n4\n");
    CHECK(out == "size 3\n");
    CHECK(cli({"verify", "--graph", p5, "--solution", tmp.path("s.txt")}) == 0);
  }
  SUBCASE("verify rejects a tampered solution") {
    std::string bad = tmp.write("bad.txt", "0\n1\n");
    CHECK(cli({"verify", "--graph", p5, "--solution", bad}) != 0);
  }
  SUBCASE("speedup prints the ratio") {
    std::string base = tmp.write("base.csv", "# instance=x algorithm=a seed=1\nelapsed_seconds,size\n1,10\n");
    std::string other = tmp.write("other.csv", "# instance=x algorithm=b seed=1\nelapsed_seconds,size\n5,10\n");
    std::string out;
    CHECK(cli({"speedup", base, other}, &out) == 0);
    CHECK(out == "5.00\n");
  }
  SUBCASE("quality-time") {
    std::string a = tmp.write("a.csv", "# instance=x algorithm=a seed=1\nelapsed_seconds,size\n1,100\n2,200\n");
    std::string b = tmp.write("b.csv", "# instance=x algorithm=b seed=1\nelapsed_seconds,size\n3,150\n");
    std::string out;
    CHECK(cli({"quality-time", a, b}, &out) == 0);
    CHECK(out.find("target 199") != std::string::npos);
    CHECK(out.find("average a 2.000000 1/1") != std::string::npos);
    CHECK(out.find("average b - 0/1") != std::string::npos);
  }
  SUBCASE("kernel-stats") {
    std::string out;
    CHECK(cli({"kernel-stats", "--graph", p5}, &out) == 0);
    CHECK(out.find("kernel_n 0") != std::string::npos);
    CHECK(cli({"kernel-stats", "--graph", p5, "--json"}, &out) == 0);
    CHECK(out.find("\"offset\": 3") != std::string::npos);
  }
  SUBCASE("usage errors") {
    CHECK(cli({"solve", "--graph", p5, "--bogus"}) != 0);
    CHECK(cli({"solve", "--graph", tmp.path("missing.metis")}) != 0);
    CHECK(cli({"solve", "--graph", p5, "--time-limit", "1", "--iterations", "5"}) != 0);
    CHECK(cli({"solve", "--graph", p5, "--algo", "redumis"}) != 0);
    CHECK(cli({}) != 0);
    std::string broken = tmp.write("broken.metis", "3 2\n2\n");
    CHECK(cli({"solve", "--graph", broken, "--iterations", "1"}) != 0);
  }
  SUBCASE("edge-list input") {
    std::string el = tmp.write("p5.edges", "0 1\n1 2\n2 3\n3 4\n");
    std::string out;
    CHECK(cli({"solve", "--algo", "kermis", "--format", "edges", "--graph", el, "--iterations", "10"}, &out) == 0);
    CHECK(out == "size 3\n");
  }
}
