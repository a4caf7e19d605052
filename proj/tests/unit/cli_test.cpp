#include "kcontact/cli/commands.hpp"
#include "kcontact/cli/dsl.hpp"
#include "support.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace kc;
using nlohmann::json;

namespace {

std::string parse_error_kind(const std::string& text) {
  try {
    dsl::parse(text);
  } catch (const dsl::ParseError& e) {
    return e.kind();
  }
  return "none";
}

dsl::Expr leaf(std::mt19937& rng) {
  static const std::vector<std::string> names{"A", "B", "Xi", "p"};
  dsl::Expr e;
  switch (rng() % 3) {
    case 0:
      e.kind = dsl::Expr::Kind::number;
      e.value = static_cast<int>(rng() % 5);
      break;
    case 1:
      e.kind = dsl::Expr::Kind::ident;
      e.name = names[rng() % names.size()];
      break;
    default:
      e.kind = dsl::Expr::Kind::dual;
      e.name = names[rng() % 3];
  }
  return e;
}

dsl::Expr random_expr(std::mt19937& rng, int depth) {
  if (depth == 0 || rng() % 4 == 0) return leaf(rng);
  using K = dsl::Expr::Kind;
  static const K binary[] = {K::add, K::sub, K::mul, K::wedge, K::div};
  dsl::Expr e;
  const unsigned pick = rng() % 7;
  if (pick < 5) {
    e.kind = binary[pick];
    e.args = {random_expr(rng, depth - 1), random_expr(rng, depth - 1)};
  } else if (pick == 5) {
    e.kind = K::neg;
    e.args = {random_expr(rng, depth - 1)};
  } else {
    e.kind = K::pow;
    e.exponent = 2 + static_cast<int>(rng() % 2);
    e.args = {random_expr(rng, depth - 1)};
  }
  return e;
}

kc::cli::Report run(std::string command, std::string file, std::vector<std::string> extra = {}) {
  kc::cli::Options o;
  o.command = std::move(command);
  o.file = std::move(file);
  for (std::size_t i = 0; i + 1 < extra.size(); i += 2) {
    if (extra[i] == "--specialize") o.specialize = extra[i + 1];
    if (extra[i] == "--matrix") o.matrix = extra[i + 1];
    if (extra[i] == "--quotient") o.quotient = extra[i + 1];
    if (extra[i] == "--degree") {
      std::stringstream ss(extra[i + 1]);
      std::string d;
      while (std::getline(ss, d, ',')) o.degrees.push_back(std::stoi(d));
    }
  }
  return kc::cli::run(o);
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("the shipped fixtures parse and build") {
  for (const auto& f : support::corpus()) {
    CAPTURE(f);
    CHECK_NOTHROW(support::algebra(f));
  }
  const dsl::AlgebraDecl g = support::decl("gp.lie");
  CHECK(g.parameter == std::optional<std::string>("p"));
  CHECK(g.basis == std::vector<std::string>{"A", "B", "U", "R", "Xi"});
  CHECK(g.brackets.size() == 4);
  CHECK(g.phi.size() == 5);
}

TEST_CASE("parse errors carry a kind and a position") {
  CHECK(parse_error_kind("algebra x {\n basis: A B\n [A,A] = B\n}\n") == "illegal-bracket");
  CHECK(parse_error_kind("algebra x {\n basis: A B\n [A,B] = q A\n}\n") == "parameter-used-but-not-declared");
  CHECK(parse_error_kind("algebra x {\n basis: A B\n [A,B] = A\n [B,A] = B\n}\n") == "duplicate-bracket");
  CHECK(parse_error_kind("algebra x {\n basis: A B\n [A,C] = A\n}\n") == "unknown-identifier");
  CHECK(parse_error_kind("algebra x {\n basis: A B\n [A,B] = (A\n}\n") == "syntax-error");
  CHECK(parse_error_kind("algebra x {\n params: p, q\n basis: A B\n}\n") == "multi-parameter");
  CHECK(parse_error_kind("algebra x {\n basis: A A\n}\n") == "duplicate-name");
  try {
    dsl::parse("algebra x {\n basis: A B\n [A,B] = q A\n}\n");
  } catch (const dsl::ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 1);
  }
}

TEST_CASE("pretty printing round-trips the fixtures") {
  for (const auto& f : std::filesystem::directory_iterator(KCONTACT_FIXTURES)) {
    CAPTURE(f.path().string());
    const dsl::Document doc = dsl::load(f.path());
    const std::string printed = dsl::print(doc);
    CHECK(dsl::parse(printed) == doc);
    CHECK(dsl::print(dsl::parse(printed)) == printed);
  }
}

TEST_CASE("pretty printing round-trips random expressions") {
  std::mt19937 rng(59);
  for (int t = 0; t < 500; ++t) {
    const dsl::Expr e = random_expr(rng, 4);
    const std::string s = dsl::print(e);
    CAPTURE(s);
    CHECK(dsl::parse_expression(s) == e);
  }
}

TEST_CASE("cohomology command") {
  const auto rep = run("cohomology", support::fixture("gp.lie"));
  CHECK(rep.exit_code == 0);
  CHECK(rep.lines.front() == "betti: 1 2 1 1 2 1");
  CHECK(rep.results["betti"] == json({1, 2, 1, 1, 2, 1}));
  for (const char* r : {"p=1", "p=2", "p=1/3"}) {
    const auto s = run("cohomology", support::fixture("gp.lie"), {"--specialize", r});
    CHECK(s.results["betti"] == json({1, 2, 1, 1, 2, 1}));
    CHECK(s.warnings.empty());
  }
  // p = 0 collapses the algebra; ranks change and the report says so
  const auto z = run("cohomology", support::fixture("gp.lie"), {"--specialize", "p=0"});
  CHECK_FALSE(z.warnings.empty());
  CHECK(run("cohomology", support::fixture("gp.lie"), {"--specialize", "q=1"}).exit_code == 2);
}

TEST_CASE("lefschetz command") {
  const auto rep = run("lefschetz", support::fixture("gp.lie"), {"--degree", "1,2"});
  CHECK(rep.exit_code == 0);
  REQUIRE(rep.lines.size() >= 2);
  CHECK(rep.lines[0].rfind("degree 1: graph of isomorphism: yes", 0) == 0);
  CHECK(rep.lines[2].rfind("degree 2: graph of isomorphism: yes", 0) == 0);
  const auto bad = run("lefschetz", support::fixture("hl-fail.lie"), {"--degree", "1"});
  CHECK(bad.exit_code == 1);
}

TEST_CASE("lattice command") {
  const auto rep = run("lattice", "", {"--matrix", "2,1,1,1"});
  CHECK(rep.exit_code == 0);
  CHECK(rep.field == "Q(sqrt5)");
  CHECK(rep.results["lambda"] == "(3+sqrt5)/2");
  CHECK(rep.results["z2"] == "sqrt5");
  CHECK(run("lattice", "", {"--matrix", "1,1,0,1"}).exit_code == 2);
  CHECK(run("lattice", "", {"--matrix", "1,x,0,1"}).exit_code == 2);
}

TEST_CASE("every command succeeds on gp") {
  for (const char* c : {"check", "classify", "cohomology", "contact", "lefschetz", "basic", "tievsky"}) {
    CAPTURE(c);
    const auto rep = run(c, support::fixture("gp.lie"));
    CHECK(rep.exit_code == 0);
    CHECK(rep.status() == "pass");
  }
  for (const char* m : {"tau.mor", "rho.mor"}) CHECK(run("verify-morphism", support::fixture(m)).exit_code == 0);
  CHECK(run("contact", support::fixture("gp.lie"), {"--quotient", support::fixture("k-times-r.lie")}).exit_code == 0);
}

TEST_CASE("JSON reports are byte-stable and sorted") {
  for (const char* c : {"check", "cohomology", "contact", "basic", "tievsky"}) {
    const std::string a = run(c, support::fixture("gp.lie")).to_json();
    const std::string b = run(c, support::fixture("gp.lie")).to_json();
    CHECK(a == b);
    const json j = json::parse(a);
    CHECK(j.dump(2) + "\n" == a);  // nlohmann objects are key-sorted
    CHECK(j["input"]["sha256"].get<std::string>().size() == 64);
  }
  const std::string l1 = run("lattice", "", {"--matrix", "3,1,2,1"}).to_json();
  CHECK(l1 == run("lattice", "", {"--matrix", "3,1,2,1"}).to_json());
}

TEST_CASE("every mathematical failure exits 1 with a witness") {
  const std::string dir = std::filesystem::temp_directory_path() / "kcontact-cli-test";
  std::filesystem::create_directories(dir);
  write(dir + "/jacobi.lie", "algebra bad {\n basis: X Y Z\n [X,Y] = Z\n [X,Z] = X\n}\n");
  write(dir + "/flat.lie", "algebra flat {\n basis: A B C\n contact: C*\n}\n");
  write(dir + "/flip.lie",
        "algebra gp_flip {\n params: p\n basis: A B U R Xi\n [A,U] = -p A\n [B,U] = p B\n [A,B] = Xi\n [R,U] = Xi\n"
        " contact: Xi*\n phi: A -> B, B -> A, U -> R, R -> -U, Xi -> 0\n metric: identity\n}\n");
  write(dir + "/omega.lie", "algebra k_times_r {\n params: p\n basis: A B U R\n [A,U] = -p A\n [B,U] = p B\n"
                            " symplectic: A*^B* + R*^U*\n}\n");

  struct Case {
    std::string command, file;
    std::vector<std::string> extra;
  };
  const std::vector<Case> cases{
      {"check", dir + "/jacobi.lie", {}},
      {"contact", dir + "/flat.lie", {}},
      {"contact", dir + "/flip.lie", {}},
      {"contact", support::fixture("gp.lie"), {"--quotient", dir + "/omega.lie"}},
      {"lefschetz", support::fixture("hl-fail.lie"), {}},
      {"verify-morphism", support::data("rho-zero.mor"), {}},
      {"lefschetz", dir + "/flat.lie", {}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.command);
    CAPTURE(c.file);
    const auto rep = run(c.command, c.file, c.extra);
    CHECK(rep.exit_code == 1);
    bool witnessed = false;
    for (const auto& chk : rep.checks)
      if (!chk["pass"].get<bool>()) witnessed = witnessed || (chk.contains("witness") && !chk["witness"].empty());
    CHECK(witnessed);
  }
}

TEST_CASE("input errors exit 2") {
  CHECK(run("cohomology", "/nonexistent/file.lie").exit_code == 2);
  CHECK(run("cohomology", support::fixture("tau.mor")).exit_code == 2);
  CHECK(run("lefschetz", support::fixture("k-times-r.lie")).exit_code == 2);
  CHECK(run("nonsense", support::fixture("gp.lie")).exit_code == 2);
  CHECK(run("lefschetz", support::fixture("gp.lie"), {"--degree", "7"}).exit_code == 2);
}
