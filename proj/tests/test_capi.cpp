#include <algorithm>
#include <cstring>
#include <string>

#include "doctest.h"
#include "lambdascale.h"

namespace {

// RAII wrappers keep the tests leak-free under sanitizers.
struct Str {
  char* p = nullptr;
  ~Str() { lsc_string_free(p); }
  std::string get() const { return p == nullptr ? "" : p; }
};

struct Trm {
  lsc_term* t = nullptr;
  ~Trm() { lsc_term_free(t); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(lsc_version()) == "1.0.0");
  CHECK(std::string(lsc_status_name(LSC_OK)) == "ok");
  CHECK(std::string(lsc_status_name(LSC_ERR_SYNTAX)) == "syntax_error");
  CHECK(std::string(lsc_status_name(LSC_ERR_UNBALANCED)) ==
        "unbalanced_parens");
  CHECK(std::string(lsc_status_name(LSC_ERR_VARIABLE_CLASH)) ==
        "variable_clash");
}

TEST_CASE("parse/print round trip") {
  Trm t;
  REQUIRE(lsc_term_parse("((x \\ (b {m} x)) {e} a)", &t.t) == LSC_OK);
  Str s;
  REQUIRE(lsc_term_print(t.t, &s.p) == LSC_OK);
  CHECK(s.get() == "((x \\ (b {m} x)) {e} a)");

  Trm sugar;
  REQUIRE(lsc_term_parse("(K a)", &sugar.t) == LSC_OK);
  Str s2;
  REQUIRE(lsc_term_print(sugar.t, &s2.p) == LSC_OK);
  CHECK(s2.get() == "(K {1} a)");
}

TEST_CASE("parse failures map to status codes and lsc_last_error") {
  lsc_term* t = nullptr;
  CHECK(lsc_term_parse("(x \\ x", &t) == LSC_ERR_UNBALANCED);
  CHECK(t == nullptr);
  CHECK(std::strlen(lsc_last_error()) > 0);
  CHECK(lsc_term_parse("(a {2e} b)", &t) == LSC_ERR_BAD_SCALE);
  CHECK(lsc_term_parse("(a)", &t) == LSC_ERR_SYNTAX);
  CHECK(lsc_term_parse(nullptr, &t) == LSC_ERR_BAD_ARGUMENT);
  CHECK(lsc_term_parse("x", nullptr) == LSC_ERR_BAD_ARGUMENT);
}

TEST_CASE("alpha equivalence and dot export") {
  Trm a, b;
  REQUIRE(lsc_term_parse("(x \\ x)", &a.t) == LSC_OK);
  REQUIRE(lsc_term_parse("(y \\ y)", &b.t) == LSC_OK);
  int eq = 0;
  REQUIRE(lsc_term_alpha_eq(a.t, b.t, &eq) == LSC_OK);
  CHECK(eq == 1);

  Str dot;
  REQUIRE(lsc_term_to_dot(a.t, &dot.p) == LSC_OK);
  CHECK(dot.get().rfind("digraph term {", 0) == 0);
}

TEST_CASE("scale canonicalization") {
  Str s;
  REQUIRE(lsc_scale_canonical("m^0*e*e", &s.p) == LSC_OK);
  CHECK(s.get() == "e^2");
  char* bad = nullptr;
  CHECK(lsc_scale_canonical("e^", &bad) == LSC_ERR_BAD_SCALE);
}

TEST_CASE("normalize through the C interface") {
  Trm t;
  REQUIRE(lsc_term_parse("(((x \\ (y \\ x)) {1} a) {1} b)", &t.t) == LSC_OK);
  Trm result;
  Str trace;
  int normal = 0;
  REQUIRE(lsc_normalize(t.t, -1, &result.t, &trace.p, &normal) == LSC_OK);
  CHECK(normal == 1);
  Str rs;
  REQUIRE(lsc_term_print(result.t, &rs.p) == LSC_OK);
  CHECK(rs.get() == "a");
  CHECK(trace.get().find("beta* forward @") != std::string::npos);

  // budget exhaustion is not an error
  Trm omega;
  REQUIRE(lsc_term_parse("((x \\ (x {1} x)) (x \\ (x {1} x)))", &omega.t) ==
          LSC_OK);
  Trm r2;
  int n2 = 1;
  REQUIRE(lsc_normalize(omega.t, 20, &r2.t, nullptr, &n2) == LSC_OK);
  CHECK(n2 == 0);
}

TEST_CASE("equiv through the C interface") {
  Trm a, b;
  REQUIRE(lsc_term_parse("((x \\ (b {m} x)) {e} a)", &a.t) == LSC_OK);
  REQUIRE(lsc_term_parse("(b {e*m} a)", &b.t) == LSC_OK);
  int verdict = 1;
  Str trace;
  REQUIRE(lsc_equiv(a.t, b.t, -1, &verdict, &trace.p) == LSC_OK);
  CHECK(verdict == 0);
  CHECK(trace.get().find("R2") != std::string::npos);

  Trm z;
  REQUIRE(lsc_term_parse("z", &z.t) == LSC_OK);
  Trm omega;
  REQUIRE(lsc_term_parse("((x \\ (x {1} x)) (x \\ (x {1} x)))", &omega.t) ==
          LSC_OK);
  int v2 = 0;
  REQUIRE(lsc_equiv(omega.t, z.t, 200, &v2, nullptr) == LSC_OK);
  CHECK(v2 == 1);
}

TEST_CASE("translate through the C interface") {
  Str out;
  REQUIRE(lsc_translate("a", "e", "(x {m} y)", 0, &out.p) == LSC_OK);
  CHECK(out.get() ==
        "((y_1 \\ (((y \\ x) {e} a) {m} ((y_1 \\ y) {e} a))) {e^-1} a)");

  Str simp;
  REQUIRE(lsc_translate("a", "e", "(u \\ u)", 1, &simp.p) == LSC_OK);
  CHECK(simp.get().find("{e^-1} a)") != std::string::npos);

  char* bad = nullptr;
  CHECK(lsc_translate("a", "e", "u", 1, &bad) == LSC_ERR_BAD_ARGUMENT);
  CHECK(lsc_translate("(u {m} b)", "e", "u", 0, &bad) ==
        LSC_ERR_VARIABLE_CLASH);
}

TEST_CASE("check batches through the C interface") {
  Str report;
  int ok = 0;
  REQUIRE(lsc_check("irq", nullptr, nullptr, 0, 5, 3, -1, &report.p, &ok) ==
          LSC_OK);
  CHECK(ok == 1);
  // 5 instances x 4 laws + 5 x 2 bridge properties
  std::string lines = report.get();
  CHECK(std::count(lines.begin(), lines.end(), '\n') == 30);
  CHECK(lines.find("idem proved budget=") != std::string::npos);
  CHECK(lines.find("unknown") == std::string::npos);

  Str lam;
  int lok = 0;
  REQUIRE(lsc_check("lambda", nullptr, nullptr, 0, 0, 0, -1, &lam.p, &lok) ==
          LSC_OK);
  CHECK(lok == 1);
  CHECK(lam.get().find("t1_K proved") != std::string::npos);

  Str rel;
  int rok = 0;
  REQUIRE(lsc_check("relative", "a", "e", 0, 2, 2, -1, &rel.p, &rok) ==
          LSC_OK);
  CHECK(rok == 1);
  CHECK(rel.get().find("prelsub proved") != std::string::npos);
  CHECK(rel.get().find("rel_beta* proved") != std::string::npos);

  char* r = nullptr;
  CHECK(lsc_check("nonsense", nullptr, nullptr, 0, 1, 1, -1, &r, &rok) ==
        LSC_ERR_BAD_ARGUMENT);
}
