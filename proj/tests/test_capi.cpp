#include <cstring>
#include <vector>
#include <string>

#include "doctest.h"
#include "liechar.h"

namespace {

std::string run(lch_context* ctx, std::initializer_list<const char*> args,
                int expect_code) {
  std::vector<const char*> argv(args);
  char* out = nullptr;
  int code = lch_run(ctx, static_cast<int>(argv.size()), argv.data(), &out);
  CHECK(code == expect_code);
  std::string text = out ? out : "";
  lch_string_free(out);
  return text;
}

}  // namespace

TEST_CASE("C interface: typed queries") {
  lch_context* ctx = lch_context_new("data");
  unsigned long long order = 0;
  CHECK(lch_weyl_order(ctx, "F4", &order) == LCH_OK);
  CHECK(order == 1152);
  CHECK(lch_weyl_order(ctx, "E7", &order) == LCH_OK);
  CHECK(order == 2903040ull);
  int roots = 0;
  CHECK(lch_root_count(ctx, "E6", &roots) == LCH_OK);
  CHECK(roots == 72);
  CHECK(lch_root_count(ctx, "Q9", &roots) == LCH_E_USAGE);
  CHECK(std::string(lch_last_error(ctx)).find("label") != std::string::npos);

  char* s = nullptr;
  CHECK(lch_center_structure(ctx, "E7sc", "A3A3A1", &s) == LCH_OK);
  CHECK(std::string(s) == "Z/2 x Z/4");
  lch_string_free(s);
  CHECK(lch_center_structure(ctx, "F4", nullptr, &s) == LCH_OK);
  CHECK(std::string(s) == "1");
  lch_string_free(s);

  char* z = nullptr;
  CHECK(lch_solve_zeta(ctx, "f4-a34", &z) == LCH_OK);
  CHECK(std::string(z) == "mod 3 res 1: 1; mod 3 res 2: 1");
  lch_string_free(z);
  CHECK(lch_solve_zeta(ctx, "f4-a2", &z) == LCH_OK);
  CHECK(std::string(z).find("conditional: x14=1 x15=1 x16=-1") != std::string::npos);
  lch_string_free(z);

  lch_context_free(ctx);
}

TEST_CASE("C interface: report runner and error codes") {
  lch_context* ctx = lch_context_new("data");

  std::string fusion = run(ctx, {"fusion", "--type", "G2", "--subsystem", "A2"}, LCH_OK);
  CHECK(fusion.find("| (1,2) | 3") != std::string::npos);

  run(ctx, {"fusion", "--type", "G2"}, LCH_E_USAGE);
  run(ctx, {"no-such-command"}, LCH_E_USAGE);

  // validation failure: a green file with a corrupted polynomial
  std::string bad = run(ctx, {"ingest-check", "--kind", "green", "cases/e7.case"},
                        LCH_E_VALIDATION);
  CHECK(bad.find("validation failed") != std::string::npos);

  std::string ok = run(ctx, {"ingest-check", "--kind", "green", "green/b4_ex36.grn"},
                       LCH_OK);
  CHECK(ok.find("entries=5") != std::string::npos);

  std::string tab =
      run(ctx, {"ingest-check", "--kind", "chartab", "chartab/e7.crt"}, LCH_OK);
  CHECK(tab.find("orthogonality=verified") != std::string::npos);

  // determinism: the same command twice gives byte-identical output
  std::string a = run(ctx, {"verify-scalars", "--case", "f4-a56"}, LCH_OK);
  std::string b = run(ctx, {"verify-scalars", "--case", "f4-a56"}, LCH_OK);
  CHECK(a == b);
  CHECK(a.find("zeta=conditional 1:1 s1^2:-1") != std::string::npos);

  lch_context_free(ctx);
}
