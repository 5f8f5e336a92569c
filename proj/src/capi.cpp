#include "liechar.h"

#include <cstring>
#include <string>
#include <vector>

#include "cuspidal.hpp"
#include "report.hpp"

struct lch_context {
  std::string data_dir;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(malloc(s.size() + 1));
  memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
int guarded(lch_context* ctx, F&& f) {
  try {
    return f();
  } catch (const lch::underdetermined_error& e) {
    ctx->last_error = e.what();
    return LCH_E_UNDERDETERMINED;
  } catch (const lch::value_error& e) {
    ctx->last_error = e.what();
    return LCH_E_VALIDATION;
  } catch (const std::invalid_argument& e) {
    ctx->last_error = e.what();
    return LCH_E_USAGE;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return LCH_E_INTERNAL;
  }
}

}  // namespace

extern "C" {

lch_context* lch_context_new(const char* data_dir) {
  auto* ctx = new lch_context;
  ctx->data_dir = data_dir ? data_dir : "data";
  return ctx;
}

void lch_context_free(lch_context* ctx) { delete ctx; }

const char* lch_last_error(const lch_context* ctx) {
  return ctx->last_error.c_str();
}

int lch_run(lch_context* ctx, int argc, const char* const* argv, char** out) {
  if (!ctx || !out || argc < 1 || !argv) return LCH_E_USAGE;
  std::vector<std::string> args(argv, argv + argc);
  lch::Report r = lch::run_command(ctx->data_dir, args);
  *out = dup_string(r.text);
  if (r.code != 0) ctx->last_error = r.text;
  return r.code;
}

void lch_string_free(char* s) { free(s); }

int lch_weyl_order(lch_context* ctx, const char* type, unsigned long long* out) {
  return guarded(ctx, [&] {
    lch::RootSystem rs = lch::RootSystem::build(type);
    lch::WeylGroup w(rs);
    *out = w.order();
    return LCH_OK;
  });
}

int lch_root_count(lch_context* ctx, const char* type, int* out) {
  return guarded(ctx, [&] {
    *out = lch::RootSystem::build(type).num_roots();
    return LCH_OK;
  });
}

int lch_center_structure(lch_context* ctx, const char* type,
                         const char* subsystem, char** out) {
  std::vector<std::string> args = {"center", "--type", type};
  if (subsystem) {
    args.push_back("--subsystem");
    args.push_back(subsystem);
  }
  lch::Report r = lch::run_command(ctx->data_dir, args);
  if (r.code != 0) {
    ctx->last_error = r.text;
    return r.code;
  }
  // extract the structure= line
  auto pos = r.text.find("structure=");
  auto end = r.text.find('\n', pos);
  *out = dup_string(r.text.substr(pos + 10, end - pos - 10));
  return LCH_OK;
}

int lch_solve_zeta(lch_context* ctx, const char* case_name, char** zeta_out) {
  return guarded(ctx, [&] {
    lch::CaseContext cc(ctx->data_dir);
    lch::CaseData d = cc.load_case(case_name);
    lch::CaseResult r = lch::solve_case(cc, d);
    std::string out;
    for (const auto& br : r.branches) {
      if (!out.empty()) out += "; ";
      out += "mod " + std::to_string(br.branch.mod) + " res " +
             std::to_string(br.branch.res) + ": ";
      if (br.conditional) {
        out += "conditional:";
        for (const auto& [k, v] : br.zeta_by_class) out += " " + k + "=" + v.str();
      } else {
        out += br.zeta.str();
      }
    }
    *zeta_out = dup_string(out);
    return LCH_OK;
  });
}

}  // extern "C"
