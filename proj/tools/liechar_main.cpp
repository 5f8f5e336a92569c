// Thin command-line wrapper over the shared library; everything interesting
// happens behind the C interface.

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "liechar.h"

int main(int argc, char** argv) {
  const char* data_dir = getenv("LIECHAR_DATA");
  // --data DIR anywhere on the command line overrides the environment
  int n = 0;
  const char** args = (const char**)malloc(sizeof(char*) * (size_t)argc);
  for (int i = 1; i < argc; ++i) {
    if (strcmp(argv[i], "--data") == 0 && i + 1 < argc) {
      data_dir = argv[++i];
      continue;
    }
    args[n++] = argv[i];
  }
  if (n == 0) {
    args[0] = "help";
    n = 1;
  }
  lch_context* ctx = lch_context_new(data_dir);
  char* out = NULL;
  int code = lch_run(ctx, n, args, &out);
  if (out) {
    fputs(out, code == 0 ? stdout : stderr);
    lch_string_free(out);
  }
  lch_context_free(ctx);
  free(args);
  return code;
}
