#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstring>
#include <string>
#include <vector>

// Path of the casim binary for the CLI tests, injected by CTest.
std::string g_cli_path;

int main(int argc, char** argv) {
  std::vector<char*> args;
  for (int i = 0; i < argc; ++i) {
    constexpr const char* kPrefix = "--cli-path=";
    if (std::strncmp(argv[i], kPrefix, std::strlen(kPrefix)) == 0) {
      g_cli_path = argv[i] + std::strlen(kPrefix);
      continue;
    }
    args.push_back(argv[i]);
  }
  doctest::Context ctx(static_cast<int>(args.size()), args.data());
  return ctx.run();
}
