#include <iostream>
#include <string>
#include <vector>

#include "braidoka/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto res = braidoka::cli::run(args);
  std::cout << res.text;
  if (res.status == braidoka::cli::Status::Error && res.payload.contains("error"))
    std::cerr << "error: " << res.payload["error"]["message"].get<std::string>() << "\n";
  return res.exit_code();
}
