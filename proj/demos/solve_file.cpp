// Minimal end-to-end use of the library: parse an instance file, decide it,
// and print the edit when the answer is YES.

#include <fstream>
#include <iostream>

#include <cep11/core.hpp>
#include <cep11/io.hpp>
#include <cep11/pipeline.hpp>

int main(int argc, char** argv) {
  using namespace cep11;
  if (argc != 2) {
    std::cerr << "usage: solve_file <instance-file>\n";
    return 2;
  }
  std::ifstream in(argv[1]);
  if (!in) {
    std::cerr << "cannot open '" << argv[1] << "'\n";
    return 2;
  }
  try {
    Instance g = parse_instance(in);
    Verdict v = solve(g);
    if (!v.answer) {
      std::cout << "NO\n";
      return 1;
    }
    std::cout << "YES\n";
    serialize_certificate(*v.certificate, std::cout);
    return 0;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
}
