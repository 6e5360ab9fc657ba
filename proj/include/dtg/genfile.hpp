#pragma once
#include <string>
#include <vector>

#include "dtg/perm.hpp"

namespace dtg {

struct GeneratorFile {
  int degree = 0;
  std::vector<Perm> gens;
};

// "degree n" then one permutation per line: cycles "(0 1 2)(3 4)" or "img: 1 2 0 ..."; '#' comments
GeneratorFile parse_generators(const std::string& text);
std::string write_generators(int degree, const std::vector<Perm>& gens);

GeneratorFile read_generator_file(const std::string& path);
void write_generator_file(const std::string& path, int degree, const std::vector<Perm>& gens);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace dtg
