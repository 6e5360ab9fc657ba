#include "dtg/genfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace dtg {

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(int lineno, const std::string& msg) {
  throw Error("line " + std::to_string(lineno) + ": " + msg);
}

int parse_int(const std::string& tok, int lineno) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    fail(lineno, "expected a non-negative integer, got '" + tok + "'");
  try {
    return std::stoi(tok);
  } catch (...) {
    fail(lineno, "integer out of range: " + tok);
  }
}

Perm parse_cycles(const std::string& s, int n, int lineno) {
  std::vector<std::vector<Point>> cycles;
  size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') fail(lineno, "expected '('");
    size_t j = s.find(')', i);
    if (j == std::string::npos) fail(lineno, "unterminated cycle");
    std::string body = s.substr(i + 1, j - i - 1);
    for (char& c : body)
      if (c == ',') c = ' ';
    std::istringstream is(body);
    std::vector<Point> cyc;
    std::string tok;
    while (is >> tok) {
      int v = parse_int(tok, lineno);
      if (v >= n) fail(lineno, "point " + tok + " >= degree");
      cyc.push_back(v);
    }
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    i = j + 1;
  }
  try {
    return Perm::from_cycles(n, cycles);
  } catch (const Error& e) {
    fail(lineno, e.what());
  }
}

}  // namespace

GeneratorFile parse_generators(const std::string& text) {
  GeneratorFile f;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool have_degree = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = strip(raw);
    if (s.empty()) continue;
    if (!have_degree) {
      std::istringstream is(s);
      std::string kw, num, extra;
      is >> kw >> num;
      if (kw != "degree" || (is >> extra)) fail(lineno, "expected 'degree n'");
      f.degree = parse_int(num, lineno);
      if (f.degree <= 0) fail(lineno, "degree must be positive");
      have_degree = true;
      continue;
    }
    if (s.rfind("img:", 0) == 0) {
      std::istringstream is(s.substr(4));
      std::vector<Point> img;
      std::string tok;
      while (is >> tok) img.push_back(parse_int(tok, lineno));
      if (static_cast<int>(img.size()) != f.degree) fail(lineno, "image list length differs from degree");
      try {
        f.gens.emplace_back(std::move(img));
      } catch (const Error& e) {
        fail(lineno, e.what());
      }
    } else {
      f.gens.push_back(parse_cycles(s, f.degree, lineno));
    }
  }
  if (!have_degree) throw Error("missing 'degree n' header");
  return f;
}

std::string write_generators(int degree, const std::vector<Perm>& gens) {
  std::ostringstream os;
  os << "degree " << degree << "\n";
  for (const auto& g : gens) os << g.cycle_string() << "\n";
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

GeneratorFile read_generator_file(const std::string& path) { return parse_generators(read_text_file(path)); }

void write_generator_file(const std::string& path, int degree, const std::vector<Perm>& gens) {
  write_text_file(path, write_generators(degree, gens));
}

}  // namespace dtg
