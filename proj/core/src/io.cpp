#include "stubborn/io.hpp"

#include <fstream>
#include <sstream>

#include "stubborn/errors.hpp"

namespace stubborn {
namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

Polynomial PolyFile::instantiate(const std::vector<Coefficient>& values) const {
  if (values.size() != params.size())
    throw InputError("expected " + std::to_string(params.size()) + " parameter values");
  std::map<std::string, Polynomial> sub;
  for (std::size_t i = 0; i < params.size(); ++i) sub[params[i]] = Polynomial::constant(values[i]);
  for (const auto& v : vars) sub[v] = Polynomial::variable(v, vars);
  return substitute(poly, sub).with_vars(vars);
}

PolyFile parse_poly_text(const std::string& text) {
  PolyFile f;
  std::istringstream in(text);
  std::string line, body;
  bool have_vars = false;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      if (f.title.empty()) f.title = trim(t.substr(1));
      continue;
    }
    if (t.rfind("vars:", 0) == 0) {
      f.vars = words(t.substr(5));
      have_vars = true;
      continue;
    }
    if (t.rfind("params:", 0) == 0) {
      f.params = words(t.substr(7));
      continue;
    }
    body += t + " ";
  }
  if (trim(body).empty()) throw InputError("no polynomial expression found");
  if (have_vars) {
    auto all = f.vars;
    all.insert(all.end(), f.params.begin(), f.params.end());
    f.poly = parse(body, all);
  } else {
    f.poly = parse(body);
    for (const auto& v : f.poly.vars())
      if (std::find(f.params.begin(), f.params.end(), v) == f.params.end()) f.vars.push_back(v);
    auto all = f.vars;
    all.insert(all.end(), f.params.begin(), f.params.end());
    f.poly = f.poly.with_vars(all);
  }
  return f;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PolyFile load_poly_file(const std::string& path) { return parse_poly_text(read_text_file(path)); }

std::vector<ProjectivePoint> parse_zero_text(const std::string& text) {
  std::vector<ProjectivePoint> pts;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    pts.push_back(ProjectivePoint::parse(t));
  }
  return pts;
}

std::vector<ProjectivePoint> load_zero_file(const std::string& path) {
  return parse_zero_text(read_text_file(path));
}

}  // namespace stubborn
