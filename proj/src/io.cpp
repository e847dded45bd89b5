#include "lieidx/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "lieidx/errors.hpp"

namespace lieidx::io {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

long parse_index(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer index, got '" + tok + "'", line);
  }
}

}  // namespace

AlgebraFile parse_algebra(std::istream& in) {
  std::optional<StructureConstants> alg;
  std::optional<std::string> name, note;
  std::set<std::tuple<int, int, int>> seen;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      std::string comment = trim(line.substr(hash + 1));
      if (comment.rfind("name:", 0) == 0 && !name)
        name = trim(comment.substr(5));
      else if (comment.rfind("note:", 0) == 0 && !note)
        note = trim(comment.substr(5));
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    if (keyword == "dim") {
      if (alg) throw ParseError("duplicate dim line", lineno);
      std::string tok;
      if (!(ls >> tok)) throw ParseError("dim needs a value", lineno);
      long n = parse_index(tok, lineno);
      if (n < 1) throw ParseError("dim must be >= 1", lineno);
      std::string extra;
      if (ls >> extra) throw ParseError("trailing tokens after dim", lineno);
      alg.emplace(static_cast<int>(n));
    } else if (keyword == "bracket") {
      if (!alg)
        throw ParseError("bracket before the dim line", lineno);
      std::string ti, tj, ts, tc, extra;
      if (!(ls >> ti >> tj >> ts >> tc))
        throw ParseError("bracket needs four fields: i j s coeff", lineno);
      if (ls >> extra) throw ParseError("trailing tokens after bracket", lineno);
      long i = parse_index(ti, lineno), j = parse_index(tj, lineno),
           s = parse_index(ts, lineno);
      const int n = alg->dim();
      if (i < 1 || i > n || j < 1 || j > n || s < 1 || s > n)
        throw ParseError("bracket index out of range 1.." + std::to_string(n),
                         lineno);
      if (i >= j)
        throw ParseError("bracket requires i < j (got i=" + std::to_string(i) +
                             ", j=" + std::to_string(j) + ")",
                         lineno);
      if (!seen.insert({static_cast<int>(i), static_cast<int>(j),
                        static_cast<int>(s)}).second)
        throw ParseError("duplicate bracket triple (" + std::to_string(i) +
                             "," + std::to_string(j) + "," + std::to_string(s) +
                             ")",
                         lineno);
      Rational c;
      try {
        c = Rational::from_string(tc);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno);
      }
      alg->add(static_cast<int>(i), static_cast<int>(j), static_cast<int>(s),
               c);
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", lineno);
    }
  }
  if (!alg) throw ParseError("missing dim line");
  return {*alg, name, note};
}

AlgebraFile parse_algebra_string(const std::string& text) {
  std::istringstream in(text);
  return parse_algebra(in);
}

AlgebraFile parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file '" + path + "'");
  return parse_algebra(in);
}

std::string emit_algebra(const StructureConstants& alg,
                         const std::optional<std::string>& name,
                         const std::optional<std::string>& note) {
  std::string out;
  if (name) out += "# name: " + *name + "\n";
  if (note) out += "# note: " + *note + "\n";
  out += "dim " + std::to_string(alg.dim()) + "\n";
  for (const auto& [i, j, s, c] : alg.entries())
    out += "bracket " + std::to_string(i) + " " + std::to_string(j) + " " +
           std::to_string(s) + " " + c.str() + "\n";
  return out;
}

}  // namespace lieidx::io
