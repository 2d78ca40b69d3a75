#include "subcrit/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace subcrit {

Formula read_dimacs(std::istream& in, std::optional<std::uint32_t> width_hint) {
  std::string line;
  long long n = -1, m = -1;
  std::vector<Clause> clauses;
  std::vector<Literal> current;
  std::optional<std::uint32_t> width = width_hint;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head[0] == 'c' || head[0] == '%') continue;
    if (head == "p") {
      std::string fmt;
      if (!(ls >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0)
        throw std::runtime_error("malformed DIMACS header: " + line);
      continue;
    }
    if (n < 0) throw std::runtime_error("DIMACS clause before header");
    std::istringstream body(line);
    long long v;
    while (body >> v) {
      if (v == 0) {
        const auto w = static_cast<std::uint32_t>(current.size());
        if (!width) width = w;
        if (*width != w)
          throw std::runtime_error("DIMACS clauses of mixed width");
        clauses.emplace_back(std::move(current));
        current.clear();
      } else {
        if (v > n || -v > n)
          throw std::runtime_error("DIMACS literal " + std::to_string(v) +
                                   " outside 1.." + std::to_string(n));
        current.push_back(static_cast<Literal>(v));
      }
    }
    if (body.fail() && !body.eof())
      throw std::runtime_error("malformed DIMACS clause line: " + line);
  }
  if (n < 0) throw std::runtime_error("missing DIMACS header");
  if (!current.empty()) throw std::runtime_error("unterminated DIMACS clause");
  if (static_cast<long long>(clauses.size()) != m)
    throw std::runtime_error("DIMACS header declares " + std::to_string(m) +
                             " clauses, found " + std::to_string(clauses.size()));
  return Formula(static_cast<std::uint32_t>(n), width.value_or(0), std::move(clauses));
}

void write_dimacs(std::ostream& out, const Formula& f) {
  out << "p cnf " << f.order() << ' ' << f.size() << '\n';
  for (const Clause& c : f.clauses()) {
    for (Literal l : c.literals()) out << l << ' ';
    out << "0\n";
  }
}

Hypergraph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw std::runtime_error("missing edge-list header");
  long long n, r, m;
  {
    std::istringstream hs(line);
    if (!(hs >> n >> r >> m) || n < 0 || r < 1 || m < 0)
      throw std::runtime_error("malformed edge-list header: " + line);
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw std::runtime_error("edge list ends early");
    std::istringstream es(line);
    Edge e;
    long long v;
    while (es >> v) {
      if (v < 1 || v > n)
        throw std::runtime_error("edge vertex " + std::to_string(v) + " out of range");
      e.push_back(static_cast<Var>(v));
    }
    if (static_cast<long long>(e.size()) != r)
      throw std::runtime_error("edge of size " + std::to_string(e.size()) +
                               ", expected " + std::to_string(r));
    edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(r),
                    std::move(edges));
}

void write_edge_list(std::ostream& out, const Hypergraph& g) {
  out << g.order() << ' ' << g.width() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

Formula read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_dimacs(in);
}

Hypergraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

}  // namespace subcrit
