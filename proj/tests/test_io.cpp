#include <sstream>

#include "doctest.h"
#include "subcrit/io.hpp"

using namespace subcrit;

TEST_CASE("DIMACS round trip") {
  Formula f(5, 3, {Clause{1, 2, 3}, Clause{-1, -2, -3}, Clause{1, -4, 5}});
  std::stringstream ss;
  write_dimacs(ss, f);
  CHECK(ss.str().rfind("p cnf 5 3", 0) == 0);
  CHECK(read_dimacs(ss) == f);
}

TEST_CASE("DIMACS parsing tolerates comments and line breaks inside clauses") {
  std::istringstream in("c example\np cnf 4 2\n1 -2\n 3 0 -1 2 4 0\n");
  Formula f = read_dimacs(in);
  CHECK(f.order() == 4);
  CHECK(f.width() == 3);
  CHECK(f.contains(Clause{1, -2, 3}));
  CHECK(f.contains(Clause{-1, 2, 4}));
}

TEST_CASE("DIMACS errors") {
  std::istringstream mixed("p cnf 4 2\n1 2 3 0\n1 2 0\n");
  CHECK_THROWS(read_dimacs(mixed));
  std::istringstream range("p cnf 2 1\n1 2 3 0\n");
  CHECK_THROWS(read_dimacs(range));
  std::istringstream count("p cnf 3 2\n1 2 3 0\n");
  CHECK_THROWS(read_dimacs(count));
  std::istringstream empty("p cnf 6 0\n");
  Formula e = read_dimacs(empty, 3);
  CHECK(e.order() == 6);
  CHECK(e.width() == 3);
}

TEST_CASE("edge list round trip") {
  Hypergraph g(5, 3, {Edge{1, 2, 3}, Edge{2, 4, 5}});
  std::stringstream ss;
  write_edge_list(ss, g);
  CHECK(ss.str().rfind("5 3 2", 0) == 0);
  CHECK(read_edge_list(ss) == g);
  std::istringstream bad("3 2 1\n1 4\n");
  CHECK_THROWS(read_edge_list(bad));
}
