#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "subcrit/instances.hpp"

namespace subcrit {

/// DIMACS CNF: "p cnf n m", then clauses as signed integers closed by 0.
/// Comment lines start with 'c'. All clauses must have the same width; an
/// empty formula takes `width_hint` (or 0 when absent).
Formula read_dimacs(std::istream& in, std::optional<std::uint32_t> width_hint = {});
void write_dimacs(std::ostream& out, const Formula& f);

/// Edge list: a header line "n r m", then one line of r vertex ids per edge.
Hypergraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Hypergraph& g);

Formula read_dimacs_file(const std::string& path);
Hypergraph read_edge_list_file(const std::string& path);

}  // namespace subcrit
