#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ordlat/bounds.hpp"
#include "ordlat/reduction.hpp"

namespace ordlat {

// Lattice file:
//
//   ordlat-lattice 1
//   algebra Q(i)
//   form trace            (or: form plain)
//   alpha [1, 0]
//   d 2
//   D 2
//   [1, 0] [0, 0]
//   [0, 0] [1, 1]
//
// '#' starts a comment; blank lines are ignored.
struct LatticeFile {
  ModuleLattice lattice;
  AlphaForm form;
};

void write_lattice(std::ostream& out, const ModuleLattice& lat, const AlphaForm& form);
std::string format_lattice(const ModuleLattice& lat, const AlphaForm& form);
// Throws ParseError on malformed input.
LatticeFile read_lattice(std::istream& in);
LatticeFile parse_lattice(const std::string& text);

// All element literals "[...]" on a line.
std::vector<Element> parse_row(const AlgebraSpec& alg, const std::string& line);
std::string format_row(const Vector& v);

void write_reduction_report(std::ostream& out, const ReductionReport& rep, const AlphaForm& form);
struct ParsedReduction {
  LatticeFile input;
  LatticeFile output;
  std::vector<ElementaryOp> log;
};
ParsedReduction read_reduction_report(std::istream& in);

void write_minima(std::ostream& out, const MinimaResult& m);
void write_bound_check(std::ostream& out, const BoundCheck& c);
void write_bound_report(std::ostream& out, const BoundReport& r);
void write_counterexample(std::ostream& out, const Counterexample& c);

}  // namespace ordlat
