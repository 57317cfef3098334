#pragma once

#include <iosfwd>
#include <string>

#include "ccp/instance.hpp"

// Text format, one record per line, '#' starts a comment:
//
//   CCC <vertex_count>
//   c <value>              constant offset, optional, defaults to 0
//   e <p> <q> <value>      edge cost
//   t <p> <q> <r> <value>  triple cost
//
// The writer emits the header, the offset, then edges and triples in
// canonical ascending order with shortest round-trip number formatting.
namespace ccp {

Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);

void write_instance(std::ostream& out, const Instance& inst);
void write_instance_file(const std::string& path, const Instance& inst);
std::string instance_to_string(const Instance& inst);

// Multicut counterpart: header "CMC <vertex_count>", constant line
// "C <value>", records "z <p> <q> <value>" and "y <p> <q> <r> <value>".
void write_multicut(std::ostream& out, const MulticutInstance& mc);

std::string format_number(double v);

}  // namespace ccp
