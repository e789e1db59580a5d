#ifndef GENFACTOR_INSTANCE_IO_HPP
#define GENFACTOR_INSTANCE_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "genfactor/instance.hpp"

namespace genfactor {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Text format for instances:
//   p genfactor <m> <k> <nedges>
//   u <i> <list>       one line per U vertex, list = "-" or comma-separated ints
//   v <j> <list>
//   e <i> <j> <rho>    endpoints must be declared on earlier lines
// '#' lines are comments. Throws ParseError with a 1-based line number.
Instance parse_instance(std::string_view text);

// Canonical form: header, u lines ascending, v lines ascending, e lines in
// (u, v) order, lists ascending. parse/serialize round-trip on this form.
std::string serialize_instance(const Instance& inst);

struct FactorFile {
    int declared_edges = 0;
    std::vector<std::tuple<int, int, Weight>> entries;  // (u, v, weight)
};

// Text format for factors:
//   f genfactor <nedges>
//   w <i> <j> <phi>
// Omitted edges carry weight 0.
FactorFile parse_factor(std::string_view text);

// Canonical form writes only nonzero weights, in edge-id order.
std::string serialize_factor(const Instance& inst, std::span<const Weight> phi);

// Resolves file entries against the instance's edges. Throws
// std::invalid_argument on a pair that is not an edge or a duplicate entry.
EdgeWeighting bind_factor(const Instance& inst, const FactorFile& file);

std::string read_text_file(const std::string& path);  // throws std::runtime_error
void write_text_file(const std::string& path, std::string_view text);

}  // namespace genfactor

#endif
