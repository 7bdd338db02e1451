#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "homfour/transforms.hpp"

namespace homfour {

/// Malformed or mismatched function file.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Space tags of the function-file format:
///   "V", "Vdual"      scheme points of V, V^dual in enumeration order
///   "hV", "hVdual"    classes of the homogeneous quotients
///   "PV", "PVdual"    projective points
const GSpacePtr& space_for(const HomSpace& hs, const std::string& tag);

struct FunctionFile {
  int p = 0;
  int n = 0;
  std::size_t r = 0;
  std::string space;
  std::vector<CycRat> values;
};

/// {"p": int, "num": [...], "den": int}; integers beyond int64 are written
/// as decimal strings.
std::string cyc_to_json(const CycRat& v);
CycRat cyc_from_json(const std::string& text);

FunctionFile parse_function_file(const std::string& text);
std::string dump_function_file(const FunctionFile& file);

FunctionFile read_function_file(const std::string& path);
void write_function_file(const std::string& path, const FunctionFile& file);

/// Binds a parsed file to the geometry, checking p, n, r and the value count.
TraceFunction to_trace_function(const HomSpace& hs, const FunctionFile& file);
FunctionFile to_function_file(const HomSpace& hs, const std::string& space, const TraceFunction& t);

}  // namespace homfour
