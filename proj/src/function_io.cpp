#include "homfour/function_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace homfour {

using nlohmann::json;

namespace {

json int_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<long>(v.get_si());
  return v.get_str();
}

BigInt int_from_json(const json& j, const char* field) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) {
    auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      throw SchemaError(std::string(field) + ": integer out of range");
    return BigInt(static_cast<long>(u));
  }
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw SchemaError(std::string(field) + ": malformed integer string");
    return v;
  }
  throw SchemaError(std::string(field) + ": expected an integer");
}

json cyc_json(const CycRat& v) {
  json num = json::array();
  for (const auto& c : v.num()) num.push_back(int_to_json(c));
  return json{{"p", v.p()}, {"num", num}, {"den", int_to_json(v.den())}};
}

CycRat cyc_parse(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("num") || !j.contains("den"))
    throw SchemaError("value must be an object with p, num, den");
  if (!j["p"].is_number_integer()) throw SchemaError("value: p must be an integer");
  const int p = j["p"].get<int>();
  if (!is_prime(p)) throw SchemaError("value: p = " + std::to_string(p) + " is not prime");
  if (!j["num"].is_array()) throw SchemaError("value: num must be an array");
  std::vector<BigInt> num;
  for (const auto& c : j["num"]) num.push_back(int_from_json(c, "num"));
  const std::size_t want = p == 2 ? 1 : static_cast<std::size_t>(p - 1);
  if (num.size() != want)
    throw SchemaError("value: num must have " + std::to_string(want) + " entries for p = " + std::to_string(p));
  BigInt den = int_from_json(j["den"], "den");
  if (den <= 0) throw SchemaError("value: den must be positive");
  return CycRat::from_parts(p, std::move(num), std::move(den));
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) throw SchemaError(std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

}  // namespace

const GSpacePtr& space_for(const HomSpace& hs, const std::string& tag) {
  if (tag == "V") return hs.V_scheme();
  if (tag == "Vdual") return hs.Vdual_scheme();
  if (tag == "hV") return hs.V();
  if (tag == "hVdual") return hs.Vdual();
  if (tag == "PV") return hs.PV();
  if (tag == "PVdual") return hs.PVdual();
  throw SchemaError("unknown space tag \"" + tag + "\"");
}

std::string cyc_to_json(const CycRat& v) { return cyc_json(v).dump(); }

CycRat cyc_from_json(const std::string& text) {
  try {
    return cyc_parse(json::parse(text));
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

FunctionFile parse_function_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("function file must be a JSON object");
  FunctionFile f;
  f.p = get_int(j, "p");
  f.n = get_int(j, "n");
  const int r = get_int(j, "r");
  if (r < 0) throw SchemaError("r must be non-negative");
  f.r = static_cast<std::size_t>(r);
  if (!j.contains("space") || !j["space"].is_string()) throw SchemaError("missing string field \"space\"");
  f.space = j["space"].get<std::string>();
  if (!j.contains("values") || !j["values"].is_array()) throw SchemaError("missing array field \"values\"");
  for (const auto& v : j["values"]) {
    CycRat c = cyc_parse(v);
    if (c.p() != f.p)
      throw SchemaError("value with p = " + std::to_string(c.p()) + " in a file declaring p = " + std::to_string(f.p));
    f.values.push_back(std::move(c));
  }
  return f;
}

std::string dump_function_file(const FunctionFile& file) {
  json values = json::array();
  for (const auto& v : file.values) values.push_back(cyc_json(v));
  json j{{"p", file.p}, {"n", file.n}, {"r", file.r}, {"space", file.space}, {"values", values}};
  return j.dump(2) + "\n";
}

FunctionFile read_function_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_function_file(ss.str());
}

void write_function_file(const std::string& path, const FunctionFile& file) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << dump_function_file(file);
  if (!out) throw std::runtime_error("write failed for " + path);
}

TraceFunction to_trace_function(const HomSpace& hs, const FunctionFile& file) {
  if (file.p != hs.p() || file.n != hs.field().n() || file.r != hs.r())
    throw SchemaError("file declares (p, n, r) = (" + std::to_string(file.p) + ", " + std::to_string(file.n) + ", " +
                      std::to_string(file.r) + "), expected (" + std::to_string(hs.p()) + ", " +
                      std::to_string(hs.field().n()) + ", " + std::to_string(hs.r()) + ")");
  const GSpacePtr& space = space_for(hs, file.space);
  if (file.values.size() != space->orbits().size())
    throw SchemaError("space " + file.space + " needs " + std::to_string(space->orbits().size()) + " values, file has " +
                      std::to_string(file.values.size()));
  return make_function(space, file.values);
}

FunctionFile to_function_file(const HomSpace& hs, const std::string& space, const TraceFunction& t) {
  return {hs.p(), hs.field().n(), hs.r(), space, t.values};
}

}  // namespace homfour
