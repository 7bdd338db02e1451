#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "homfour/verify.hpp"

namespace homfour {

using nlohmann::ordered_json;

namespace {

std::string fields_str(const GridSpec& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.fields.size(); ++i)
    os << (i ? " " : "") << g.fields[i].first << "^" << g.fields[i].second;
  return os.str();
}

std::string ranks_str(const GridSpec& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.ranks.size(); ++i) os << (i ? " " : "") << g.ranks[i];
  return os.str();
}

std::string witness_str(const Witness& w) {
  std::ostringstream os;
  os << "seed=" << w.seed << " function=" << w.function_index << " class=" << w.class_index << " (" << w.note << ")";
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_text(const Report& report, bool timing) {
  std::ostringstream os;
  os << "# homfour verify\n";
  os << "# seed " << report.grid.seed << ", random functions per check " << report.grid.random_count << "\n";
  os << "# fields (p^n): " << fields_str(report.grid) << "; ranks: " << ranks_str(report.grid) << "\n";
  os << std::left << std::setw(18) << "check" << std::setw(4) << "q" << std::setw(3) << "r" << std::setw(7)
     << "status" << std::setw(6) << "fns";
  if (timing) os << std::setw(10) << "seconds";
  os << "detail\n";
  for (const auto& c : report.results) {
    os << std::left << std::setw(18) << c.id << std::setw(4) << c.q() << std::setw(3) << c.r << std::setw(7)
       << status_name(c.status) << std::setw(6) << c.functions;
    if (timing) os << std::setw(10) << std::fixed << std::setprecision(3) << c.seconds;
    os << c.detail;
    if (c.witness) os << " | witness " << witness_str(*c.witness);
    os << "\n";
  }
  os << "# total " << report.results.size() << ", pass " << report.count(Status::Pass) << ", fail "
     << report.count(Status::Fail) << ", skip " << report.count(Status::Skip) << "\n";
  return os.str();
}

std::string format_json(const Report& report, bool timing) {
  ordered_json fields = ordered_json::array();
  for (const auto& [p, n] : report.grid.fields) fields.push_back({p, n});
  ordered_json results = ordered_json::array();
  for (const auto& c : report.results) {
    ordered_json rec{{"check", c.id}, {"p", c.p},           {"n", c.n},
                     {"q", c.q()},    {"r", c.r},           {"seed", c.seed},
                     {"status", status_name(c.status)},     {"functions", c.functions},
                     {"detail", c.detail}};
    if (c.witness)
      rec["witness"] = {{"seed", c.witness->seed},
                        {"function_index", c.witness->function_index},
                        {"class_index", c.witness->class_index},
                        {"note", c.witness->note}};
    else
      rec["witness"] = nullptr;
    if (timing) rec["seconds"] = c.seconds;
    results.push_back(std::move(rec));
  }
  ordered_json j{{"seed", report.grid.seed},
                 {"random_count", report.grid.random_count},
                 {"grid", {{"fields", fields}, {"ranks", report.grid.ranks}}},
                 {"results", results},
                 {"summary",
                  {{"total", report.results.size()},
                   {"pass", report.count(Status::Pass)},
                   {"fail", report.count(Status::Fail)},
                   {"skip", report.count(Status::Skip)}}}};
  return j.dump(2) + "\n";
}

std::string format_csv(const Report& report, bool timing) {
  std::ostringstream os;
  os << "check,p,n,q,r,seed,status,functions,witness_function,witness_class,detail";
  if (timing) os << ",seconds";
  os << "\n";
  for (const auto& c : report.results) {
    os << c.id << "," << c.p << "," << c.n << "," << c.q() << "," << c.r << "," << c.seed << ","
       << status_name(c.status) << "," << c.functions << ",";
    if (c.witness) os << c.witness->function_index << "," << c.witness->class_index;
    else os << ",";
    os << "," << csv_field(c.detail + (c.witness ? " | " + c.witness->note : ""));
    if (timing) os << "," << std::fixed << std::setprecision(3) << c.seconds;
    os << "\n";
  }
  return os.str();
}

}  // namespace homfour
