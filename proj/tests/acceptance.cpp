// Acceptance suite: one line per criterion, exact equality throughout.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "homfour/verify.hpp"

using namespace homfour;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t cells = 0;
  std::size_t functions = 0;
  std::string note;
};

const CheckOptions kOptions{20240611, 100, kDefaultSizeBound};

std::vector<GridCell> cells_where(const std::function<bool(const GridCell&)>& keep) {
  std::vector<GridCell> out;
  for (const auto& c : grid_cells(default_grid()))
    if (keep(c)) out.push_back(c);
  return out;
}

int q_of(const GridCell& c) {
  int q = 1;
  for (int i = 0; i < c.n; ++i) q *= c.p;
  return q;
}

// Runs `ids` on `cells`; any failure or unexpected skip fails the criterion.
Outcome run(const std::vector<std::string>& ids, const std::vector<GridCell>& cells) {
  Outcome o;
  for (const auto& cell : cells) {
    for (const auto& id : ids) {
      const CheckResult res = run_check(id, cell, kOptions);
      ++o.cells;
      o.functions += res.functions;
      if (res.status != Status::Pass && o.pass) {
        o.pass = false;
        o.note = id + " at q=" + std::to_string(q_of(cell)) + " r=" + std::to_string(cell.r) + ": " +
                 status_name(res.status) + " " + res.detail;
        if (res.witness)
          o.note += " (function " + std::to_string(res.witness->function_index) + ", class " +
                    std::to_string(res.witness->class_index) + ")";
      }
    }
  }
  return o;
}

int failures = 0;

void line(int n, const std::string& name, const Outcome& o, const std::string& extra = "") {
  if (!o.pass) ++failures;
  std::printf("[%s] criterion %d %s: %zu runs, %zu functions%s%s%s\n", o.pass ? "PASS" : "FAIL", n, name.c_str(),
              o.cells, o.functions, extra.empty() ? "" : "; ", extra.c_str(), o.pass ? "" : ("; " + o.note).c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  const auto all = [](const GridCell&) { return true; };

  const auto t0 = std::chrono::steady_clock::now();
  Outcome c1 = run({"involution"}, cells_where(all));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s (limit 60 s)", secs);
  if (secs >= 60.0 && c1.pass) {
    c1.pass = false;
    c1.note = "full grid took too long";
  }
  line(1, "involutivity", c1, timing);

  line(2, "Deligne comparison", run({"deligne"}, cells_where(all)));
  line(3, "oracle equivalence", run({"oracle"}, cells_where(all)));
  line(4, "Radon devissage", run({"radon_devissage"}, cells_where(all)));

  Outcome c5 = run({"kernel_calculus"}, cells_where(all));
  const Outcome c5k = run({"involution_kernel"}, cells_where([](const GridCell& c) { return q_of(c) <= 5 && c.r <= 2; }));
  c5.cells += c5k.cells;
  c5.functions += c5k.functions;
  if (c5.pass && !c5k.pass) {
    c5.pass = false;
    c5.note = c5k.note;
  }
  line(5, "kernel calculus", c5);

  line(6, "Radon inversion", run({"radon_inversion"}, cells_where([](const GridCell& c) { return c.r >= 2; })));
  line(7, "functoriality", run({"functoriality"}, cells_where([](const GridCell& c) { return q_of(c) <= 3; })));

  // Sign report: per r, the verbatim formula's relation to the oracle must
  // be the same at every q; the expected outcome is match iff r is even.
  Outcome c8;
  std::string summary;
  for (std::size_t r = 1; r <= 3; ++r) {
    std::map<std::string, std::size_t> seen;
    for (const auto& cell : cells_where([r](const GridCell& c) { return c.r == r; })) {
      const CheckResult res = run_check("sign_report", cell, kOptions);
      ++c8.cells;
      c8.functions += res.functions;
      if (res.status != Status::Pass) {
        c8.pass = false;
        c8.note = "q=" + std::to_string(q_of(cell)) + " r=" + std::to_string(r) + ": " + res.detail;
        continue;
      }
      ++seen[res.detail.substr(0, res.detail.find(':'))];
    }
    if (seen.size() != 1) {
      c8.pass = false;
      if (c8.note.empty()) c8.note = "r=" + std::to_string(r) + ": outcome depends on q";
      continue;
    }
    const std::string got = seen.begin()->first;
    const std::string want = r % 2 == 0 ? "match" : "negated";
    summary += (summary.empty() ? "" : ", ") + std::string("r=") + std::to_string(r) + " " + got +
               (got == want ? "" : " (expected " + want + ")");
  }
  line(8, "sign report", c8, summary);

  return failures == 0 ? 0 : 1;
}
