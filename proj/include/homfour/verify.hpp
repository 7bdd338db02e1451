#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "homfour/transforms.hpp"

namespace homfour {

/// Invalid grid or option (non-prime p, q^r over the bound, unknown check).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Status { Pass, Fail, Skip };
const char* status_name(Status s);

/// Where a failure was seen: the input function (index into the check's
/// function sequence, reproducible from the seed) and the mismatching class.
struct Witness {
  std::uint64_t seed = 0;
  std::size_t function_index = 0;
  std::size_t class_index = 0;
  std::string note;
};

struct CheckResult {
  std::string id;
  int p = 0;
  int n = 0;
  std::size_t r = 0;
  std::uint64_t seed = 0;
  Status status = Status::Pass;
  std::size_t functions = 0;  // inputs exercised
  std::optional<Witness> witness;
  std::string detail;
  double seconds = 0.0;

  int q() const;
};

struct GridCell {
  int p = 0;
  int n = 0;
  std::size_t r = 0;
};

struct GridSpec {
  std::vector<std::pair<int, int>> fields;  // (p, n)
  std::vector<std::size_t> ranks;
  std::size_t random_count = 100;
  std::uint64_t seed = 20240611;
  std::vector<std::string> checks;  // empty: all
  long long bound = kDefaultSizeBound;
};

/// q in {2, 3, 4, 5, 7, 8, 9}, r in {1, 2, 3}.
GridSpec default_grid();
/// All (p, n) with p prime, p <= pmax, p^n <= qmax.
std::vector<std::pair<int, int>> fields_up_to(int pmax, int qmax);

const std::vector<std::string>& all_check_ids();

/// Validated cells in grid order; throws ConfigError.
std::vector<GridCell> grid_cells(const GridSpec& grid);

// Deterministic randomness.

/// xorshift64*: x ^= x >> 12; x ^= x << 25; x ^= x >> 27; return x * 0x2545F4914F6CDD1D.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform-ish integer in [lo, hi] by reduction modulo the range.
  long long uniform(long long lo, long long hi);

 private:
  std::uint64_t state_;
};

/// splitmix64 finalizer, used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);
/// FNV-1a 64-bit.
std::uint64_t fnv1a(const std::string& s);

/// Seed of the stream feeding function `index` of `check` at `cell`.
std::uint64_t stream_seed(std::uint64_t seed, const std::string& check, const GridCell& cell, std::size_t index);

/// Random function on `space`: each class gets a + b * zeta^k with
/// a, b in [-q^2, q^2] and k in [0, p).
TraceFunction random_function(const GSpacePtr& space, std::uint64_t stream);

/// The inputs a check feeds through an identity: the delta basis of `space`
/// (indices 0..classes-1) followed by `random_count` random functions.
TraceFunction test_function(const GSpacePtr& space, std::uint64_t seed, const std::string& check, const GridCell& cell,
                            std::size_t index);

/// Random invertible r x r matrix over F_q drawn from the stream.
std::vector<std::vector<FieldElem>> random_invertible(const FieldCtx& field, std::size_t r, std::uint64_t stream);
/// Rank of a matrix over F_q.
std::size_t matrix_rank(const FieldCtx& field, std::vector<std::vector<FieldElem>> m);

struct CheckOptions {
  std::uint64_t seed = 20240611;
  std::size_t random_count = 100;
  long long bound = kDefaultSizeBound;
};

/// Runs one check at one cell; failures are results, not exceptions.
CheckResult run_check(const std::string& id, const GridCell& cell, const CheckOptions& options);

struct Report {
  GridSpec grid;
  std::vector<CheckResult> results;

  bool all_pass() const;
  std::size_t count(Status s) const;
};

Report run_suite(const GridSpec& grid);

// Report rendering (deterministic; timing only when asked for).
std::string format_text(const Report& report, bool timing = false);
std::string format_json(const Report& report, bool timing = false);
std::string format_csv(const Report& report, bool timing = false);

}  // namespace homfour
