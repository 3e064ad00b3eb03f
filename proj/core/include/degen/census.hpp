#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degen/common.hpp"
#include "degen/poly.hpp"

namespace degen {

/// Enumeration box and execution knobs for one census run.
struct CensusConfig {
  int n = 2;                     // degree, >= 2
  long long h_max = 1;           // height bound, >= 1
  Variant variant = Variant::monic;
  bool split = false;            // also split D into I and R (requires n <= 4)
  bool prefilter = true;         // numeric modulus-gap screen before exact work
  OrderMode order_mode = OrderMode::safe;
  int threads = 1;
  std::optional<std::string> checkpoint_path;
};

/// Cumulative tallies at one height H.  wall_ms is the measured wall time of
/// the producing run (identical for every record of a run); it is carried in
/// JSON output but left empty in CSV, which is byte-deterministic.
struct CountRecord {
  Variant variant = Variant::monic;
  int n = 0;
  long long H = 0;
  unsigned long long total = 0;
  unsigned long long degenerate = 0;
  std::optional<unsigned long long> irr_degenerate;
  std::optional<unsigned long long> red_degenerate;
  double wall_ms = 0.0;
};

/// One partition of the box: the leading free coefficient is fixed
/// (a_1 for the monic variant, a_0 for the general variant).
struct SubBox {
  long long id = 0;
  long long first_coeff = 0;
};

/// Throws std::invalid_argument when the configuration is unusable
/// (n outside 2..8, h_max outside 1..2'000'000, split with n > 4, ...).
void validate_config(const CensusConfig& cfg);

/// Deterministic disjoint partitions covering the whole box, one per value
/// of the leading free coefficient.
std::vector<SubBox> partition_box(const CensusConfig& cfg);

/// Per-partition histograms over the defining height h in [0, h_max].
struct Tally {
  long long h_max = 0;
  bool split = false;
  std::vector<unsigned long long> total;
  std::vector<unsigned long long> degenerate;
  std::vector<unsigned long long> irr;
  std::vector<unsigned long long> red;
  std::vector<long long> partition_ids;  // sorted, disjoint across merges

  static Tally zero(long long h_max, bool split);
};

/// Pointwise sum; associative and commutative.  Throws on overlapping
/// partition ids.
Tally merge(const Tally& a, const Tally& b);

/// Enumerates every polynomial of the configured box exactly once,
/// classifies it, and returns cumulative records for H = 1..h_max.  For the
/// general variant only a_0 >= 1 is enumerated and all counts are doubled
/// (f -> -f is a fixed-point-free height- and class-preserving involution).
/// Deterministic for any thread count; per-partition checkpointing with
/// resume when checkpoint_path is set.
std::vector<CountRecord> run_census(const CensusConfig& cfg);

/// CSV with the exact column set
/// variant,n,H,total,degenerate,irr_degenerate,red_degenerate,wall_ms
/// one row per H ascending; irr/red cells empty when not split, wall_ms
/// always empty (kept deterministic on purpose).
std::string records_to_csv(const std::vector<CountRecord>& records);

/// First line written to a checkpoint file; resuming requires an exact match.
std::string checkpoint_config_echo(const CensusConfig& cfg);

}  // namespace degen
