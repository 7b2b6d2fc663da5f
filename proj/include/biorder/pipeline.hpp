#ifndef BIORDER_PIPELINE_HPP
#define BIORDER_PIPELINE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "biorder/axioms.hpp"
#include "biorder/bioset.hpp"
#include "biorder/lattice.hpp"
#include "biorder/report.hpp"
#include "biorder/ring.hpp"
#include "biorder/semigroup.hpp"
#include "biorder/sequences.hpp"

namespace biorder {

struct RingSpec {
  enum class Source { gf_matrix, z_mod, table_file, order_file };
  Source source = Source::gf_matrix;
  int n = 2;
  std::uint32_t q = 2;
  std::uint32_t m = 6;
  std::string file;
  std::uint64_t max_order = RingTable::kDefaultMaxOrder;

  nlohmann::json echo() const;
};

// One verification run. The seed fully determines every sampled check, and
// two runs with the same config produce byte-identical reports (timings stay
// off the report unless explicitly requested, because wall-clock values are
// not reproducible).
struct RunConfig {
  RingSpec ring;
  std::vector<std::string> checks = {"all"};
  std::vector<std::string> axiom_filter;  // subset of e1,e2,e2dual,e3
  enum class Budget { auto_select, full, sampled };
  Budget budget = Budget::auto_select;
  std::uint64_t seed = 1;
  std::vector<std::uint32_t> basis;  // defaults to matrix units on gf rings
  bool timings = false;
  std::string out_path;  // empty: stdout

  nlohmann::json echo() const;
};

// Structures for one ingested input, built in dependency order. Everything
// is immutable once built; later stages hold references into earlier ones,
// so the workbench must outlive anything it hands out.
class Workbench {
 public:
  explicit Workbench(const RingSpec& spec);

  bool has_ring() const { return ring_.has_value(); }
  bool has_order_only() const { return raw_order_.has_value(); }
  const RingTable& ring() const { return *ring_; }
  const FiniteSemigroup& semigroup() const { return *semigroup_; }
  const BiorderedSet& bioset();
  const ComplementMap* complement();  // null when no ring backs the input
  const QuotientLattice& lattice(Side side);
  const QuotientLattice& raw_order() const { return *raw_order_; }
  const ESequenceGraph& esequence_graph();
  const DistanceTable& distances();
  const RegularityResult& regularity();

 private:
  std::optional<RingTable> ring_;
  std::optional<FiniteSemigroup> semigroup_;
  std::optional<BiorderedSet> bioset_;
  std::optional<ComplementMap> cmap_;
  bool cmap_tried_ = false;
  std::optional<QuotientLattice> left_, right_, raw_order_;
  std::optional<ESequenceGraph> graph_;
  std::optional<DistanceTable> dist_;
  std::optional<RegularityResult> regularity_;
};

// Runs the configured checks and assembles the report. Throws ConfigError /
// ResourceError for unusable configs.
VerificationReport run_checks(const RunConfig& config);

// CLI entry points. Exit codes: 0 all pass, 1 check failure, 2 config error,
// 3 resource budget exceeded.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_export(const RunConfig& config, const std::string& what,
               const std::string& format, std::ostream& out,
               std::ostream& log);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& log);

}  // namespace biorder

#endif  // BIORDER_PIPELINE_HPP
