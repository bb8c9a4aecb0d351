#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ldlat::verify {

struct Options {
  /// Largest rooted tree, i.e. |L| - 1.
  std::size_t max_nodes = 8;
  /// Only trees whose root has at least this many children. Suites whose
  /// hypotheses need a join-reducible top raise it to 2.
  std::size_t root_min_children = 0;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
};

struct SuiteResult {
  std::string suite;
  std::size_t instances = 0;
  std::size_t violations = 0;
  /// Lowest-indexed failing instance as DSL source, with a comment line
  /// describing the failure.
  std::optional<std::string> counterexample;

  bool passed() const { return violations == 0; }
};

/// t1, lift, corollary, diam, lemma400, thm704, ssc, block-confluence.
const std::vector<std::string>& suite_names();

/// "all" expands to every suite. Throws std::invalid_argument for an
/// unknown name.
std::vector<std::string> expand_suite(const std::string& name);

SuiteResult run_suite(const std::string& name, const Options& options);

/// zdg isomorphism decided from trees agrees with brute-force lattice
/// isomorphism, for every pair (L_i, shuffled copy of L_j).
SuiteResult check_t1(const Options& options);
/// align_adjuncts then lift_to_lattice_iso for every graph isomorphism of
/// G_0(L) onto G_0 of L and of a shuffled copy.
SuiteResult check_lift(const Options& options);
/// Brute-force isomorphism of non-ancestor graphs agrees with canonical
/// codes of the trees.
SuiteResult check_corollary(const Options& options);
/// Nonempty zero-divisor graphs are connected with diameter at most 3.
SuiteResult check_diam(const Options& options);
/// Nonzero x, y meet to 0 iff incomparable; |V| = |L| - 2 for adjunct tops.
SuiteResult check_lemma400(const Options& options);
/// Multipartite round trip for 2..4 parts of sizes 1..4.
SuiteResult check_thm704(const Options& options);
/// basic block is L, SSC, and singleton classes agree.
SuiteResult check_ssc(const Options& options);
/// Every deletion order reaches the same basic block.
SuiteResult check_block_confluence(const Options& options);

}  // namespace ldlat::verify
