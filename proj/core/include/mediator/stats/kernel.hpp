#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mediator::stats {

// Two equal-length measurement vectors with no missing values; pairing and
// filtering happen upstream.
struct PairedSample {
  std::vector<double> xs;
  std::vector<double> ys;
};

struct TwoGroupSample {
  std::vector<double> group_a;
  std::vector<double> group_b;
};

struct ResampleConfig {
  std::uint64_t seed = 0;
  long permutations = 10000;
  long bootstrap_reps = 2000;
  // Exact enumeration is used when the total assignment count (C(n,k) for
  // two-group statistics, n! for paired ones) is at most this.
  long exact_cutoff = 200000;
};

enum class PermutationStatistic { Auc, MeanDiff, SpearmanPaired, PearsonPaired };
enum class Alternative { Greater, TwoSided };

struct PermutationResult {
  double p = 1.0;
  std::string method;  // "exact" | "monte_carlo"
  long draws = 0;      // assignments enumerated or sampled
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// 1-based fractional ranks with mean ranks on ties. Shared by the rank
// statistics here and by percentile normalization in learner synthesis.
std::vector<double> fractional_ranks(const std::vector<double>& values);

// Pearson correlation of mean-tie-adjusted fractional ranks. Throws
// "degenerate ranking" if either vector has zero rank variance.
double spearman_rho(const PairedSample& sample);

// Product-moment correlation. Throws "degenerate sample" on zero variance.
double pearson_r(const PairedSample& sample);

// (mean_a - mean_b) / pooled sd, pooled with n_a + n_b - 2 denominator.
// Requires both groups of size >= 2 and nonzero pooled variance.
double cohens_d(const TwoGroupSample& sample);

// Mann-Whitney construction with group_a as the positive class:
// (#pairs a > b + 0.5 * #ties) / (n_a * n_b).
double rank_auc(const TwoGroupSample& sample);

// One-sided permutation p-value: the fraction of group-label assignments
// whose statistic is >= the observed one, counting the observed assignment.
// Exact enumeration when the assignment count fits under cfg.exact_cutoff,
// otherwise seeded Monte Carlo with the +1/(N+1) correction. The paired
// statistics treat group_a as xs and group_b as ys and permute ys.
PermutationResult permutation_p(const TwoGroupSample& sample, PermutationStatistic statistic,
                                const ResampleConfig& cfg,
                                Alternative alternative = Alternative::Greater);

// Percentile bootstrap interval for AUC over stratified resamples (each
// group resampled within itself), clamped to [0, 1].
Interval bootstrap_auc_ci(const TwoGroupSample& sample, double level, const ResampleConfig& cfg);

// |top-k(a) intersect top-k(b)| as id sets. Throws if k exceeds either list.
int top_k_overlap(const std::vector<std::string>& ranking_a,
                  const std::vector<std::string>& ranking_b, int k);

}  // namespace mediator::stats
