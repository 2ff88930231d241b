#include "mediator/stats/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "mediator/error.hpp"
#include "mediator/stats/rng.hpp"

namespace mediator::stats {

namespace {

double mean(const std::vector<double>& values) {
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

// C(n, k) capped at `cap`; returns cap + 1 once the count exceeds it.
long long binomial_capped(std::size_t n, std::size_t k, long long cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __int128 result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * static_cast<__int128>(n - k + i) / static_cast<__int128>(i);
    if (result > cap) return cap + 1;
  }
  return static_cast<long long>(result);
}

long long factorial_capped(std::size_t n, long long cap) {
  __int128 result = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    result *= static_cast<__int128>(i);
    if (result > cap) return cap + 1;
  }
  return static_cast<long long>(result);
}

// Advances idx (strictly increasing positions into [0, n)) to the next
// combination in lexicographic order; false once exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

double two_group_statistic(PermutationStatistic statistic, const TwoGroupSample& sample) {
  switch (statistic) {
    case PermutationStatistic::Auc:
      return rank_auc(sample);
    case PermutationStatistic::MeanDiff:
      return mean(sample.group_a) - mean(sample.group_b);
    case PermutationStatistic::SpearmanPaired:
      return spearman_rho({sample.group_a, sample.group_b});
    case PermutationStatistic::PearsonPaired:
      return pearson_r({sample.group_a, sample.group_b});
  }
  throw Error("unknown permutation statistic");
}

double effect(PermutationStatistic statistic, double value) {
  // Recentered magnitude for the two-sided alternative.
  if (statistic == PermutationStatistic::Auc) return std::abs(value - 0.5);
  return std::abs(value);
}

bool is_paired(PermutationStatistic statistic) {
  return statistic == PermutationStatistic::SpearmanPaired ||
         statistic == PermutationStatistic::PearsonPaired;
}

}  // namespace

std::vector<double> fractional_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&values](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // positions i..j (0-based) share the mean of ranks i+1..j+1
    const double shared = static_cast<double>(i + j) / 2.0 + 1.0;
    for (std::size_t p = i; p <= j; ++p) ranks[order[p]] = shared;
    i = j + 1;
  }
  return ranks;
}

double pearson_r(const PairedSample& sample) {
  if (sample.xs.size() != sample.ys.size()) throw Error("paired sample length mismatch");
  const std::size_t n = sample.xs.size();
  if (n < 2) throw Error("paired sample needs n >= 2");

  const double mx = mean(sample.xs);
  const double my = mean(sample.ys);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = sample.xs[i] - mx;
    const double dy = sample.ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw Error("degenerate sample");
  return sxy / std::sqrt(sxx * syy);
}

double spearman_rho(const PairedSample& sample) {
  if (sample.xs.size() != sample.ys.size()) throw Error("paired sample length mismatch");
  if (sample.xs.size() < 2) throw Error("paired sample needs n >= 2");
  const auto rx = fractional_ranks(sample.xs);
  const auto ry = fractional_ranks(sample.ys);
  try {
    return pearson_r({rx, ry});
  } catch (const Error&) {
    throw Error("degenerate ranking");
  }
}

double cohens_d(const TwoGroupSample& sample) {
  const std::size_t na = sample.group_a.size();
  const std::size_t nb = sample.group_b.size();
  if (na < 2 || nb < 2) throw Error("cohens_d needs both groups of size >= 2");
  const double ma = mean(sample.group_a);
  const double mb = mean(sample.group_b);
  double ssa = 0.0, ssb = 0.0;
  for (double v : sample.group_a) ssa += (v - ma) * (v - ma);
  for (double v : sample.group_b) ssb += (v - mb) * (v - mb);
  const double pooled_var = (ssa + ssb) / static_cast<double>(na + nb - 2);
  if (pooled_var == 0.0) throw Error("degenerate sample");
  return (ma - mb) / std::sqrt(pooled_var);
}

double rank_auc(const TwoGroupSample& sample) {
  const std::size_t na = sample.group_a.size();
  const std::size_t nb = sample.group_b.size();
  if (na == 0 || nb == 0) throw Error("rank_auc needs both groups nonempty");

  std::vector<double> pooled;
  pooled.reserve(na + nb);
  pooled.insert(pooled.end(), sample.group_a.begin(), sample.group_a.end());
  pooled.insert(pooled.end(), sample.group_b.begin(), sample.group_b.end());
  const auto ranks = fractional_ranks(pooled);

  double rank_sum_a = 0.0;
  for (std::size_t i = 0; i < na; ++i) rank_sum_a += ranks[i];
  const double u = rank_sum_a - static_cast<double>(na) * static_cast<double>(na + 1) / 2.0;
  return u / (static_cast<double>(na) * static_cast<double>(nb));
}

PermutationResult permutation_p(const TwoGroupSample& sample, PermutationStatistic statistic,
                                const ResampleConfig& cfg, Alternative alternative) {
  const std::size_t na = sample.group_a.size();
  const std::size_t nb = sample.group_b.size();
  if (na == 0 || nb == 0) throw Error("permutation_p needs both groups nonempty");
  if (is_paired(statistic) && na != nb) {
    throw Error("paired permutation statistic needs equal-length vectors");
  }
  if (cfg.permutations < 1) throw Error("resample config: permutations must be positive");

  const double observed = two_group_statistic(statistic, sample);
  const double observed_effect = effect(statistic, observed);
  auto meets = [&](double value) {
    return alternative == Alternative::Greater ? value >= observed
                                               : effect(statistic, value) >= observed_effect;
  };

  PermutationResult result;

  if (is_paired(statistic)) {
    // Relabelings permute ys against fixed xs.
    const long long total = factorial_capped(na, cfg.exact_cutoff);
    if (total <= cfg.exact_cutoff) {
      std::vector<std::size_t> perm(na);
      std::iota(perm.begin(), perm.end(), 0);
      long long count = 0;
      long long seen = 0;
      std::vector<double> ys(na);
      do {
        for (std::size_t i = 0; i < na; ++i) ys[i] = sample.group_b[perm[i]];
        if (meets(two_group_statistic(statistic, {sample.group_a, ys}))) ++count;
        ++seen;
      } while (std::next_permutation(perm.begin(), perm.end()));
      result.p = static_cast<double>(count) / static_cast<double>(seen);
      result.method = "exact";
      result.draws = seen;
      return result;
    }
    Rng rng(cfg.seed);
    long long count = 0;
    std::vector<double> ys = sample.group_b;
    for (long long rep = 0; rep < cfg.permutations; ++rep) {
      rng.shuffle(ys);
      if (meets(two_group_statistic(statistic, {sample.group_a, ys}))) ++count;
    }
    result.p = static_cast<double>(count + 1) / static_cast<double>(cfg.permutations + 1);
    result.method = "monte_carlo";
    result.draws = cfg.permutations;
    return result;
  }

  std::vector<double> pooled;
  pooled.reserve(na + nb);
  pooled.insert(pooled.end(), sample.group_a.begin(), sample.group_a.end());
  pooled.insert(pooled.end(), sample.group_b.begin(), sample.group_b.end());
  const std::size_t n = pooled.size();

  const long long total = binomial_capped(n, na, cfg.exact_cutoff);
  if (total <= cfg.exact_cutoff) {
    // Enumerate every assignment of pooled values to group a. The identity
    // combination {0..na-1} reproduces the observed grouping, so the
    // observed assignment is counted by construction.
    std::vector<std::size_t> idx(na);
    std::iota(idx.begin(), idx.end(), 0);
    long long count = 0;
    long long seen = 0;
    std::vector<bool> in_a(n);
    std::vector<double> a(na), b(nb);
    do {
      std::fill(in_a.begin(), in_a.end(), false);
      for (std::size_t i : idx) in_a[i] = true;
      std::size_t ai = 0, bi = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (in_a[i]) {
          a[ai++] = pooled[i];
        } else {
          b[bi++] = pooled[i];
        }
      }
      if (meets(two_group_statistic(statistic, {a, b}))) ++count;
      ++seen;
    } while (next_combination(idx, n));
    result.p = static_cast<double>(count) / static_cast<double>(seen);
    result.method = "exact";
    result.draws = seen;
    return result;
  }

  Rng rng(cfg.seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  long long count = 0;
  std::vector<double> a(na), b(nb);
  for (long long rep = 0; rep < cfg.permutations; ++rep) {
    rng.shuffle(order);
    for (std::size_t i = 0; i < na; ++i) a[i] = pooled[order[i]];
    for (std::size_t i = 0; i < nb; ++i) b[i] = pooled[order[na + i]];
    if (meets(two_group_statistic(statistic, {a, b}))) ++count;
  }
  result.p = static_cast<double>(count + 1) / static_cast<double>(cfg.permutations + 1);
  result.method = "monte_carlo";
  result.draws = cfg.permutations;
  return result;
}

Interval bootstrap_auc_ci(const TwoGroupSample& sample, double level, const ResampleConfig& cfg) {
  const std::size_t na = sample.group_a.size();
  const std::size_t nb = sample.group_b.size();
  if (na == 0 || nb == 0) throw Error("bootstrap_auc_ci needs both groups nonempty");
  if (!(level > 0.0 && level < 1.0)) throw Error("bootstrap level must lie in (0, 1)");
  if (cfg.bootstrap_reps < 1) throw Error("resample config: bootstrap_reps must be positive");

  Rng rng(cfg.seed);
  std::vector<double> stats;
  stats.reserve(static_cast<std::size_t>(cfg.bootstrap_reps));
  std::vector<double> a(na), b(nb);
  for (long long rep = 0; rep < cfg.bootstrap_reps; ++rep) {
    for (std::size_t i = 0; i < na; ++i) a[i] = sample.group_a[rng.uniform_index(na)];
    for (std::size_t i = 0; i < nb; ++i) b[i] = sample.group_b[rng.uniform_index(nb)];
    stats.push_back(rank_auc({a, b}));
  }
  std::sort(stats.begin(), stats.end());

  // Linearly interpolated percentile (the R type-7 / numpy default rule).
  auto quantile = [&stats](double q) {
    const double pos = q * static_cast<double>(stats.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= stats.size()) return stats.back();
    return stats[lo] + frac * (stats[lo + 1] - stats[lo]);
  };
  const double alpha = (1.0 - level) / 2.0;
  Interval ci{quantile(alpha), quantile(1.0 - alpha)};
  ci.lo = std::clamp(ci.lo, 0.0, 1.0);
  ci.hi = std::clamp(ci.hi, 0.0, 1.0);
  return ci;
}

int top_k_overlap(const std::vector<std::string>& ranking_a,
                  const std::vector<std::string>& ranking_b, int k) {
  if (k < 0) throw Error("top_k_overlap: k must be nonnegative");
  if (static_cast<std::size_t>(k) > ranking_a.size() ||
      static_cast<std::size_t>(k) > ranking_b.size()) {
    throw Error("top_k_overlap: k exceeds a ranking length");
  }
  std::set<std::string> top_a(ranking_a.begin(), ranking_a.begin() + k);
  int overlap = 0;
  for (int i = 0; i < k; ++i) {
    if (top_a.count(ranking_b[static_cast<std::size_t>(i)]) > 0) ++overlap;
  }
  return overlap;
}

}  // namespace mediator::stats
