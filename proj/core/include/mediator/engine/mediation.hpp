#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mediator/signals/extract.hpp"

namespace mediator::engine {

using model::TopicId;
using signals::SurveyDifficulty;
using signals::TopicSignals;

// Named normalized weight triple over (prevalence, disagreement, friction).
struct WeightProfile {
  std::string name;
  double w_r = 0.0;
  double w_d = 0.0;
  double w_f = 0.0;

  bool operator==(const WeightProfile&) const = default;
};

// Nonnegative and summing to 1 within 1e-9; returns a message otherwise.
std::optional<std::string> check_weight_profile(const WeightProfile& profile);

// Scales the weights to sum to 1. Loaders call this only behind an explicit
// renormalize flag; out-of-tune profiles are rejected by default.
WeightProfile renormalized(WeightProfile profile);

// Per-topic audit object: inputs, weights, per-term contributions, score,
// rank, and free-text diagnostics.
struct DecisionRecord {
  TopicId topic;
  double prevalence_r = 0.0;
  double disagreement_d = 0.0;
  double friction_f = 0.0;
  bool survey_available = false;
  WeightProfile weights;
  double contribution_r = 0.0;
  double contribution_d = 0.0;
  double contribution_f = 0.0;
  double priority_p = 0.0;
  int rank = 0;
  std::vector<std::string> diagnostics;
};

struct SensitivityReport {
  std::string profile_a;
  std::string profile_b;
  double spearman_rho = 0.0;
  int k = 0;
  int overlap = 0;
  std::vector<TopicId> ranking_a;
  std::vector<TopicId> ranking_b;
};

// |R - s| when the survey value exists, 0 otherwise.
double compute_disagreement(double prevalence_r, const SurveyDifficulty& survey);

// P = w_r * R + w_d * D + w_f * F. Higher means greater priority.
double compute_priority(const TopicSignals& signals, double friction_f, const WeightProfile& w);

// Joins the extraction outputs into one TopicSignals row per topic (union of
// both key sets, ordered by topic id) with disagreement attached.
std::vector<TopicSignals> assemble_signals(
    const std::map<TopicId, double>& prevalence,
    const std::map<TopicId, SurveyDifficulty>& survey);

// Full ranking: descending priority, ties broken by higher prevalence and
// then topic id; ranks are 1..N. Throws on an empty topic list.
std::vector<DecisionRecord> rank_topics(const std::vector<TopicSignals>& all_signals,
                                        double friction_f, const WeightProfile& w);

// Derived ablation profile: w_d zeroed and the rest renormalized, so the
// default (0.70, 0.20, 0.10) becomes (0.875, 0, 0.125).
WeightProfile no_disagreement_ablation(const WeightProfile& base);

// Rank stability between the baseline profile (named "default" when present,
// else the first) and every other profile: Spearman rho between the two
// priority orderings plus top-k overlap. The baseline-vs-itself identity row
// comes first.
std::vector<SensitivityReport> sensitivity_sweep(const std::vector<TopicSignals>& all_signals,
                                                 double friction_f,
                                                 const std::vector<WeightProfile>& profiles,
                                                 int k);

}  // namespace mediator::engine
