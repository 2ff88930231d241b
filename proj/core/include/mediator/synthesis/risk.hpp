#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mediator/engine/mediation.hpp"
#include "mediator/model/survey_items.hpp"
#include "mediator/model/types.hpp"

namespace mediator::synthesis {

using model::CohortDataset;
using model::LearnerId;
using model::TopicId;

struct ChannelWeights {
  double w_raw = 0.35;
  double w_help = 0.35;
  double w_refl = 0.30;

  bool operator==(const ChannelWeights&) const = default;
};

// Nonnegative, summing to 1 within 1e-9.
std::optional<std::string> check_channel_weights(const ChannelWeights& weights);

enum class Normalization { Percentile, MinMax };

struct SynthesisConfig {
  double sigma_threshold = 0.50;
  double channel_threshold = 0.75;
  ChannelWeights weights;
  Normalization normalization = Normalization::Percentile;
  // Raw help risk assigned to learners with zero help events: absence is
  // weaker evidence than unresolved attempts, so the default sits at the
  // midpoint.
  double absent_help_value = 0.5;
};

struct ChannelScores {
  double rho_raw = 0.0;
  double rho_help = 0.0;
  double rho_refl = 0.0;

  bool operator==(const ChannelScores&) const = default;
};

struct SkippedLearner {
  LearnerId learner;
  std::string reason;
};

struct ChannelComputation {
  std::map<LearnerId, ChannelScores> channels;
  std::vector<SkippedLearner> skipped;
};

struct LearnerRiskProfile {
  LearnerId learner;
  double rho_raw = 0.0;
  double rho_help = 0.0;
  double rho_refl = 0.0;
  double sigma = 0.0;
  bool flag_raw = false;
  bool flag_help = false;
  bool flag_refl = false;
  bool sigma_flag = false;
  bool isolated = false;

  bool any_channel_flag() const { return flag_raw || flag_help || flag_refl; }
};

struct SynthesisSummary {
  int included = 0;
  int isolated = 0;
  int jointly_identified = 0;  // sigma flag plus at least one channel flag
  int channel_only = 0;
  int unidentified = 0;
};

// Cohort-relative normalization of one channel. Percentile: Hazen mid-rank
// percentile (rank - 0.5) / n with mean ranks on ties, so a constant channel
// and a single-learner cohort both land on 0.5 exactly. MinMax: linear onto
// [0, 1], with a constant channel mapped to all 0.5.
std::vector<double> normalize_channel(const std::vector<double>& raw, Normalization scheme);

// Raw per-learner risk channels from the cohort records, then cohort-wide
// normalization. Learners without Q5 or without RTQ understanding/reflection
// responses are excluded and listed with a reason.
ChannelComputation compute_channels(const CohortDataset& data, const model::SurveyItemMap& items,
                                    const SynthesisConfig& cfg);

// sigma = w_raw * rho_raw + w_help * rho_help + w_refl * rho_refl.
double compute_sigma(const ChannelScores& channels, const ChannelWeights& weights);

// Thresholds channels and sigma, and marks learners isolated when sigma
// crosses its threshold while no single channel does. Sorted by descending
// sigma, ties by learner id.
std::vector<LearnerRiskProfile> classify_learners(const std::map<LearnerId, ChannelScores>& channels,
                                                  const SynthesisConfig& cfg);

SynthesisSummary summarize(const std::vector<LearnerRiskProfile>& profiles);

// Mean priority over the distinct topics of the learner's question records
// whose week falls in that learner's difficulty weeks; 0 without qualifying
// records. Scores exactly the learners present in difficulty_weeks.
std::map<LearnerId, double> compute_exposure_scores(
    const std::vector<engine::DecisionRecord>& records, const CohortDataset& data,
    const std::map<LearnerId, std::set<int>>& difficulty_weeks);

}  // namespace mediator::synthesis
