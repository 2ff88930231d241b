#include "mediator/synthesis/risk.hpp"

#include <algorithm>
#include <cmath>

#include "mediator/error.hpp"
#include "mediator/stats/kernel.hpp"

namespace mediator::synthesis {

std::optional<std::string> check_channel_weights(const ChannelWeights& weights) {
  if (weights.w_raw < 0.0 || weights.w_help < 0.0 || weights.w_refl < 0.0) {
    return std::string("channel weights must be nonnegative");
  }
  const double sum = weights.w_raw + weights.w_help + weights.w_refl;
  if (std::abs(sum - 1.0) > 1e-9) {
    return "channel weights sum to " + std::to_string(sum) + ", expected 1";
  }
  return std::nullopt;
}

std::vector<double> normalize_channel(const std::vector<double>& raw, Normalization scheme) {
  const std::size_t n = raw.size();
  if (n == 0) return {};
  std::vector<double> out(n, 0.5);
  if (scheme == Normalization::Percentile) {
    const auto ranks = stats::fractional_ranks(raw);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = (ranks[i] - 0.5) / static_cast<double>(n);
    }
    return out;
  }
  const auto [lo_it, hi_it] = std::minmax_element(raw.begin(), raw.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (hi == lo) return out;  // constant channel
  for (std::size_t i = 0; i < n; ++i) out[i] = (raw[i] - lo) / (hi - lo);
  return out;
}

namespace {

// Mean response inverted onto [0, 1] risk using each item's declared scale:
// value at scale_max means zero risk.
struct InvertedMean {
  double sum = 0.0;
  int count = 0;

  void add(int value, int scale_min, int scale_max) {
    sum += (static_cast<double>(scale_max) - static_cast<double>(value)) /
           static_cast<double>(scale_max - scale_min);
    count += 1;
  }
  double value() const { return sum / static_cast<double>(count); }
};

}  // namespace

ChannelComputation compute_channels(const CohortDataset& data, const model::SurveyItemMap& items,
                                    const SynthesisConfig& cfg) {
  if (auto problem = check_channel_weights(cfg.weights)) throw Error(*problem);

  struct RawState {
    InvertedMean understanding;
    InvertedMean reflection;
    int help_total = 0;
    int help_unresolved = 0;
    bool any_survey = false;
  };
  std::map<LearnerId, RawState> state;
  for (const auto& learner : data.learners) state[learner];

  for (const auto& response : data.survey_responses) {
    const auto* item = items.find(response.item);
    if (item == nullptr) continue;
    auto& row = state[response.learner];
    row.any_survey = true;
    switch (item->construct) {
      case model::Construct::Q5Topic:
        row.understanding.add(response.value, item->scale_min, item->scale_max);
        break;
      case model::Construct::RtqUnderstanding:
      case model::Construct::RtqReflection:
        row.reflection.add(response.value, item->scale_min, item->scale_max);
        break;
      default:
        break;
    }
  }
  for (const auto& event : data.help_events) {
    auto& row = state[event.learner];
    row.help_total += 1;
    if (!event.resolved) row.help_unresolved += 1;
  }

  ChannelComputation result;
  std::vector<LearnerId> included;
  std::vector<double> raw_understanding, raw_help, raw_reflection;
  for (const auto& [learner, row] : state) {
    if (!row.any_survey) {
      result.skipped.push_back({learner, "no survey data"});
      continue;
    }
    if (row.understanding.count == 0) {
      result.skipped.push_back({learner, "no topic-understanding (Q5) responses"});
      continue;
    }
    if (row.reflection.count == 0) {
      result.skipped.push_back({learner, "no RTQ understanding/reflection responses"});
      continue;
    }
    included.push_back(learner);
    raw_understanding.push_back(row.understanding.value());
    raw_help.push_back(row.help_total == 0
                           ? cfg.absent_help_value
                           : static_cast<double>(row.help_unresolved) /
                                 static_cast<double>(row.help_total));
    raw_reflection.push_back(row.reflection.value());
  }

  const auto norm_understanding = normalize_channel(raw_understanding, cfg.normalization);
  const auto norm_help = normalize_channel(raw_help, cfg.normalization);
  const auto norm_reflection = normalize_channel(raw_reflection, cfg.normalization);
  for (std::size_t i = 0; i < included.size(); ++i) {
    result.channels[included[i]] =
        ChannelScores{norm_understanding[i], norm_help[i], norm_reflection[i]};
  }
  return result;
}

double compute_sigma(const ChannelScores& channels, const ChannelWeights& weights) {
  return weights.w_raw * channels.rho_raw + weights.w_help * channels.rho_help +
         weights.w_refl * channels.rho_refl;
}

std::vector<LearnerRiskProfile> classify_learners(
    const std::map<LearnerId, ChannelScores>& channels, const SynthesisConfig& cfg) {
  if (auto problem = check_channel_weights(cfg.weights)) throw Error(*problem);

  std::vector<LearnerRiskProfile> profiles;
  profiles.reserve(channels.size());
  for (const auto& [learner, scores] : channels) {
    LearnerRiskProfile profile;
    profile.learner = learner;
    profile.rho_raw = scores.rho_raw;
    profile.rho_help = scores.rho_help;
    profile.rho_refl = scores.rho_refl;
    profile.sigma = compute_sigma(scores, cfg.weights);
    profile.flag_raw = scores.rho_raw >= cfg.channel_threshold;
    profile.flag_help = scores.rho_help >= cfg.channel_threshold;
    profile.flag_refl = scores.rho_refl >= cfg.channel_threshold;
    profile.sigma_flag = profile.sigma >= cfg.sigma_threshold;
    profile.isolated = profile.sigma_flag && !profile.any_channel_flag();
    profiles.push_back(std::move(profile));
  }
  std::sort(profiles.begin(), profiles.end(),
            [](const LearnerRiskProfile& a, const LearnerRiskProfile& b) {
              if (a.sigma != b.sigma) return a.sigma > b.sigma;
              return a.learner < b.learner;
            });
  return profiles;
}

SynthesisSummary summarize(const std::vector<LearnerRiskProfile>& profiles) {
  SynthesisSummary summary;
  summary.included = static_cast<int>(profiles.size());
  for (const auto& profile : profiles) {
    if (profile.sigma_flag && !profile.any_channel_flag()) {
      ++summary.isolated;
    } else if (profile.sigma_flag) {
      ++summary.jointly_identified;
    } else if (profile.any_channel_flag()) {
      ++summary.channel_only;
    } else {
      ++summary.unidentified;
    }
  }
  return summary;
}

std::map<LearnerId, double> compute_exposure_scores(
    const std::vector<engine::DecisionRecord>& records, const CohortDataset& data,
    const std::map<LearnerId, std::set<int>>& difficulty_weeks) {
  std::map<TopicId, double> priority_of;
  for (const auto& record : records) priority_of[record.topic] = record.priority_p;

  // learner -> distinct topics touched during that learner's difficulty weeks
  std::map<LearnerId, std::set<TopicId>> touched;
  for (const auto& record : data.question_records) {
    auto it = difficulty_weeks.find(record.learner);
    if (it == difficulty_weeks.end()) continue;
    if (it->second.count(record.week) == 0) continue;
    touched[record.learner].insert(record.topic);
  }

  std::map<LearnerId, double> exposure;
  for (const auto& [learner, weeks] : difficulty_weeks) {
    auto it = touched.find(learner);
    if (it == touched.end() || it->second.empty()) {
      exposure[learner] = 0.0;
      continue;
    }
    double sum = 0.0;
    int counted = 0;
    for (const auto& topic : it->second) {
      auto pit = priority_of.find(topic);
      if (pit == priority_of.end()) {
        throw Error("exposure: topic '" + topic + "' missing from the ranking");
      }
      sum += pit->second;
      ++counted;
    }
    exposure[learner] = sum / static_cast<double>(counted);
  }
  return exposure;
}

}  // namespace mediator::synthesis
