#include "mediator/signals/extract.hpp"

#include <algorithm>
#include <set>

#include "mediator/error.hpp"

namespace mediator::signals {

std::map<TopicId, double> compute_gap_prevalence(const CohortDataset& data, const GapConfig& cfg) {
  if (cfg.min_incorrect < 1) throw Error("gap config: min_incorrect must be >= 1");

  std::set<model::LearnerId> trace_population;
  for (const auto& record : data.question_records) trace_population.insert(record.learner);
  if (trace_population.empty()) throw Error("no trace learners: gap prevalence is undefined");

  // (topic, learner) -> incorrect count
  std::map<TopicId, std::map<model::LearnerId, int>> incorrect;
  for (const auto& record : data.question_records) {
    if (record.label == model::QuestionLabel::Incorrect) {
      ++incorrect[record.topic][record.learner];
    }
  }

  const double denominator = static_cast<double>(trace_population.size());
  std::map<TopicId, double> prevalence;
  for (const auto& [topic, name] : data.graph.topics) prevalence[topic] = 0.0;
  for (const auto& [topic, counts] : incorrect) {
    int gap_learners = 0;
    for (const auto& [learner, count] : counts) {
      if (count >= cfg.min_incorrect) ++gap_learners;
    }
    prevalence[topic] = static_cast<double>(gap_learners) / denominator;
  }
  return prevalence;
}

std::map<TopicId, SurveyDifficulty> compute_survey_difficulty(const CohortDataset& data,
                                                              const model::SurveyItemMap& items) {
  // item id -> owning topic, for Q5 items only
  std::map<std::string, TopicId> topic_of;
  for (const auto& [item_id, item] : items.entries) {
    if (item.construct == model::Construct::Q5Topic && item.topic.has_value()) {
      topic_of[item_id] = *item.topic;
    }
  }

  struct Accumulator {
    double sum = 0.0;
    int count = 0;
  };
  std::map<TopicId, Accumulator> sums;
  for (const auto& response : data.survey_responses) {
    auto it = topic_of.find(response.item);
    if (it == topic_of.end()) continue;
    auto& acc = sums[it->second];
    acc.sum += static_cast<double>(response.value);
    acc.count += 1;
  }

  std::map<TopicId, SurveyDifficulty> out;
  for (const auto& [topic, name] : data.graph.topics) out[topic] = SurveyDifficulty{};
  for (const auto& [topic, acc] : sums) {
    if (acc.count == 0) continue;
    // Scale bounds are shared across the topic's Q5 items.
    int scale_min = 1;
    int scale_max = 6;
    for (const auto& [item_id, owner] : topic_of) {
      if (owner == topic) {
        if (const auto* item = items.find(item_id)) {
          scale_min = item->scale_min;
          scale_max = item->scale_max;
        }
        break;
      }
    }
    const double mean = acc.sum / static_cast<double>(acc.count);
    const double span = static_cast<double>(scale_max - scale_min);
    double s = (static_cast<double>(scale_max) - mean) / span;
    s = std::clamp(s, 0.0, 1.0);
    out[topic] = SurveyDifficulty{true, s};
  }
  return out;
}

FrictionSummary compute_friction(const std::vector<model::CodedSegment>& segments) {
  if (segments.empty()) throw Error("no coded segments: friction is undefined");
  FrictionSummary summary;
  summary.total_count = static_cast<int>(segments.size());
  for (const auto& segment : segments) {
    if (segment.is_friction) ++summary.friction_count;
  }
  summary.friction_f =
      static_cast<double>(summary.friction_count) / static_cast<double>(summary.total_count);
  return summary;
}

}  // namespace mediator::signals
