#pragma once

#include <map>
#include <vector>

#include "mediator/model/survey_items.hpp"
#include "mediator/model/types.hpp"

namespace mediator::signals {

using model::CohortDataset;
using model::TopicId;

// A learner counts as having a gap on a topic once they have at least
// min_incorrect incorrect-labeled questions there. Unknown labels never count.
struct GapConfig {
  int min_incorrect = 1;
};

struct SurveyDifficulty {
  bool available = false;
  double s = 0.0;  // defined only when available

  bool operator==(const SurveyDifficulty&) const = default;
};

// Per-topic inputs to the priority score. disagreement_d is attached by the
// mediation engine; extraction leaves it zero.
struct TopicSignals {
  TopicId topic;
  double prevalence_r = 0.0;
  bool survey_available = false;
  double survey_difficulty_s = 0.0;
  double disagreement_d = 0.0;

  bool operator==(const TopicSignals&) const = default;
};

struct FrictionSummary {
  int friction_count = 0;
  int total_count = 0;
  double friction_f = 0.0;

  bool operator==(const FrictionSummary&) const = default;
};

// Fraction of trace-population learners (those with >= 1 question record)
// showing a gap on each graph topic. Topics without evidence map to 0.
// Throws when the trace population is empty: prevalence is then undefined.
std::map<TopicId, double> compute_gap_prevalence(const CohortDataset& data, const GapConfig& cfg);

// Per-topic self-reported difficulty from Q5 items: the mean response is
// inverted linearly onto [0, 1] using the item's declared scale, so a 1-6
// understanding scale gives s = (6 - mean) / 5. Topics without a Q5 item or
// without responses come back unavailable.
std::map<TopicId, SurveyDifficulty> compute_survey_difficulty(const CohortDataset& data,
                                                              const model::SurveyItemMap& items);

// F = friction segments / all segments. Throws on an empty segment list
// rather than silently reporting zero friction.
FrictionSummary compute_friction(const std::vector<model::CodedSegment>& segments);

}  // namespace mediator::signals
