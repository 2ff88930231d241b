#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mediator/model/types.hpp"

namespace mediator::model {

// Survey constructs the pipeline understands. Q5 items are topic-scoped
// understanding ratings; the rest are learner-level scales.
enum class Construct {
  Q5Topic,
  HelpSeeking,
  SelfEfficacy,
  RtqUnderstanding,
  RtqReflection,
  RtqCriticalReflection,
  RtqOther,
  OpenFeedback,
};

struct SurveyItem {
  Construct construct = Construct::OpenFeedback;
  std::optional<TopicId> topic;  // present iff construct == Q5Topic
  int scale_min = 1;
  int scale_max = 6;

  bool operator==(const SurveyItem&) const = default;
};

// Item id -> construct binding for one survey instrument.
struct SurveyItemMap {
  std::map<std::string, SurveyItem> entries;

  const SurveyItem* find(const std::string& item_id) const {
    auto it = entries.find(item_id);
    return it == entries.end() ? nullptr : &it->second;
  }

  // Item ids bound to a construct, in map (lexicographic) order.
  std::vector<std::string> items_for(Construct construct) const;

  bool operator==(const SurveyItemMap&) const = default;
};

const char* to_string(Construct construct);
Construct construct_from_string(const std::string& text);

}  // namespace mediator::model
