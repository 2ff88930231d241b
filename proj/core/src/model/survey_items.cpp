#include "mediator/model/survey_items.hpp"

#include "mediator/error.hpp"

namespace mediator::model {

std::vector<std::string> SurveyItemMap::items_for(Construct construct) const {
  std::vector<std::string> ids;
  for (const auto& [id, item] : entries) {
    if (item.construct == construct) ids.push_back(id);
  }
  return ids;
}

const char* to_string(Construct construct) {
  switch (construct) {
    case Construct::Q5Topic:
      return "Q5_topic";
    case Construct::HelpSeeking:
      return "help_seeking";
    case Construct::SelfEfficacy:
      return "self_efficacy";
    case Construct::RtqUnderstanding:
      return "rtq_understanding";
    case Construct::RtqReflection:
      return "rtq_reflection";
    case Construct::RtqCriticalReflection:
      return "rtq_critical_reflection";
    case Construct::RtqOther:
      return "rtq_other";
    case Construct::OpenFeedback:
      return "open_feedback";
  }
  return "open_feedback";
}

Construct construct_from_string(const std::string& text) {
  if (text == "Q5_topic") return Construct::Q5Topic;
  if (text == "help_seeking") return Construct::HelpSeeking;
  if (text == "self_efficacy") return Construct::SelfEfficacy;
  if (text == "rtq_understanding") return Construct::RtqUnderstanding;
  if (text == "rtq_reflection") return Construct::RtqReflection;
  if (text == "rtq_critical_reflection") return Construct::RtqCriticalReflection;
  if (text == "rtq_other") return Construct::RtqOther;
  if (text == "open_feedback") return Construct::OpenFeedback;
  throw Error("unrecognized survey construct '" + text + "'");
}

}  // namespace mediator::model
