#include "mediator/model/validate.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace mediator::model {

std::string Violation::describe() const {
  std::ostringstream out;
  out << collection;
  if (index >= 0) out << "[" << index << "]";
  out << ": " << message;
  return out.str();
}

std::string ValidationResult::describe() const {
  std::ostringstream out;
  for (const auto& v : violations) out << v.describe() << "\n";
  return out.str();
}

namespace {

void check_week(const std::vector<int>& weeks, int week, const char* collection,
                std::ptrdiff_t index, std::vector<Violation>& out) {
  if (std::find(weeks.begin(), weeks.end(), week) == weeks.end()) {
    out.push_back({collection, index,
                   "week " + std::to_string(week) + " outside the declared week range"});
  }
}

void check_learner(const std::set<LearnerId>& learners, const LearnerId& learner,
                   const char* collection, std::ptrdiff_t index, std::vector<Violation>& out) {
  if (learners.find(learner) == learners.end()) {
    out.push_back({collection, index, "unknown learner '" + learner + "'"});
  }
}

}  // namespace

ValidationResult validate_graph(const KnowledgeGraph& graph) {
  ValidationResult result;

  for (const auto& [id, name] : graph.topics) {
    if (id.empty()) {
      result.violations.push_back({"graph", -1, "topic with empty id (name '" + name + "')"});
    }
  }

  bool endpoints_ok = true;
  for (const auto& [from, to] : graph.prerequisites) {
    if (!graph.has_topic(from)) {
      result.violations.push_back(
          {"graph", -1, "edge (" + from + " -> " + to + ") references unknown topic '" + from + "'"});
      endpoints_ok = false;
    }
    if (!graph.has_topic(to)) {
      result.violations.push_back(
          {"graph", -1, "edge (" + from + " -> " + to + ") references unknown topic '" + to + "'"});
      endpoints_ok = false;
    }
    if (from == to) {
      result.violations.push_back({"graph", -1, "self-loop on topic '" + from + "'"});
    }
  }

  // Kahn's algorithm over the well-formed edges; whatever cannot be
  // topologically ordered is part of a cycle.
  if (endpoints_ok) {
    std::map<TopicId, int> in_degree;
    std::map<TopicId, std::vector<TopicId>> adjacent;
    for (const auto& [id, name] : graph.topics) in_degree[id] = 0;
    for (const auto& [from, to] : graph.prerequisites) {
      if (from == to) continue;
      adjacent[from].push_back(to);
      ++in_degree[to];
    }
    std::deque<TopicId> ready;
    for (const auto& [id, degree] : in_degree) {
      if (degree == 0) ready.push_back(id);
    }
    std::size_t ordered = 0;
    while (!ready.empty()) {
      TopicId id = ready.front();
      ready.pop_front();
      ++ordered;
      for (const auto& next : adjacent[id]) {
        if (--in_degree[next] == 0) ready.push_back(next);
      }
    }
    if (ordered < graph.topics.size()) {
      std::string members;
      for (const auto& [id, degree] : in_degree) {
        if (degree > 0) {
          if (!members.empty()) members += ", ";
          members += id;
        }
      }
      result.violations.push_back(
          {"graph", -1, "prerequisite cycle involving topics {" + members + "}"});
    }
  }

  return result;
}

ValidationResult validate_cohort(const CohortDataset& data, const SurveyItemMap& items,
                                 const Codebook& codebook) {
  ValidationResult result;
  auto& out = result.violations;

  for (const auto& learner : data.learners) {
    if (learner.empty()) out.push_back({"learners", -1, "empty learner id"});
  }

  for (std::size_t i = 0; i < data.weeks.size(); ++i) {
    if (data.weeks[i] < 1) {
      out.push_back({"weeks", static_cast<std::ptrdiff_t>(i),
                     "week index " + std::to_string(data.weeks[i]) + " below 1"});
    }
    if (i > 0 && data.weeks[i] <= data.weeks[i - 1]) {
      out.push_back({"weeks", static_cast<std::ptrdiff_t>(i), "week list not strictly increasing"});
    }
  }

  for (std::size_t i = 0; i < data.question_records.size(); ++i) {
    const auto& record = data.question_records[i];
    const auto index = static_cast<std::ptrdiff_t>(i);
    check_learner(data.learners, record.learner, "question_records", index, out);
    if (!data.graph.has_topic(record.topic)) {
      out.push_back({"question_records", index, "unknown topic '" + record.topic + "'"});
    }
    check_week(data.weeks, record.week, "question_records", index, out);
  }

  for (std::size_t i = 0; i < data.survey_responses.size(); ++i) {
    const auto& response = data.survey_responses[i];
    const auto index = static_cast<std::ptrdiff_t>(i);
    check_learner(data.learners, response.learner, "survey_responses", index, out);
    if (response.value < 1 || response.value > 6) {
      out.push_back({"survey_responses", index,
                     "Likert value " + std::to_string(response.value) + " outside [1, 6]"});
    } else if (const SurveyItem* item = items.find(response.item)) {
      if (response.value < item->scale_min || response.value > item->scale_max) {
        out.push_back({"survey_responses", index,
                       "value " + std::to_string(response.value) + " outside item '" +
                           response.item + "' scale [" + std::to_string(item->scale_min) + ", " +
                           std::to_string(item->scale_max) + "]"});
      }
    }
    if (items.find(response.item) == nullptr) {
      out.push_back({"survey_responses", index,
                     "item '" + response.item + "' not present in the survey item map"});
    }
  }

  for (std::size_t i = 0; i < data.help_events.size(); ++i) {
    const auto& event = data.help_events[i];
    const auto index = static_cast<std::ptrdiff_t>(i);
    check_learner(data.learners, event.learner, "help_events", index, out);
    check_week(data.weeks, event.week, "help_events", index, out);
  }

  for (std::size_t i = 0; i < data.teacher_segments.size(); ++i) {
    const auto& segment = data.teacher_segments[i];
    const auto index = static_cast<std::ptrdiff_t>(i);
    if (codebook.themes.find(segment.theme) == codebook.themes.end()) {
      out.push_back(
          {"teacher_segments", index, "theme '" + segment.theme + "' not in the codebook"});
    } else if (segment.is_friction != codebook.is_friction(segment.theme)) {
      out.push_back({"teacher_segments", index,
                     "is_friction flag disagrees with the codebook for theme '" + segment.theme +
                         "'"});
    }
  }

  // Q5 items must point at graph topics; otherwise their responses would
  // produce signals for concepts outside the curriculum.
  for (const auto& [item_id, item] : items.entries) {
    if (item.construct == Construct::Q5Topic) {
      if (!item.topic.has_value()) {
        out.push_back({"item_map", -1, "Q5 item '" + item_id + "' carries no topic id"});
      } else if (!data.graph.has_topic(*item.topic)) {
        out.push_back({"item_map", -1,
                       "Q5 item '" + item_id + "' references unknown topic '" + *item.topic + "'"});
      }
    }
  }

  return result;
}

}  // namespace mediator::model
