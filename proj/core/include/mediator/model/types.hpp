#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mediator::model {

// Topic and learner identities are opaque string keys. Topic display names
// may collide; ids may not.
using TopicId = std::string;
using LearnerId = std::string;

// Directed prerequisite edge: first must be learned before second.
using PrerequisiteEdge = std::pair<TopicId, TopicId>;

// Course concept map: topic id -> display name, plus prerequisite edges.
// Keyed storage makes id uniqueness structural; file-level duplicate ids are
// rejected at load time.
struct KnowledgeGraph {
  std::map<TopicId, std::string> topics;
  std::set<PrerequisiteEdge> prerequisites;

  bool has_topic(const TopicId& id) const { return topics.find(id) != topics.end(); }

  bool operator==(const KnowledgeGraph&) const = default;
};

enum class QuestionLabel { Correct, Incorrect, Unknown };

// One learner question mapped to a topic and classified offline.
struct QuestionRecord {
  LearnerId learner;
  TopicId topic;
  QuestionLabel label = QuestionLabel::Unknown;
  int week = 0;

  bool operator==(const QuestionRecord&) const = default;
};

// One Likert answer to one survey item. Scale bounds live in the item map.
struct SurveyResponse {
  LearnerId learner;
  std::string item;
  int value = 0;

  bool operator==(const SurveyResponse&) const = default;
};

struct HelpEvent {
  LearnerId learner;
  int week = 0;
  bool resolved = false;

  bool operator==(const HelpEvent&) const = default;
};

// Interview segment coded against the configured codebook. is_friction is
// derived from the codebook's friction-theme set when segments are loaded.
struct CodedSegment {
  std::string segment_id;
  std::string theme;
  bool is_friction = false;

  bool operator==(const CodedSegment&) const = default;
};

// Theme codebook used to code teacher interview segments. Both the theme
// list and its friction subset are configuration, not constants.
struct Codebook {
  std::set<std::string> themes;
  std::set<std::string> friction_themes;

  bool is_friction(const std::string& theme) const {
    return friction_themes.find(theme) != friction_themes.end();
  }

  bool operator==(const Codebook&) const = default;
};

// Validated bundle of one course offering's records. All types here are
// immutable after construction and safe to share across threads.
struct CohortDataset {
  KnowledgeGraph graph;
  std::set<LearnerId> learners;
  std::vector<QuestionRecord> question_records;
  std::vector<SurveyResponse> survey_responses;
  std::vector<HelpEvent> help_events;
  std::vector<CodedSegment> teacher_segments;
  std::vector<int> weeks;

  bool operator==(const CohortDataset&) const = default;
};

const char* to_string(QuestionLabel label);
QuestionLabel question_label_from_string(const std::string& text);

}  // namespace mediator::model
