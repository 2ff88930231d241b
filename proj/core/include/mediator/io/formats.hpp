#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mediator/engine/mediation.hpp"
#include "mediator/model/survey_items.hpp"
#include "mediator/model/types.hpp"
#include "mediator/model/validate.hpp"
#include "mediator/signals/extract.hpp"
#include "mediator/stats/kernel.hpp"
#include "mediator/synthesis/risk.hpp"

namespace mediator::io {

namespace fs = std::filesystem;

// Exact column contracts for the CSV record streams.
extern const std::vector<std::string> kQuestionsHeader;        // learner_id,topic_id,label,week
extern const std::vector<std::string> kSurveyHeader;           // learner_id,item_id,value
extern const std::vector<std::string> kHelpEventsHeader;       // learner_id,week,resolved
extern const std::vector<std::string> kSegmentsHeader;         // segment_id,theme
extern const std::vector<std::string> kChannelsHeader;         // learner_id,rho_raw,rho_help,rho_refl
extern const std::vector<std::string> kDifficultyWeeksHeader;  // learner_id,week

model::KnowledgeGraph load_graph(const fs::path& path);
void save_graph(const fs::path& path, const model::KnowledgeGraph& graph);

model::SurveyItemMap load_item_map(const fs::path& path);
void save_item_map(const fs::path& path, const model::SurveyItemMap& items);

model::Codebook load_codebook(const fs::path& path);
void save_codebook(const fs::path& path, const model::Codebook& codebook);

std::vector<model::QuestionRecord> load_questions(const fs::path& path);
void save_questions(const fs::path& path, const std::vector<model::QuestionRecord>& records);

std::vector<model::SurveyResponse> load_survey(const fs::path& path);
void save_survey(const fs::path& path, const std::vector<model::SurveyResponse>& responses);

std::vector<model::HelpEvent> load_help_events(const fs::path& path);
void save_help_events(const fs::path& path, const std::vector<model::HelpEvent>& events);

// is_friction is derived from the codebook here; unknown themes surface
// later as validation violations, not load failures.
std::vector<model::CodedSegment> load_segments(const fs::path& path,
                                               const model::Codebook& codebook);
void save_segments(const fs::path& path, const std::vector<model::CodedSegment>& segments);

// Pre-normalized channel ingestion: values must already lie in [0, 1].
std::map<model::LearnerId, synthesis::ChannelScores> load_channels(const fs::path& path);
void save_channels(const fs::path& path,
                   const std::map<model::LearnerId, synthesis::ChannelScores>& channels);

std::map<model::LearnerId, std::set<int>> load_difficulty_weeks(const fs::path& path);
void save_difficulty_weeks(const fs::path& path,
                           const std::map<model::LearnerId, std::set<int>>& weeks);

// Rejects profiles that are not normalized unless `renormalize` is set.
std::vector<engine::WeightProfile> load_weight_profiles(const fs::path& path, bool renormalize);

// Declared input file set. Empty path means "not provided".
struct DataPaths {
  fs::path graph;
  fs::path questions;
  fs::path survey;
  fs::path help_events;
  fs::path segments;
  fs::path item_map;
  fs::path codebook;
  fs::path difficulty_weeks;
  fs::path channels;
};

// One run's effective configuration; mirrors the manifest's config block.
struct RunConfig {
  DataPaths files;
  engine::WeightProfile weights{"default", 0.70, 0.20, 0.10};
  synthesis::SynthesisConfig synthesis;
  stats::ResampleConfig resample;
  signals::GapConfig gap;
  std::optional<std::vector<int>> weeks;
};

// Paths inside the config file resolve relative to its directory.
RunConfig load_run_config(const fs::path& path);
void save_run_config(const fs::path& path, const RunConfig& config);

struct LoadedBundle {
  model::CohortDataset data;
  model::SurveyItemMap items;
  model::Codebook codebook;
  std::map<model::LearnerId, std::set<int>> difficulty_weeks;
  std::vector<fs::path> inputs;  // every file consumed, for the manifest
};

// Loads whatever files the config declares, assembles the cohort, and runs
// the model validators. Any violation aborts with file/line locators.
LoadedBundle load_bundle(const RunConfig& config);

// Writes the dataset plus its config files into a directory using the
// canonical names (graph.json, questions.csv, ...). Returns the paths.
DataPaths write_bundle(const fs::path& dir, const model::CohortDataset& data,
                       const model::SurveyItemMap& items, const model::Codebook& codebook,
                       const std::map<model::LearnerId, std::set<int>>& difficulty_weeks);

}  // namespace mediator::io
