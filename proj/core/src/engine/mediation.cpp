#include "mediator/engine/mediation.hpp"

#include <algorithm>
#include <cmath>

#include "mediator/error.hpp"
#include "mediator/stats/kernel.hpp"

namespace mediator::engine {

std::optional<std::string> check_weight_profile(const WeightProfile& profile) {
  if (profile.w_r < 0.0 || profile.w_d < 0.0 || profile.w_f < 0.0) {
    return "weight profile '" + profile.name + "' has a negative weight";
  }
  const double sum = profile.w_r + profile.w_d + profile.w_f;
  if (std::abs(sum - 1.0) > 1e-9) {
    return "weight profile '" + profile.name + "' sums to " + std::to_string(sum) +
           ", expected 1 (pass --renormalize to rescale)";
  }
  return std::nullopt;
}

WeightProfile renormalized(WeightProfile profile) {
  const double sum = profile.w_r + profile.w_d + profile.w_f;
  if (sum <= 0.0) throw Error("weight profile '" + profile.name + "' sums to zero");
  profile.w_r /= sum;
  profile.w_d /= sum;
  profile.w_f /= sum;
  return profile;
}

double compute_disagreement(double prevalence_r, const SurveyDifficulty& survey) {
  if (!survey.available) return 0.0;
  return std::abs(prevalence_r - survey.s);
}

double compute_priority(const TopicSignals& signals, double friction_f, const WeightProfile& w) {
  return w.w_r * signals.prevalence_r + w.w_d * signals.disagreement_d + w.w_f * friction_f;
}

std::vector<TopicSignals> assemble_signals(const std::map<TopicId, double>& prevalence,
                                           const std::map<TopicId, SurveyDifficulty>& survey) {
  std::map<TopicId, TopicSignals> rows;
  for (const auto& [topic, r] : prevalence) {
    rows[topic].topic = topic;
    rows[topic].prevalence_r = r;
  }
  for (const auto& [topic, difficulty] : survey) {
    auto& row = rows[topic];
    row.topic = topic;
    row.survey_available = difficulty.available;
    row.survey_difficulty_s = difficulty.available ? difficulty.s : 0.0;
  }
  std::vector<TopicSignals> out;
  out.reserve(rows.size());
  for (auto& [topic, row] : rows) {
    row.disagreement_d = compute_disagreement(
        row.prevalence_r, SurveyDifficulty{row.survey_available, row.survey_difficulty_s});
    out.push_back(row);
  }
  return out;
}

std::vector<DecisionRecord> rank_topics(const std::vector<TopicSignals>& all_signals,
                                        double friction_f, const WeightProfile& w) {
  if (all_signals.empty()) throw Error("nothing to rank");
  if (auto problem = check_weight_profile(w)) throw Error(*problem);

  std::vector<DecisionRecord> records;
  records.reserve(all_signals.size());
  for (const auto& signals : all_signals) {
    DecisionRecord record;
    record.topic = signals.topic;
    record.prevalence_r = signals.prevalence_r;
    record.disagreement_d = signals.disagreement_d;
    record.friction_f = friction_f;
    record.survey_available = signals.survey_available;
    record.weights = w;
    record.contribution_r = w.w_r * signals.prevalence_r;
    record.contribution_d = w.w_d * signals.disagreement_d;
    record.contribution_f = w.w_f * friction_f;
    record.priority_p = record.contribution_r + record.contribution_d + record.contribution_f;
    if (!signals.survey_available) {
      record.diagnostics.push_back("survey missing; D forced to 0");
    }
    records.push_back(std::move(record));
  }

  std::sort(records.begin(), records.end(), [](const DecisionRecord& a, const DecisionRecord& b) {
    if (a.priority_p != b.priority_p) return a.priority_p > b.priority_p;
    if (a.prevalence_r != b.prevalence_r) return a.prevalence_r > b.prevalence_r;
    return a.topic < b.topic;
  });

  for (std::size_t i = 0; i < records.size(); ++i) {
    records[i].rank = static_cast<int>(i) + 1;
    if (i > 0 && records[i].priority_p == records[i - 1].priority_p) {
      const bool by_prevalence = records[i].prevalence_r != records[i - 1].prevalence_r;
      records[i].diagnostics.push_back(
          std::string("priority tied with '") + records[i - 1].topic + "'; ordered by " +
          (by_prevalence ? "higher prevalence" : "topic id"));
    }
  }
  return records;
}

WeightProfile no_disagreement_ablation(const WeightProfile& base) {
  WeightProfile ablated = base;
  ablated.name = "no-disagreement ablation";
  ablated.w_d = 0.0;
  return renormalized(ablated);
}

namespace {

std::vector<TopicId> ranking_ids(const std::vector<DecisionRecord>& records) {
  std::vector<TopicId> ids;
  ids.reserve(records.size());
  for (const auto& record : records) ids.push_back(record.topic);
  return ids;
}

// Priority vectors aligned on topic id, for rank correlation.
stats::PairedSample aligned_priorities(const std::vector<DecisionRecord>& a,
                                       const std::vector<DecisionRecord>& b) {
  std::map<TopicId, double> pa, pb;
  for (const auto& record : a) pa[record.topic] = record.priority_p;
  for (const auto& record : b) pb[record.topic] = record.priority_p;
  stats::PairedSample sample;
  for (const auto& [topic, priority] : pa) {
    sample.xs.push_back(priority);
    sample.ys.push_back(pb.at(topic));
  }
  return sample;
}

}  // namespace

std::vector<SensitivityReport> sensitivity_sweep(const std::vector<TopicSignals>& all_signals,
                                                 double friction_f,
                                                 const std::vector<WeightProfile>& profiles,
                                                 int k) {
  if (profiles.size() < 2) throw Error("sensitivity sweep needs at least two weight profiles");
  if (k < 0 || static_cast<std::size_t>(k) > all_signals.size()) {
    throw Error("sweep k = " + std::to_string(k) + " exceeds the topic count");
  }

  std::size_t base_index = 0;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (profiles[i].name == "default") {
      base_index = i;
      break;
    }
  }
  const WeightProfile& base = profiles[base_index];
  const auto base_ranking = rank_topics(all_signals, friction_f, base);
  const auto base_ids = ranking_ids(base_ranking);

  std::vector<SensitivityReport> reports;
  auto compare = [&](const WeightProfile& other) {
    const auto other_ranking = rank_topics(all_signals, friction_f, other);
    SensitivityReport report;
    report.profile_a = base.name;
    report.profile_b = other.name;
    report.k = k;
    report.ranking_a = base_ids;
    report.ranking_b = ranking_ids(other_ranking);
    report.spearman_rho = stats::spearman_rho(aligned_priorities(base_ranking, other_ranking));
    report.overlap = stats::top_k_overlap(report.ranking_a, report.ranking_b, k);
    reports.push_back(std::move(report));
  };

  compare(base);  // identity row
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (i != base_index) compare(profiles[i]);
  }
  compare(no_disagreement_ablation(base));
  return reports;
}

}  // namespace mediator::engine
