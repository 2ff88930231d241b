#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mediator/model/survey_items.hpp"
#include "mediator/model/types.hpp"

namespace mediator::model {

// One invariant breach. `collection` names the record stream ("graph",
// "question_records", ...) and `index` the offending record (-1 when the
// violation is not record-scoped). Loaders translate (collection, index)
// back into file:line locators.
struct Violation {
  std::string collection;
  std::ptrdiff_t index = -1;
  std::string message;

  std::string describe() const;

  bool operator==(const Violation&) const = default;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

// Graph invariants: nonempty ids, edge endpoints exist, no self-loops,
// prerequisite relation is acyclic. Violations are data, not failures.
ValidationResult validate_graph(const KnowledgeGraph& graph);

// Referential and range invariants over a full cohort bundle. Idempotent and
// order-insensitive: permuting record order permutes violations only.
ValidationResult validate_cohort(const CohortDataset& data,
                                 const SurveyItemMap& items,
                                 const Codebook& codebook);

}  // namespace mediator::model
