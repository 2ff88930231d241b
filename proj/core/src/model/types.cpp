#include "mediator/model/types.hpp"

#include "mediator/error.hpp"

namespace mediator::model {

const char* to_string(QuestionLabel label) {
  switch (label) {
    case QuestionLabel::Correct:
      return "correct";
    case QuestionLabel::Incorrect:
      return "incorrect";
    case QuestionLabel::Unknown:
      return "unknown";
  }
  return "unknown";
}

QuestionLabel question_label_from_string(const std::string& text) {
  if (text == "correct") return QuestionLabel::Correct;
  if (text == "incorrect") return QuestionLabel::Incorrect;
  if (text == "unknown") return QuestionLabel::Unknown;
  throw Error("unrecognized question label '" + text + "' (expected correct|incorrect|unknown)");
}

}  // namespace mediator::model
