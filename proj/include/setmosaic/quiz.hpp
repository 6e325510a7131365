#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "setmosaic/model.hpp"
#include "setmosaic/query.hpp"

namespace setmosaic {

inline constexpr char kNoneOfTheAbove[] = "None of the above";

// One study-style task question. The prompt follows the fixed wording for
// its (relation, difficulty) cell; `highlights` lists the quantifier and
// logical-relation words of that wording (some, all, none, both, either, or)
// so a presenter can emphasise them. Choices are 4-5 candidate set labels
// (targets never appear) plus the literal "None of the above", which is in
// the answer key exactly when no set choice qualifies.
struct TaskQuestion {
  Relation relation;
  Difficulty difficulty;
  std::vector<std::string> targets;  // X, plus Y when hard
  std::string prompt;
  std::vector<std::string> highlights;
  std::vector<std::string> choices;
  std::vector<std::string> answer_key;
};

// Draws targets and distractor choices pseudo-randomly (identical seed,
// identical question) and computes the answer key from the zones. Easy
// questions take 5 set choices, hard take 4, reduced only when the system
// has too few sets; below 4 available choices the request is rejected.
TaskQuestion generate_question(const ZoneSet& zs, Relation relation,
                               Difficulty difficulty, std::uint64_t seed);

enum class VisKind { linear, mosaic };

struct TaskItem {
  VisKind visualization;
  TaskQuestion question;
};

// Twelve questions in alternating visualizations: never two consecutive
// questions of one relation type, and all easy questions before the hard
// ones.
struct TaskSet {
  int replication;  // 1 or 2
  std::uint64_t seed;
  std::vector<TaskItem> items;
};

// Builds a task set following the fixed replication patterns (replication 1
// opens with a linear easy-intersection question, replication 2 with its
// mosaic mirror). Takes exactly 12 zone sets, one per question.
TaskSet generate_task_set(const std::vector<ZoneSet>& inputs, int replication,
                          std::uint64_t seed);

// JSON bundle for offline use: prompts, highlight words, choices, answer
// keys and a per-question diagram file name (q01_linear.svg, ...).
std::string task_set_to_json(const TaskSet& task_set);

// Diagram file name referenced by the bundle for a given position (0-based).
std::string question_diagram_name(const TaskSet& task_set, std::size_t position);

}  // namespace setmosaic
