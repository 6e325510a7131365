#include "setmosaic/quiz.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include <json.hpp>

#include "setmosaic/error.hpp"
#include "setmosaic/rng.hpp"

namespace setmosaic {

namespace {

// Question wording per (relation, difficulty) cell. The quantifier carries
// the relation; hard questions phrase the two-target region with either/or
// (union) or both/and (intersection).
std::string prompt_text(Relation relation, Difficulty difficulty,
                        const std::vector<std::string>& targets,
                        std::vector<std::string>& highlights) {
  const char* quantifier = nullptr;
  switch (relation) {
    case Relation::intersect: quantifier = "some"; break;
    case Relation::subset: quantifier = "all"; break;
    case Relation::disjoint: quantifier = "none"; break;
  }
  highlights.push_back(quantifier);

  std::string prompt = "Tick the check boxes where ";
  prompt += quantifier;
  prompt += " of the people are also interested in ";
  if (difficulty == Difficulty::easy) {
    prompt += targets[0];
  } else if (relation == Relation::disjoint) {
    prompt += "both " + targets[0] + " and " + targets[1];
    highlights.push_back("both");
  } else {
    prompt += "either " + targets[0] + " or " + targets[1];
    highlights.push_back("either");
    highlights.push_back("or");
  }
  prompt += ".";
  return prompt;
}

constexpr std::array<std::pair<VisKind, std::pair<Difficulty, Relation>>, 12>
replication_pattern(int replication) {
  using enum VisKind;
  using enum Difficulty;
  using enum Relation;
  // Replication 2 swaps the visualizations and the first/second easy
  // sub-blocks; the relation cycle I, D, S stays fixed.
  if (replication == 1)
    return {{{linear, {easy, intersect}}, {mosaic, {easy, disjoint}},
             {linear, {easy, subset}},   {mosaic, {easy, intersect}},
             {linear, {easy, disjoint}}, {mosaic, {easy, subset}},
             {linear, {hard, intersect}}, {mosaic, {hard, disjoint}},
             {linear, {hard, subset}},   {mosaic, {hard, intersect}},
             {linear, {hard, disjoint}}, {mosaic, {hard, subset}}}};
  return {{{mosaic, {easy, intersect}}, {linear, {easy, disjoint}},
           {mosaic, {easy, subset}},   {linear, {easy, intersect}},
           {mosaic, {easy, disjoint}}, {linear, {easy, subset}},
           {mosaic, {hard, intersect}}, {linear, {hard, disjoint}},
           {mosaic, {hard, subset}},   {linear, {hard, intersect}},
           {mosaic, {hard, disjoint}}, {linear, {hard, subset}}}};
}

void validate_task_set(const TaskSet& task_set) {
  const auto& items = task_set.items;
  if (items.size() != 12) throw Error("a task set holds exactly 12 questions");
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (items[i].visualization == items[i - 1].visualization)
      throw Error("task set visualizations must alternate");
    if (items[i].question.relation == items[i - 1].question.relation)
      throw Error("consecutive questions must differ in relation type");
    if (items[i].question.difficulty == Difficulty::easy &&
        items[i - 1].question.difficulty == Difficulty::hard)
      throw Error("easy questions must precede hard ones");
  }
}

const char* relation_code(Relation r) {
  switch (r) {
    case Relation::intersect: return "I";
    case Relation::subset: return "S";
    case Relation::disjoint: return "D";
  }
  return "?";
}

}  // namespace

TaskQuestion generate_question(const ZoneSet& zs, Relation relation,
                               Difficulty difficulty, std::uint64_t seed) {
  const std::size_t n = zs.set_count();
  const std::size_t n_targets = difficulty == Difficulty::hard ? 2 : 1;
  const std::size_t wanted = difficulty == Difficulty::hard ? 4 : 5;
  if (n < n_targets + 4)
    throw Error("need at least " + std::to_string(n_targets + 4) +
                " sets for this question, got " + std::to_string(n));
  const std::size_t n_choices = std::min(wanted, n - n_targets);

  SplitMix64 rng(seed);

  TaskQuestion question;
  question.relation = relation;
  question.difficulty = difficulty;

  const std::size_t x = rng.bounded(n);
  question.targets.push_back(zs.set_labels()[x]);
  std::size_t y = x;
  if (difficulty == Difficulty::hard) {
    y = rng.bounded(n - 1);
    if (y >= x) ++y;
    question.targets.push_back(zs.set_labels()[y]);
  }

  // Distractor choices: seeded shuffle of the non-target labels, first
  // n_choices taken, presented in legend order.
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < n; ++i)
    if (i != x && !(difficulty == Difficulty::hard && i == y))
      candidates.push_back(i);
  for (std::size_t i = candidates.size() - 1; i > 0; --i)
    std::swap(candidates[i], candidates[rng.bounded(i + 1)]);
  candidates.resize(n_choices);
  std::sort(candidates.begin(), candidates.end());

  QuerySpec spec{relation, difficulty, question.targets[0],
                 difficulty == Difficulty::hard ? question.targets[1] : ""};
  const std::vector<std::string> qualifying = sets_satisfying(zs, spec);

  for (std::size_t idx : candidates) {
    const std::string& label = zs.set_labels()[idx];
    question.choices.push_back(label);
    if (std::find(qualifying.begin(), qualifying.end(), label) != qualifying.end())
      question.answer_key.push_back(label);
  }
  question.choices.push_back(kNoneOfTheAbove);
  if (question.answer_key.empty()) question.answer_key.push_back(kNoneOfTheAbove);

  question.prompt =
      prompt_text(relation, difficulty, question.targets, question.highlights);
  return question;
}

TaskSet generate_task_set(const std::vector<ZoneSet>& inputs, int replication,
                          std::uint64_t seed) {
  if (replication != 1 && replication != 2)
    throw Error("replication must be 1 or 2");
  if (inputs.size() != 12)
    throw Error("a task set needs 12 zone sets (one per question), got " +
                std::to_string(inputs.size()));

  const auto pattern = replication_pattern(replication);
  TaskSet task_set{replication, seed, {}};
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const auto& [vis, cell] = pattern[i];
    task_set.items.push_back(
        TaskItem{vis, generate_question(inputs[i], cell.second, cell.first,
                                        SplitMix64::child(seed, i).next())});
  }
  validate_task_set(task_set);
  return task_set;
}

std::string question_diagram_name(const TaskSet& task_set, std::size_t position) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "q%02zu_%s.svg", position + 1,
                task_set.items[position].visualization == VisKind::linear
                    ? "linear"
                    : "mosaic");
  return buf;
}

std::string task_set_to_json(const TaskSet& task_set) {
  nlohmann::ordered_json doc;
  doc["replication"] = task_set.replication;
  doc["seed"] = task_set.seed;
  doc["questions"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < task_set.items.size(); ++i) {
    const TaskItem& item = task_set.items[i];
    nlohmann::ordered_json q;
    q["index"] = i + 1;
    q["visualization"] =
        item.visualization == VisKind::linear ? "linear" : "mosaic";
    q["type"] = relation_code(item.question.relation);
    q["difficulty"] = item.question.difficulty == Difficulty::easy ? "E" : "H";
    q["targets"] = item.question.targets;
    q["prompt"] = item.question.prompt;
    q["highlights"] = item.question.highlights;
    q["choices"] = item.question.choices;
    q["answer_key"] = item.question.answer_key;
    q["diagram"] = question_diagram_name(task_set, i);
    doc["questions"].push_back(std::move(q));
  }
  return doc.dump(2) + "\n";
}

}  // namespace setmosaic
