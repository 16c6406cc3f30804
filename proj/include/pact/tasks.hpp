#pragma once

#include <string>
#include <vector>

#include "pact/report.hpp"
#include "pact/workspace.hpp"

namespace pact {

struct TaskInfo {
  std::string name;
  std::string flags;
  std::string subject;
  std::string summary;
};

/// Fixed, ordered task catalog.
const std::vector<TaskInfo>& task_catalog();
std::string catalog_text();

enum class TaskStatus { Pass, Fail, Error };
std::string_view to_string(TaskStatus s);

struct TaskReport {
  std::string id;
  std::string task;
  std::string subject;
  TaskStatus status = TaskStatus::Pass;
  Report clauses;
  /// Dimensions, witnesses and other payload, in a fixed key order.
  Json data = Json::object();
  /// Expectation mismatches and other failures without a clause label.
  std::vector<std::string> notes;
  std::string error;
};

/// Never throws for task-level failures; errors are captured in the report.
/// Throws UnknownTask for names outside the catalog.
TaskReport run_task(const Workspace& w, const TaskSpec& t);

/// Tasks whose id, name, or name with flags matches one of `selectors`;
/// all tasks when `selectors` is empty. Throws UnknownTask when a selector
/// matches nothing.
std::vector<TaskSpec> select_tasks(const Workspace& w, const std::vector<std::string>& selectors);

Json to_json(const TaskReport& r);
std::string to_text(const TaskReport& r);

/// Subset match: every key of `expected` must be present in `actual` with a
/// matching value (objects compared recursively). Mismatches are appended
/// to `out` with their JSON path.
void match_expectations(const Json& expected, const Json& actual, const std::string& path, std::vector<std::string>& out);

}  // namespace pact
