// workbench: run tasks from a workspace file, emit the fixture corpus, list tasks.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "pact/corpus.hpp"
#include "pact/error.hpp"
#include "pact/tasks.hpp"

namespace {

int run(const std::string& file, const std::vector<std::string>& selectors, const std::string& out_dir, bool json) {
  const pact::Workspace w = pact::load_workspace(file);
  const auto tasks = pact::select_tasks(w, selectors);
  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw pact::Error(pact::ErrorCode::Io, "cannot create " + out_dir + ": " + ec.message(), out_dir);
  }
  bool all_pass = true;
  pact::Json reports = pact::Json::array();
  for (const auto& t : tasks) {
    const auto r = pact::run_task(w, t);
    all_pass = all_pass && r.status == pact::TaskStatus::Pass;
    const auto j = pact::to_json(r);
    if (!out_dir.empty()) {
      const std::string path = (std::filesystem::path(out_dir) / (r.id + ".json")).string();
      std::ofstream f(path, std::ios::binary);
      f << j.dump(2) << '\n';
      if (!f) throw pact::Error(pact::ErrorCode::Io, "cannot write " + path, path);
    }
    if (json)
      reports.push_back(j);
    else
      std::cout << pact::to_text(r);
  }
  if (json) std::cout << reports.dump(2) << '\n';
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial ordered actions workbench"};
  app.require_subcommand(1);

  std::string file, out_dir;
  std::vector<std::string> selectors;
  bool json = false;
  auto* run_cmd = app.add_subcommand("run", "Run the tasks of a workspace file");
  run_cmd->add_option("file", file, "Workspace JSON")->required();
  run_cmd->add_option("--task", selectors, "Task id, name or name with flags (repeatable)");
  run_cmd->add_option("--out", out_dir, "Write one <id>.json report per task into DIR");
  run_cmd->add_flag("--json", json, "Print reports as a JSON array");

  std::string fixture_dir;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Write the reference workspaces");
  fixtures_cmd->add_option("dir", fixture_dir, "Output directory")->required();

  auto* list_cmd = app.add_subcommand("list", "Print the task catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return run(file, selectors, out_dir, json);
    if (*fixtures_cmd) {
      for (const auto& p : pact::emit_fixture_corpus(fixture_dir)) std::cout << p << '\n';
      return 0;
    }
    if (*list_cmd) {
      std::cout << pact::catalog_text();
      return 0;
    }
  } catch (const pact::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
