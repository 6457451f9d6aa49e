#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "alonzo/source.hpp"

namespace alonzo {

/// Exit codes shared by every command.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitRefused = 2 };

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Replaces a file's contents. Returns false on failure.
using FileWriter = std::function<bool(const std::string& path, const std::string& text)>;
FileWriter disk_writer();

/// Where command inputs come from. With `corpus`, the bundled files are
/// loaded ahead of `paths`.
struct Inputs {
  std::vector<std::string> paths;
  bool corpus = false;
  FileReader read = disk_reader();
};

CommandResult cmd_check(const Inputs& in);

struct TransportOptions {
  std::string via;
  std::string item;
  std::optional<std::string> as;
  bool write = false;
};
CommandResult cmd_transport(const Inputs& in, const TransportOptions& opts,
                            const FileWriter& write = disk_writer());

struct RenderOptions {
  bool latex = false;
  std::optional<std::string> theory;
};
CommandResult cmd_render(const Inputs& in, const RenderOptions& opts);

struct CountermodelOptions {
  std::optional<std::string> theory;
  std::string conjecture;
  int max_size = 3;
  std::uint64_t budget = 20'000'000;
};
CommandResult cmd_countermodel(const Inputs& in, const CountermodelOptions& opts);

struct GraphStatsOptions {
  std::optional<std::string> graph;
  bool json = false;
};
CommandResult cmd_graph_stats(const Inputs& in, const GraphStatsOptions& opts);

}  // namespace alonzo
