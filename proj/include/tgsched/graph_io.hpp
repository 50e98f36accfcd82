#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tgsched/task_graph.hpp"

namespace tgsched {

enum class ParseErrorKind {
  kMalformed,
  kTaskCount,
  kBadTaskId,
  kDuplicateTask,
  kDanglingPredecessor,
  kDuplicateEdge,
  kSelfEdge,
  kNegativeCost,
  kCycle,
  kEmpty,
};

const char* to_string(ParseErrorKind kind);

/// Thrown by the graph readers. line() is 1-based; 0 when the error is not tied
/// to a line (native documents report the offending element in the message).
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& message);
  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

/// Standard Task Graph Set text format.
///
///   # comment lines and blank lines are ignored anywhere
///   <n>
///   <task-id> <cost> <num-preds> <pred-id>...
///   ...
///
/// Published STG files list n real tasks plus a zero-cost entry and exit node,
/// i.e. n + 2 task lines; files with exactly n task lines are accepted too.
/// Entry/exit nodes are kept as ordinary tasks. All comm costs are 0.
TaskGraph parse_stg(std::string_view text);

/// Native JSON format:
///   { "tasks": [{"id": 0, "cost": 2}, ...],
///     "edges": [{"from": 0, "to": 1, "comm": 4}, ...] }
/// Task ids must be exactly 0..k-1 (any order).
TaskGraph parse_native(std::string_view text);

/// Writes STG with header n = task_count and one line per task; comm costs
/// are dropped.
std::string to_stg(const TaskGraph& g);

/// Canonical native document: tasks by id, edges by (from, to), 2-space
/// indentation, trailing newline.
std::string to_native(const TaskGraph& g);

enum class GraphFormat { kStg, kNative };

TaskGraph parse_graph(std::string_view text, GraphFormat format);

/// Reads a file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace tgsched
