#include "tgsched/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace tgsched {

namespace {

std::string located(std::size_t line, const std::string& message) {
  return line == 0 ? message : "line " + std::to_string(line) + ": " + message;
}

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

std::int64_t integer(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(ParseErrorKind::kMalformed, line,
                     "expected an integer, got '" + std::string(token) + "'");
  return value;
}

ParseErrorKind from_graph_error(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::kEmpty: return ParseErrorKind::kEmpty;
    case GraphErrorKind::kNegativeCost: return ParseErrorKind::kNegativeCost;
    case GraphErrorKind::kBadEndpoint: return ParseErrorKind::kDanglingPredecessor;
    case GraphErrorKind::kSelfEdge: return ParseErrorKind::kSelfEdge;
    case GraphErrorKind::kDuplicateEdge: return ParseErrorKind::kDuplicateEdge;
    case GraphErrorKind::kCycle: return ParseErrorKind::kCycle;
  }
  return ParseErrorKind::kMalformed;
}

}  // namespace

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformed: return "malformed";
    case ParseErrorKind::kTaskCount: return "task-count";
    case ParseErrorKind::kBadTaskId: return "bad-task-id";
    case ParseErrorKind::kDuplicateTask: return "duplicate-task";
    case ParseErrorKind::kDanglingPredecessor: return "dangling-predecessor";
    case ParseErrorKind::kDuplicateEdge: return "duplicate-edge";
    case ParseErrorKind::kSelfEdge: return "self-edge";
    case ParseErrorKind::kNegativeCost: return "negative-cost";
    case ParseErrorKind::kCycle: return "cycle";
    case ParseErrorKind::kEmpty: return "empty";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& message)
    : std::runtime_error(located(line, message)), kind_(kind), line_(line) {}

TaskGraph parse_stg(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(ParseErrorKind::kEmpty, 0, "document contains no task count");

  const Line& header = lines.front();
  if (header.tokens.size() != 1)
    throw ParseError(ParseErrorKind::kMalformed, header.number,
                     "first line must hold only the task count");
  const std::int64_t declared = integer(header.tokens[0], header.number);
  if (declared < 1) throw ParseError(ParseErrorKind::kEmpty, header.number, "task count must be >= 1");

  const std::size_t task_lines = lines.size() - 1;
  const auto n = static_cast<std::size_t>(declared);
  if (task_lines != n && task_lines != n + 2)
    throw ParseError(ParseErrorKind::kTaskCount, header.number,
                     "header declares " + std::to_string(n) + " tasks but " +
                         std::to_string(task_lines) + " task lines follow (expected " +
                         std::to_string(n) + " or " + std::to_string(n + 2) + ")");

  std::vector<std::optional<Time>> costs(task_lines);
  std::vector<std::size_t> line_of(task_lines, 0);
  std::vector<Edge> edges;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens.size() < 3)
      throw ParseError(ParseErrorKind::kMalformed, line.number,
                       "task line needs at least: id cost num-preds");
    const std::int64_t id = integer(line.tokens[0], line.number);
    const std::int64_t cost = integer(line.tokens[1], line.number);
    const std::int64_t npred = integer(line.tokens[2], line.number);
    if (id < 0 || static_cast<std::size_t>(id) >= task_lines)
      throw ParseError(ParseErrorKind::kBadTaskId, line.number,
                       "task id " + std::to_string(id) + " outside [0, " +
                           std::to_string(task_lines) + ")");
    const auto task = static_cast<TaskId>(id);
    if (costs[task])
      throw ParseError(ParseErrorKind::kDuplicateTask, line.number,
                       "task " + std::to_string(id) + " already defined on line " +
                           std::to_string(line_of[task]));
    if (cost < 0)
      throw ParseError(ParseErrorKind::kNegativeCost, line.number,
                       "task " + std::to_string(id) + " has negative cost");
    if (npred < 0 || static_cast<std::size_t>(npred) != line.tokens.size() - 3)
      throw ParseError(ParseErrorKind::kMalformed, line.number,
                       "predecessor count " + std::to_string(npred) + " does not match " +
                           std::to_string(line.tokens.size() - 3) + " listed predecessors");
    costs[task] = cost;
    line_of[task] = line.number;

    std::vector<TaskId> seen;
    for (std::size_t k = 3; k < line.tokens.size(); ++k) {
      const std::int64_t pred = integer(line.tokens[k], line.number);
      if (pred < 0 || static_cast<std::size_t>(pred) >= task_lines)
        throw ParseError(ParseErrorKind::kDanglingPredecessor, line.number,
                         "task " + std::to_string(id) + " lists missing predecessor " +
                             std::to_string(pred));
      if (pred == id)
        throw ParseError(ParseErrorKind::kSelfEdge, line.number,
                         "task " + std::to_string(id) + " lists itself as predecessor");
      const auto p = static_cast<TaskId>(pred);
      for (TaskId s : seen)
        if (s == p)
          throw ParseError(ParseErrorKind::kDuplicateEdge, line.number,
                           "task " + std::to_string(id) + " lists predecessor " +
                               std::to_string(pred) + " twice");
      seen.push_back(p);
      edges.push_back(Edge{p, task, 0});
    }
  }

  std::vector<Time> plain_costs;
  plain_costs.reserve(task_lines);
  for (auto& c : costs) plain_costs.push_back(*c);  // ids are unique and in range, so all set

  try {
    return TaskGraph(std::move(plain_costs), std::move(edges));
  } catch (const GraphError& e) {
    const std::size_t line = e.task() ? line_of[*e.task()] : 0;
    throw ParseError(from_graph_error(e.kind()), line, e.what());
  }
}

TaskGraph parse_native(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset -> line
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(ParseErrorKind::kMalformed, line, e.what());
  }

  auto field = [](const json& obj, const char* key, const std::string& where) -> std::int64_t {
    if (!obj.is_object() || !obj.contains(key) || !obj[key].is_number_integer())
      throw ParseError(ParseErrorKind::kMalformed, 0,
                       where + ": missing integer field '" + key + "'");
    return obj[key].get<std::int64_t>();
  };

  if (!doc.is_object() || !doc.contains("tasks") || !doc["tasks"].is_array())
    throw ParseError(ParseErrorKind::kMalformed, 0, "document needs a \"tasks\" array");
  const json& tasks = doc["tasks"];
  if (tasks.empty()) throw ParseError(ParseErrorKind::kEmpty, 0, "task list is empty");

  std::vector<std::optional<Time>> costs(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const std::string where = "tasks[" + std::to_string(i) + "]";
    const std::int64_t id = field(tasks[i], "id", where);
    const std::int64_t cost = field(tasks[i], "cost", where);
    if (id < 0 || static_cast<std::size_t>(id) >= tasks.size())
      throw ParseError(ParseErrorKind::kBadTaskId, 0,
                       where + ": id " + std::to_string(id) + " outside [0, " +
                           std::to_string(tasks.size()) + ")");
    if (costs[id])
      throw ParseError(ParseErrorKind::kDuplicateTask, 0,
                       where + ": task " + std::to_string(id) + " defined twice");
    if (cost < 0)
      throw ParseError(ParseErrorKind::kNegativeCost, 0, where + ": negative cost");
    costs[id] = cost;
  }

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    const json& list = doc["edges"];
    if (!list.is_array()) throw ParseError(ParseErrorKind::kMalformed, 0, "\"edges\" must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      const std::int64_t from = field(list[i], "from", where);
      const std::int64_t to = field(list[i], "to", where);
      const std::int64_t comm = field(list[i], "comm", where);
      if (comm < 0) throw ParseError(ParseErrorKind::kNegativeCost, 0, where + ": negative comm");
      if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= tasks.size() ||
          static_cast<std::size_t>(to) >= tasks.size())
        throw ParseError(ParseErrorKind::kDanglingPredecessor, 0,
                         where + ": endpoint references a missing task");
      edges.push_back(Edge{static_cast<TaskId>(from), static_cast<TaskId>(to), comm});
    }
  }

  std::vector<Time> plain_costs;
  plain_costs.reserve(costs.size());
  for (auto& c : costs) plain_costs.push_back(*c);
  try {
    return TaskGraph(std::move(plain_costs), std::move(edges));
  } catch (const GraphError& e) {
    throw ParseError(from_graph_error(e.kind()), 0, e.what());
  }
}

std::string to_stg(const TaskGraph& g) {
  std::ostringstream out;
  out << g.task_count() << '\n';
  for (TaskId t = 0; t < g.task_count(); ++t) {
    const auto preds = g.predecessors(t);
    out << t << ' ' << g.cost(t) << ' ' << preds.size();
    for (const Arc& p : preds) out << ' ' << p.task;
    out << '\n';
  }
  return out.str();
}

std::string to_native(const TaskGraph& g) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["tasks"] = ordered_json::array();
  for (TaskId t = 0; t < g.task_count(); ++t)
    doc["tasks"].push_back(ordered_json{{"id", t}, {"cost", g.cost(t)}});
  doc["edges"] = ordered_json::array();
  for (const Edge& e : g.edges())
    doc["edges"].push_back(ordered_json{{"from", e.from}, {"to", e.to}, {"comm", e.comm}});
  return doc.dump(2) + "\n";
}

TaskGraph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kStg ? parse_stg(text) : parse_native(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace tgsched
