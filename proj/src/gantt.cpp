#include "tgsched/gantt.hpp"

#include <algorithm>
#include <sstream>

namespace tgsched {

namespace {

std::vector<std::vector<TaskId>> lanes(const Schedule& s) {
  std::vector<std::vector<TaskId>> out(s.processor_count);
  for (TaskId t = 0; t < s.placements.size(); ++t) out[s.placements[t].processor].push_back(t);
  for (auto& lane : out)
    std::stable_sort(lane.begin(), lane.end(), [&](TaskId a, TaskId b) {
      return s.placements[a].start < s.placements[b].start;
    });
  return out;
}

}  // namespace

std::string render_gantt_text(const Schedule& s) {
  std::ostringstream out;
  const auto rows = lanes(s);
  for (std::size_t p = 0; p < rows.size(); ++p) {
    out << 'P' << p << ':';
    for (TaskId t : rows[p]) {
      const Placement& pl = s.placements[t];
      out << " [" << pl.start << ".." << pl.finish << ") t" << t;
    }
    out << '\n';
  }
  out << "makespan " << s.makespan << '\n';
  return out.str();
}

std::string render_gantt_svg(const Schedule& s) {
  constexpr int kRow = 28;
  constexpr int kBar = 20;
  constexpr int kLeft = 40;
  constexpr int kTop = 10;
  constexpr int kAxis = 24;
  const Time span = std::max<Time>(s.makespan, 1);
  const long width = kLeft + span * kSvgPixelsPerTimeUnit + 20;
  const long height = kTop + static_cast<long>(s.processor_count) * kRow + kAxis;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"monospace\" font-size=\"10\">\n";
  const auto rows = lanes(s);
  for (std::size_t p = 0; p < rows.size(); ++p) {
    const long y = kTop + static_cast<long>(p) * kRow;
    out << "  <text x=\"4\" y=\"" << y + kBar / 2 + 4 << "\">P" << p << "</text>\n";
    for (TaskId t : rows[p]) {
      const Placement& pl = s.placements[t];
      const long x = kLeft + pl.start * kSvgPixelsPerTimeUnit;
      const long w = (pl.finish - pl.start) * kSvgPixelsPerTimeUnit;
      out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << kBar
          << "\" fill=\"#9ecae1\" stroke=\"#3182bd\"><title>t" << t << " [" << pl.start << ", "
          << pl.finish << ")</title></rect>\n";
      out << "  <text x=\"" << x + 2 << "\" y=\"" << y + kBar / 2 + 4 << "\">t" << t
          << "</text>\n";
    }
  }
  const long axis_y = kTop + static_cast<long>(s.processor_count) * kRow;
  out << "  <line x1=\"" << kLeft << "\" y1=\"" << axis_y << "\" x2=\""
      << kLeft + span * kSvgPixelsPerTimeUnit << "\" y2=\"" << axis_y << "\" stroke=\"black\"/>\n";
  out << "  <text x=\"" << kLeft << "\" y=\"" << axis_y + 14 << "\">0</text>\n";
  out << "  <text x=\"" << kLeft + span * kSvgPixelsPerTimeUnit << "\" y=\"" << axis_y + 14
      << "\" text-anchor=\"end\">" << s.makespan << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace tgsched
