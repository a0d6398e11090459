#include "fdepth/svg.hpp"

#include <cstdio>
#include <sstream>

#include "fdepth/errors.hpp"

namespace fdepth {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kMarginLeft = 56.0;
constexpr double kMarginRight = 16.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 44.0;
constexpr double kBoxWidth = 42.0;

std::string num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

void line(std::ostringstream& out, double x1, double y1, double x2, double y2,
          const char* style) {
  out << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\""
      << num(x2) << "\" y2=\"" << num(y2) << "\" " << style << "/>\n";
}

}  // namespace

std::string boxplot_svg(const std::string& title,
                        std::span<const std::string> labels,
                        std::span<const SummaryStats> boxes, double y_min,
                        double y_max) {
  if (labels.size() != boxes.size() || boxes.empty()) {
    throw InvalidInputError("boxplot needs one label per box");
  }
  if (!(y_max > y_min)) {
    throw InvalidInputError("boxplot y range is empty");
  }
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto y_px = [&](double v) {
    return kMarginTop + (y_max - v) / (y_max - y_min) * plot_h;
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth)
      << "\" height=\"" << num(kHeight) << "\" viewBox=\"0 0 " << num(kWidth)
      << " " << num(kHeight) << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << num(kWidth) << "\" height=\""
      << num(kHeight) << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(kWidth / 2) << "\" y=\"22\" font-size=\"15\" "
         "text-anchor=\"middle\" font-family=\"sans-serif\">"
      << title << "</text>\n";

  // frame and horizontal guides
  out << "<rect x=\"" << num(kMarginLeft) << "\" y=\"" << num(kMarginTop)
      << "\" width=\"" << num(plot_w) << "\" height=\"" << num(plot_h)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  const int tick_count = 4;
  for (int i = 0; i <= tick_count; ++i) {
    const double v = y_min + (y_max - y_min) * i / tick_count;
    const double y = y_px(v);
    line(out, kMarginLeft - 5, y, kMarginLeft, y, "stroke=\"black\"");
    if (i > 0 && i < tick_count) {
      line(out, kMarginLeft, y, kMarginLeft + plot_w, y,
           "stroke=\"#cccccc\" stroke-dasharray=\"4 4\"");
    }
    out << "<text x=\"" << num(kMarginLeft - 9) << "\" y=\"" << num(y + 4)
        << "\" font-size=\"12\" text-anchor=\"end\" "
           "font-family=\"sans-serif\">"
        << num(v) << "</text>\n";
  }

  const double slot = plot_w / static_cast<double>(boxes.size());
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const SummaryStats& b = boxes[i];
    const double cx = kMarginLeft + slot * (static_cast<double>(i) + 0.5);
    const double half = kBoxWidth / 2.0;
    // whiskers with caps
    line(out, cx, y_px(b.min), cx, y_px(b.q1), "stroke=\"black\"");
    line(out, cx, y_px(b.q3), cx, y_px(b.max), "stroke=\"black\"");
    line(out, cx - half / 2, y_px(b.min), cx + half / 2, y_px(b.min),
         "stroke=\"black\"");
    line(out, cx - half / 2, y_px(b.max), cx + half / 2, y_px(b.max),
         "stroke=\"black\"");
    // box and median
    out << "<rect class=\"box\" x=\"" << num(cx - half) << "\" y=\""
        << num(y_px(b.q3)) << "\" width=\"" << num(kBoxWidth) << "\" height=\""
        << num(y_px(b.q1) - y_px(b.q3)) << "\" fill=\"#9ecae1\" "
           "stroke=\"black\"/>\n";
    line(out, cx - half, y_px(b.median), cx + half, y_px(b.median),
         "stroke=\"black\" stroke-width=\"2\"");
    out << "<text x=\"" << num(cx) << "\" y=\"" << num(kHeight - 14)
        << "\" font-size=\"13\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\">"
        << labels[i] << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace fdepth
