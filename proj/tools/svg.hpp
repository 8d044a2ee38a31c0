#pragma once

#include <functional>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bary/stepfun.hpp"

namespace bary {

// Minimal SVG writer for step-function plots: one polyline per series,
// axis ticks every 0.1 on x and at round values on y.
class SvgPlot {
 public:
  SvgPlot(double ymax) : ymax_(ymax) {}

  void add_step(const StepFunction& f, const std::string& color) {
    std::ostringstream pts;
    const auto& v = f.values();
    double n = static_cast<double>(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
      pts << px(k / n) << "," << py(v[k]) << " ";
      pts << px((k + 1) / n) << "," << py(v[k]) << " ";
    }
    polylines_.push_back({pts.str(), color});
  }

  void add_curve(const std::function<double(double)>& f,
                 const std::string& color, int samples = 400) {
    std::ostringstream pts;
    for (int i = 0; i <= samples; ++i) {
      double x = static_cast<double>(i) / samples;
      pts << px(x) << "," << py(f(x)) << " ";
    }
    polylines_.push_back({pts.str(), color});
  }

  void write(const std::string& path) const {
    std::ofstream out(path);
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kw
        << "' height='" << kh << "'>\n";
    out << "<rect width='" << kw << "' height='" << kh
        << "' fill='white'/>\n";
    for (int i = 0; i <= 10; ++i) {
      double x = px(i / 10.0);
      out << "<line x1='" << x << "' y1='" << py(0) << "' x2='" << x
          << "' y2='" << py(0) + 4 << "' stroke='black'/>\n";
      out << "<text x='" << x - 8 << "' y='" << py(0) + 16
          << "' font-size='10'>" << i / 10.0 << "</text>\n";
    }
    int ticks = 8;
    for (int i = 0; i <= ticks; ++i) {
      double y = ymax_ * i / ticks;
      out << "<line x1='" << px(0) - 4 << "' y1='" << py(y) << "' x2='"
          << px(0) << "' y2='" << py(y) << "' stroke='black'/>\n";
      out << "<text x='2' y='" << py(y) + 3 << "' font-size='10'>" << y
          << "</text>\n";
    }
    out << "<line x1='" << px(0) << "' y1='" << py(0) << "' x2='" << px(1)
        << "' y2='" << py(0) << "' stroke='black'/>\n";
    out << "<line x1='" << px(0) << "' y1='" << py(0) << "' x2='" << px(0)
        << "' y2='" << py(ymax_) << "' stroke='black'/>\n";
    for (const auto& [pts, color] : polylines_)
      out << "<polyline points='" << pts << "' fill='none' stroke='" << color
          << "' stroke-width='1'/>\n";
    out << "</svg>\n";
  }

 private:
  static constexpr double kw = 640, kh = 480, margin = 40;
  double px(double x) const { return margin + x * (kw - 2 * margin); }
  double py(double y) const {
    return kh - margin - y / ymax_ * (kh - 2 * margin);
  }
  double ymax_;
  std::vector<std::pair<std::string, std::string>> polylines_;
};

}  // namespace bary
