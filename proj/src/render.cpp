#include "hookcensus/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace hookcensus {

std::string Rgb::hex() const {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

Rgb palette_color(int t) {
  if (t == 0) return {136, 136, 136};
  const double h = std::fmod(137.5 * t, 360.0);
  const double s = 0.65, l = 0.50;
  const double c = (1.0 - std::fabs(2.0 * l - 1.0)) * s;
  const double hp = h / 60.0;
  const double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  if (hp < 1) {
    r = c; g = x;
  } else if (hp < 2) {
    r = x; g = c;
  } else if (hp < 3) {
    g = c; b = x;
  } else if (hp < 4) {
    g = x; b = c;
  } else if (hp < 5) {
    r = x; b = c;
  } else {
    r = c; b = x;
  }
  const double m = l - c / 2.0;
  auto byte = [&](double v) { return static_cast<int>(std::lround(255.0 * (v + m))); };
  return {byte(r), byte(g), byte(b)};
}

char color_char(int t) {
  if (t < 10) return static_cast<char>('0' + t);
  if (t < 36) return static_cast<char>('a' + t - 10);
  return '#';
}

namespace {

std::string header_line(const HookConfiguration& config, const ColoredDiagram& diagram) {
  std::string s = "pi = " + config.pi.to_string() + "  hooks:";
  if (config.hooks.empty()) s += " (none)";
  for (const Hook& h : config.hooks) {
    s += " (" + std::to_string(h.sw) + "," + std::to_string(h.ne) + ")";
  }
  s += "  q = (";
  for (size_t t = 0; t < diagram.q.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(diagram.q[t]);
  }
  s += ")  theta = {";
  for (size_t t = 0; t < diagram.theta.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(diagram.theta[t]);
  }
  s += "}";
  return s;
}

}  // namespace

std::string render_ascii(const HookConfiguration& config, const ColoredDiagram& diagram) {
  const Permutation& pi = config.pi;
  const int n = pi.size();
  std::string out = header_line(config, diagram) + "\n";
  if (n == 0) return out;
  const int cols = 2 * n - 1;
  std::vector<std::string> grid(n, std::string(cols, ' '));
  auto put = [&](int x_col, int y_val, char ch) { grid[n - y_val][x_col - 1] = ch; };
  for (const Hook& h : config.hooks) {
    const int top = pi.at(h.ne);
    for (int y = pi.at(h.sw) + 1; y <= top; ++y) put(2 * h.sw - 1, y, '|');
    for (int c = 2 * h.sw; c <= 2 * h.ne - 2; ++c) grid[n - top][c - 1] = '-';
  }
  for (int i = 1; i <= n; ++i) put(2 * i - 1, pi.at(i), color_char(diagram.color_of[i - 1]));
  for (const auto& row : grid) out += row + "\n";
  return out;
}

std::string render_svg(const std::vector<std::pair<HookConfiguration, ColoredDiagram>>& items) {
  const int unit = 36;
  const int margin = 30;
  const int header = 24;
  int width = 2 * margin;
  int height = margin;
  for (const auto& [config, diagram] : items) {
    const int n = config.pi.size();
    width = std::max(width, 2 * margin + (n > 0 ? (n - 1) * unit : 0) + 20);
    height += header + (n > 0 ? (n - 1) * unit : 0) + 2 * margin;
  }
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
       std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  int y_base = margin;
  for (const auto& [config, diagram] : items) {
    const Permutation& pi = config.pi;
    const int n = pi.size();
    auto px = [&](double x) { return margin + (x - 1) * unit; };
    auto py = [&](double y) { return y_base + header + (n - y) * unit; };
    s += "<text x=\"" + std::to_string(margin) + "\" y=\"" + std::to_string(y_base + 12) +
         "\" font-family=\"monospace\" font-size=\"13\">" + header_line(config, diagram) +
         "</text>\n";
    for (int l = 0; l < diagram.m; ++l) {
      const Hook& h = config.hooks[l];
      const std::string col = palette_color(l + 1).hex();
      char buf[256];
      std::snprintf(buf, sizeof buf,
                    "<polyline points=\"%d,%d %d,%d %d,%d\" fill=\"none\" stroke=\"%s\" "
                    "stroke-width=\"2.5\"/>\n",
                    static_cast<int>(px(h.sw)), static_cast<int>(py(pi.at(h.sw))),
                    static_cast<int>(px(h.sw)), static_cast<int>(py(pi.at(h.ne))),
                    static_cast<int>(px(h.ne)), static_cast<int>(py(pi.at(h.ne))), col.c_str());
      s += buf;
    }
    for (int i = 1; i <= n; ++i) {
      const std::string col = palette_color(diagram.color_of[i - 1]).hex();
      char buf[256];
      std::snprintf(buf, sizeof buf,
                    "<circle cx=\"%d\" cy=\"%d\" r=\"11\" fill=\"%s\"/>\n"
                    "<text x=\"%d\" y=\"%d\" font-family=\"monospace\" font-size=\"11\" "
                    "fill=\"white\" text-anchor=\"middle\">%d</text>\n",
                    static_cast<int>(px(i)), static_cast<int>(py(pi.at(i))), col.c_str(),
                    static_cast<int>(px(i)), static_cast<int>(py(pi.at(i))) + 4, pi.at(i));
      s += buf;
    }
    y_base += header + (n > 0 ? (n - 1) * unit : 0) + 2 * margin;
  }
  s += "</svg>\n";
  return s;
}

}  // namespace hookcensus
