#include "htc/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace htc {

namespace {

struct Bounds {
  int r_max = 1;
  int i_max = 0;
};

Bounds bounds(const Diagram& d) {
  Bounds b;
  for (const auto& p : d.points()) {
    b.r_max = std::max(b.r_max, p.r);
    b.i_max = std::max(b.i_max, std::abs(p.i));
  }
  return b;
}

char glyph(const std::vector<int>& ks) {
  if (ks.empty()) return '.';
  if (ks.size() == 1) return '#';
  return ks.size() < 10 ? static_cast<char>('0' + ks.size()) : '+';
}

}  // namespace

std::string render_ascii(const Diagram& d) {
  const Bounds b = bounds(d);
  const int label_width = static_cast<int>(std::to_string(b.i_max).size()) + 1;
  const int col = static_cast<int>(std::to_string(b.r_max).size()) + 1;
  std::ostringstream os;
  for (int i = b.i_max; i >= -b.i_max; --i) {
    std::string label = i > 0 ? "+" + std::to_string(i) : std::to_string(i);
    os << std::string(static_cast<std::size_t>(label_width - static_cast<int>(label.size())), ' ') << label << " |";
    for (int r = 1; r <= b.r_max; ++r)
      os << std::string(static_cast<std::size_t>(col - 1), ' ') << glyph(d.factors_at({r, i}));
    os << '\n';
  }
  os << std::string(static_cast<std::size_t>(label_width + 1), ' ') << '+'
     << std::string(static_cast<std::size_t>(col * b.r_max), '-') << "> r\n";
  os << std::string(static_cast<std::size_t>(label_width + 2), ' ');
  for (int r = 1; r <= b.r_max; ++r) {
    const auto s = std::to_string(r);
    os << std::string(static_cast<std::size_t>(col - static_cast<int>(s.size())), ' ') << s;
  }
  os << '\n';
  return os.str();
}

std::string render_svg(const Diagram& d, int cell) {
  const Bounds b = bounds(d);
  const int margin = cell;
  const int width = (b.r_max + 1) * cell + 2 * margin;
  const int height = (2 * b.i_max + 1) * cell + 2 * margin;
  auto x_of = [&](int r) { return margin + r * cell; };
  auto y_of = [&](int i) { return margin + (b.i_max - i) * cell + cell / 2; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "  <line x1=\"" << margin << "\" y1=\"" << y_of(0) << "\" x2=\"" << width - margin / 2 << "\" y2=\"" << y_of(0)
     << "\" stroke=\"#888\"/>\n";
  os << "  <text x=\"" << width - margin / 2 << "\" y=\"" << y_of(0) - 4 << "\" font-size=\"12\">r</text>\n";
  for (int r = 1; r <= b.r_max; ++r)
    os << "  <text x=\"" << x_of(r) << "\" y=\"" << height - margin / 3 << "\" font-size=\"10\" text-anchor=\"middle\">"
       << r << "</text>\n";
  for (const auto& [p, ks] : d.annotations()) {
    const int half = cell * 2 / 5;
    os << "  <rect x=\"" << x_of(p.r) - half << "\" y=\"" << y_of(p.i) - half << "\" width=\"" << 2 * half
       << "\" height=\"" << 2 * half << "\" fill=\"" << (ks.size() > 1 ? "#6a8fd0" : "#333") << "\"/>\n";
    if (ks.size() > 1) {
      std::string label;
      for (std::size_t n = 0; n < ks.size(); ++n) label += (n ? "," : "") + std::to_string(ks[n]);
      os << "  <text x=\"" << x_of(p.r) << "\" y=\"" << y_of(p.i) + 4 << "\" font-size=\"9\" fill=\"#fff\" "
         << "text-anchor=\"middle\">" << label << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string describe_column(const LocalComponent& c, int r) {
  const Diagram d = superpose(c);
  std::ostringstream os;
  for (const auto& [p, ks] : d.annotations()) {
    if (p.r != r) continue;
    for (int k : ks) {
      const Constituent con = constituent(c, p, k);
      const auto origin = trace_back(c, p, k);
      os << '(' << p.r << ',' << p.i << ") k=" << k << ": " << con.to_string_with_markers() << "  origin ";
      if (origin) {
        os << '(' << origin->r << ',' << origin->i << ")\n";
      } else {
        os << "none\n";
      }
    }
  }
  return os.str();
}

}  // namespace htc
