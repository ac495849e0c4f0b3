#include <bsfan/expr.hpp>
#include <bsfan/io.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace bsfan {

namespace {

using Json = nlohmann::ordered_json;

Json ray_json(const SlopeDirection& d) { return Json::array({d.a(), d.b()}); }

constexpr double kOriginX = 60.0;
constexpr double kOriginY = 440.0;
constexpr double kRadius = 360.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double angle(const SlopeDirection& d) {
  return std::atan2(static_cast<double>(d.b()), static_cast<double>(d.a()));
}

std::pair<double, double> polar(double theta, double r) {
  return {kOriginX + r * std::cos(theta), kOriginY - r * std::sin(theta)};
}

const char* kFills[] = {"#dbe9f6", "#f6e3cf", "#dcefd8", "#eadcf2", "#f5f0c8", "#d6efee"};

}  // namespace

std::string fan_to_json(const VFan& fan) {
  Json j;
  j["n"] = fan.n;
  j["p"] = fan.p;
  Json cones = Json::array();
  for (const auto& c : fan.cones) {
    Json basis = Json::array();
    for (const auto& q : c.basis.elements()) basis.push_back(format_operator(q));
    cones.push_back({{"lower", ray_json(c.cone.lower)},
                     {"upper", ray_json(c.cone.upper)},
                     {"lower_closed", c.cone.lower_closed},
                     {"upper_closed", c.cone.upper_closed},
                     {"basis", basis},
                     {"kappa_sigma", c.kappa_sigma}});
  }
  j["cones"] = cones;
  Json skel = Json::array();
  for (const auto& d : fan.skeleton) skel.push_back(ray_json(d));
  j["skeleton"] = skel;
  if (fan.partial) {
    j["truncated"] = true;
  } else {
    j["kappa1"] = kappa1(fan).kappa1;
  }
  return j.dump(2) + "\n";
}

std::string fan_to_svg(const VFan& fan) {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";
  s << "<rect width=\"480\" height=\"480\" fill=\"white\"/>\n";
  std::size_t shade = 0;
  for (const auto& c : fan.cones) {
    const double a0 = angle(c.cone.lower);
    const double a1 = angle(c.cone.upper);
    const std::string label =
        "|G|=" + std::to_string(c.basis.size()) + " k=" + std::to_string(c.kappa_sigma);
    if (c.cone.is_ray()) {
      const auto [x, y] = polar(a0, kRadius);
      s << "<line x1=\"" << fmt(kOriginX) << "\" y1=\"" << fmt(kOriginY) << "\" x2=\"" << fmt(x)
        << "\" y2=\"" << fmt(y) << "\" stroke=\"#b03030\" stroke-width=\"2\"/>\n";
      const auto [lx, ly] = polar(a0, kRadius * 0.55);
      s << "<text x=\"" << fmt(lx + 4) << "\" y=\"" << fmt(ly - 4)
        << "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#b03030\">" << label << "</text>\n";
      continue;
    }
    const auto [x0, y0] = polar(a0, kRadius);
    const auto [x1, y1] = polar(a1, kRadius);
    s << "<path d=\"M " << fmt(kOriginX) << ' ' << fmt(kOriginY) << " L " << fmt(x0) << ' ' << fmt(y0)
      << " A " << fmt(kRadius) << ' ' << fmt(kRadius) << " 0 0 0 " << fmt(x1) << ' ' << fmt(y1)
      << " Z\" fill=\"" << kFills[shade++ % std::size(kFills)] << "\" stroke=\"#666\" stroke-width=\"0.5\"/>\n";
    const auto [lx, ly] = polar((a0 + a1) / 2, kRadius * 0.7);
    s << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
      << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << label << "</text>\n";
  }
  for (const auto& d : fan.skeleton) {
    const double a = angle(d);
    const auto [x, y] = polar(a, kRadius);
    s << "<line x1=\"" << fmt(kOriginX) << "\" y1=\"" << fmt(kOriginY) << "\" x2=\"" << fmt(x) << "\" y2=\""
      << fmt(y) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    const auto [lx, ly] = polar(a, kRadius + 16);
    s << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << d.to_string()
      << "</text>\n";
  }
  s << "<text x=\"" << fmt(kOriginX) << "\" y=\"470\" font-family=\"sans-serif\" font-size=\"12\">"
    << (fan.partial ? "partial fan" : "kappa1 = " + std::to_string(kappa1(fan).kappa1)) << "</text>\n";
  s << "</svg>\n";
  return s.str();
}

}  // namespace bsfan
