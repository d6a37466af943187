#include "minfact/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace minfact::io {

json to_json(const Factorization& f) {
  json j;
  j["schema"] = kSchemaVersion;
  j["n"] = f.n();
  json arr = json::array();
  for (const auto& t : f.factors()) arr.push_back({t.a, t.b});
  j["factors"] = arr;
  return j;
}

Factorization factorization_from_json(const json& j) {
  std::vector<Transposition> ts;
  for (const auto& e : j.at("factors")) ts.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Factorization(j.at("n").get<int>(), std::move(ts));
}

json to_json(const NonCrossingPartition& p) {
  json j;
  j["schema"] = kSchemaVersion;
  j["n"] = p.n();
  j["blocks"] = p.blocks();
  return j;
}

NonCrossingPartition ncp_from_json(const json& j) {
  return NonCrossingPartition(j.at("n").get<int>(), j.at("blocks").get<std::vector<std::vector<int>>>());
}

json to_json(const BiTypeTree& t) {
  json j;
  j["schema"] = kSchemaVersion;
  j["parents"] = t.parents();
  j["order"] = "depth-first";
  return j;
}

BiTypeTree tree_from_json(const json& j) { return BiTypeTree(j.at("parents").get<std::vector<int>>()); }

json to_json(const PhiCode& c) {
  json j;
  j["H"] = c.H;
  j["W"] = c.W;
  return j;
}

json to_json(const OffspringParams& p) {
  json j;
  j["schema"] = kSchemaVersion;
  j["m"] = p.m;
  j["a"] = p.a;
  j["b"] = p.b;
  j["variance"] = p.variance;
  j["residual"] = p.residual;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

std::string fmt_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string path_csv(const SampledPath& p) {
  std::string out = csv_row({"t", "value"});
  for (std::size_t i = 0; i < p.size(); ++i) out += csv_row({fmt_double(p.grid[i]), fmt_double(p.values[i])});
  return out;
}

std::string chords_csv(const Lamination& l) {
  std::string out = csv_row({"s", "t"});
  for (const auto& c : l.chords) out += csv_row({fmt_double(c.s), fmt_double(c.t)});
  return out;
}

std::string render_svg(const Lamination& l, const SvgStyle& style) {
  const double half = style.size / 2.0;
  const double r = half * 0.95;
  double stroke = style.stroke;
  if (l.n > 3) stroke = style.stroke / std::log(static_cast<double>(l.n)) * 2.0;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.size << "\" height=\"" << style.size
     << "\" viewBox=\"0 0 " << style.size << ' ' << style.size << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<circle cx=\"" << fmt_double(half, 8) << "\" cy=\"" << fmt_double(half, 8) << "\" r=\"" << fmt_double(r, 8)
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt_double(style.stroke, 6) << "\"/>\n";
  // SVG y grows downwards, so the point exp(-2 pi i s) maps to (cos, +sin) on screen.
  for (const auto& c : l.chords) {
    const Point p = point_at(c.s), q = point_at(c.t);
    os << "<line x1=\"" << fmt_double(half + r * p.x, 8) << "\" y1=\"" << fmt_double(half - r * p.y, 8) << "\" x2=\""
       << fmt_double(half + r * q.x, 8) << "\" y2=\"" << fmt_double(half - r * q.y, 8)
       << "\" stroke=\"#1f4e9c\" stroke-width=\"" << fmt_double(stroke, 6) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace minfact::io
