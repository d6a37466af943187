#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "minfact/lamination.hpp"
#include "minfact/levy.hpp"
#include "minfact/ncp.hpp"
#include "minfact/offspring.hpp"
#include "minfact/path_codec.hpp"
#include "minfact/perm.hpp"
#include "minfact/tree.hpp"

namespace minfact::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "minfact/1";

json to_json(const Factorization& f);
Factorization factorization_from_json(const json& j);

json to_json(const NonCrossingPartition& p);
NonCrossingPartition ncp_from_json(const json& j);

json to_json(const BiTypeTree& t);
BiTypeTree tree_from_json(const json& j);

json to_json(const PhiCode& c);
json to_json(const OffspringParams& p);

// RFC 4180 field quoting.
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);
std::string fmt_double(double v, int digits = 10);

std::string path_csv(const SampledPath& p);
std::string chords_csv(const Lamination& l);

struct SvgStyle {
  int size = 1000;
  double stroke = 1.0;
};

// Unit circle plus chords; stroke scaled by 1/log(n) for n > e.
std::string render_svg(const Lamination& l, const SvgStyle& style = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace minfact::io
