// SPDX-License-Identifier: Apache-2.0
//
// phasegain: beamforming gain with nonideal phase shifters
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "phasegain/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "phasegain/error.hpp"

namespace phasegain::io {

namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

double number_field(const json& j, const char* key) {
  if (!j.contains(key)) parse_error(std::string("set descriptor: missing \"") + key + "\"");
  if (!j.at(key).is_number()) parse_error(std::string("set descriptor: \"") + key + "\" must be a number");
  return j.at(key).get<double>();
}

Complex pair_to_complex(const json& p, const char* what) {
  if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
    parse_error(std::string(what) + ": expected [re, im]");
  }
  return {p[0].get<double>(), p[1].get<double>()};
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

std::vector<Complex> point_list(const json& j, const char* what) {
  if (!j.contains("points") || !j.at("points").is_array()) parse_error(std::string(what) + ": missing \"points\" array");
  std::vector<Complex> pts;
  for (const auto& p : j.at("points")) pts.push_back(pair_to_complex(p, what));
  return pts;
}

json points_json(const std::vector<Complex>& pts) {
  json arr = json::array();
  for (const Complex& p : pts) arr.push_back(complex_to_json(p));
  return arr;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view field, std::size_t line_no) {
  field = trim(field);
  // std::from_chars does not accept a leading '+'.
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    parse_error("channel csv line " + std::to_string(line_no) + ": bad number '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

FeasibleSet set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    parse_error("set descriptor: expected an object with a string \"type\"");
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "regular") {
    if (!j.contains("M") || !j.at("M").is_number_integer()) parse_error("set descriptor: \"M\" must be an integer");
    return FeasibleSet::regular(j.at("M").get<int>());
  }
  if (type == "onoff") return FeasibleSet::onoff();
  if (type == "arc") {
    const double radius = j.contains("radius") ? number_field(j, "radius") : 1.0;
    return FeasibleSet::arc(number_field(j, "phi_min"), number_field(j, "phi_max"), radius);
  }
  if (type == "circle") {
    if (!j.contains("center")) parse_error("set descriptor: missing \"center\"");
    return FeasibleSet::shifted_circle(pair_to_complex(j.at("center"), "circle center"), number_field(j, "radius"));
  }
  if (type == "ris") return FeasibleSet::ris_lorentz(number_field(j, "alpha"), number_field(j, "beta"));
  if (type == "discrete") return FeasibleSet::discrete(point_list(j, "discrete set"));
  if (type == "samples") return FeasibleSet::samples(point_list(j, "sampled set"));
  if (type == "polar") {
    std::vector<std::pair<double, double>> md;
    for (Complex p : point_list(j, "polar set")) md.emplace_back(p.real(), p.imag());
    return FeasibleSet::discrete_polar(md);
  }
  parse_error("set descriptor: unknown type \"" + type + "\"");
}

FeasibleSet parse_set(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) parse_error("set descriptor: malformed JSON");
  return set_from_json(j);
}

json to_json(const FeasibleSet& set) {
  return std::visit(overloaded{
                        [](const DiscreteSet& s) { return json{{"type", "discrete"}, {"points", points_json(s.points)}}; },
                        [](const RegularPolygonSet& s) { return json{{"type", "regular"}, {"M", s.M}}; },
                        [](const OnOffSet&) { return json{{"type", "onoff"}}; },
                        [](const ArcSet& s) {
                          return json{{"type", "arc"}, {"phi_min", s.phi_min}, {"phi_max", s.phi_max}, {"radius", s.radius}};
                        },
                        [](const ShiftedCircleSet& s) {
                          return json{{"type", "circle"}, {"center", complex_to_json(s.center)}, {"radius", s.radius}};
                        },
                        [](const RisLorentzSet& s) { return json{{"type", "ris"}, {"alpha", s.alpha}, {"beta", s.beta}}; },
                        [](const SampledSet& s) { return json{{"type", "samples"}, {"points", points_json(s.points)}}; },
                    },
                    set.variant());
}

PhasorChannel parse_channel_csv(std::istream& in) {
  PhasorChannel ch;
  std::string line;
  std::size_t line_no = 0;
  bool first_data = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = t.find(',', start);
      fields.push_back(t.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }

    if (trim(fields[0]) == "direct") {
      if (!first_data) parse_error("channel csv line " + std::to_string(line_no) + ": direct must be the first entry");
      if (fields.size() != 3) parse_error("channel csv line " + std::to_string(line_no) + ": expected direct,re,im");
      ch.direct = Complex{parse_double(fields[1], line_no), parse_double(fields[2], line_no)};
    } else {
      if (fields.size() != 2) parse_error("channel csv line " + std::to_string(line_no) + ": expected re,im");
      ch.coefficients.emplace_back(parse_double(fields[0], line_no), parse_double(fields[1], line_no));
    }
    first_data = false;
  }
  if (ch.coefficients.empty()) parse_error("channel csv: no coefficients");
  return ch;
}

PhasorChannel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("h") || !j.at("h").is_array()) parse_error("channel json: missing \"h\" array");
  PhasorChannel ch;
  for (const auto& p : j.at("h")) ch.coefficients.push_back(pair_to_complex(p, "channel json h"));
  if (j.contains("direct") && !j.at("direct").is_null()) ch.direct = pair_to_complex(j.at("direct"), "channel json direct");
  if (ch.coefficients.empty()) parse_error("channel json: no coefficients");
  return ch;
}

PhasorChannel load_channel(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open channel file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) parse_error("channel json: malformed JSON in " + path.string());
    return channel_from_json(j);
  }
  std::istringstream is(text);
  return parse_channel_csv(is);
}

json to_json(const PhasorChannel& ch) {
  json j{{"h", points_json(ch.coefficients)}};
  if (ch.direct) j["direct"] = complex_to_json(*ch.direct);
  return j;
}

json to_json(const BoundReport& r) {
  json j{
      {"perimeter", r.perimeter},
      {"best_constant", r.best_constant},
      {"shortfall_db", r.shortfall_db ? json(*r.shortfall_db) : json(nullptr)},
      {"crude_constant", r.crude_constant},
      {"hull_vertex_count", r.hull_vertex_count},
      {"hull_vertices", points_json(r.hull_vertices)},
  };
  if (r.refined_constant) {
    j["refined_constant"] = *r.refined_constant;
    j["n"] = *r.refined_n;
  }
  return j;
}

json to_json(const BeamformingSolution& s) {
  return json{
      {"method", std::string(to_string(s.method))},
      {"weights", points_json(s.weights)},
      {"gain", s.gain},
      {"ideal_gain", s.ideal_gain},
      {"ratio", s.ratio},
  };
}

json to_json(const FadingRecord& r) {
  json p = json::object();
  for (const auto& [k, v] : r.p_norm_estimates) p[std::to_string(k)] = v;
  return json{
      {"N", r.N},
      {"mean_normalized_gain", r.mean_normalized_gain},
      {"std_normalized_gain", r.std_normalized_gain},
      {"target", r.target},
      {"mean_ratio_to_ideal", r.mean_ratio_to_ideal},
      {"p_norm_estimates", p},
  };
}

void write_rows_csv(std::ostream& out, std::span<const TrialRow> rows) {
  out << "N,trial,gain,ideal_gain,ratio\n";
  const auto old_precision = out.precision(17);
  for (const TrialRow& r : rows) {
    out << r.N << ',' << r.trial << ',' << r.gain << ',' << r.ideal_gain << ',' << r.ratio << '\n';
  }
  out.precision(old_precision);
}

}  // namespace phasegain::io
