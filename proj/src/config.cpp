#include "ustar/config.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <json.hpp>

namespace ustar {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  const std::string t = strip(s);
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(t, &used);
    if (used != t.size()) throw std::invalid_argument(what);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse " + what + ": '" + s + "'");
  }
}

}  // namespace

GroupSpec make_group(const JobConfig& cfg) {
  return GroupSpec(cfg.p, cfg.orders, cfg.size_guard);
}

std::vector<std::int64_t> parse_order_list(const std::string& text) {
  std::vector<std::int64_t> orders;
  for (const std::string& part : split(text, ','))
    orders.push_back(parse_int(part, "generator order"));
  return orders;
}

InvolutionSpec parse_involution(const GroupSpec& g, const std::string& text) {
  const std::string s = strip(text);
  if (s == "canonical") return InvolutionSpec::canonical(g);
  if (s == "identity") return InvolutionSpec::identity(g);
  if (s.rfind("swap(", 0) == 0 && s.back() == ')') {
    const std::vector<std::string> parts = split(s.substr(5, s.size() - 6), ',');
    if (parts.size() != 2) throw std::invalid_argument("swap expects two generator indices");
    const std::int64_t i = parse_int(parts[0], "swap index");
    const std::int64_t j = parse_int(parts[1], "swap index");
    if (i < 1 || j < 1 || i > g.rank() || j > g.rank() || i == j)
      throw std::invalid_argument("swap indices must be distinct generators 1.." +
                                  std::to_string(g.rank()));
    return InvolutionSpec::swap_generators(g, static_cast<int>(i - 1),
                                           static_cast<int>(j - 1));
  }
  // explicit "a1->...;a2->..." form
  std::vector<ExponentTuple> images(static_cast<std::size_t>(g.rank()));
  std::vector<bool> seen(static_cast<std::size_t>(g.rank()), false);
  for (const std::string& raw : split(s, ';')) {
    const std::string entry = strip(raw);
    if (entry.empty()) continue;
    const std::size_t arrow = entry.find("->");
    if (arrow == std::string::npos || entry.empty() || entry[0] != 'a')
      throw std::invalid_argument("expected 'a<k>-><exponents>' in involution: '" + entry + "'");
    const std::int64_t k = parse_int(entry.substr(1, arrow - 1), "generator index");
    if (k < 1 || k > g.rank())
      throw std::invalid_argument("generator index out of range in involution");
    if (seen[static_cast<std::size_t>(k - 1)])
      throw std::invalid_argument("duplicate generator index in involution");
    seen[static_cast<std::size_t>(k - 1)] = true;
    ExponentTuple image;
    for (const std::string& comp : split(entry.substr(arrow + 2), ','))
      image.push_back(parse_int(comp, "exponent"));
    if (static_cast<int>(image.size()) != g.rank())
      throw std::invalid_argument("involution image must list one exponent per generator");
    images[static_cast<std::size_t>(k - 1)] = g.reduce(image);
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw std::invalid_argument("involution must give an image for every generator");
  return InvolutionSpec(g, std::move(images));
}

std::string render_involution(const InvolutionSpec& eta) {
  const GroupSpec& g = eta.group();
  if (eta.is_identity_map()) return "identity";
  if (eta == InvolutionSpec::canonical(g)) return "canonical";
  // swap pattern
  for (int i = 0; i < g.rank(); ++i)
    for (int j = i + 1; j < g.rank(); ++j) {
      if (g.orders()[i] != g.orders()[j]) continue;
      try {
        if (eta == InvolutionSpec::swap_generators(g, i, j))
          return "swap(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      } catch (const std::exception&) {
      }
    }
  std::string s;
  for (int i = 0; i < g.rank(); ++i) {
    if (i) s += ";";
    s += "a" + std::to_string(i + 1) + "->";
    const ExponentTuple& image = eta.images()[static_cast<std::size_t>(i)];
    for (int j = 0; j < g.rank(); ++j) {
      if (j) s += ",";
      s += std::to_string(image[static_cast<std::size_t>(j)]);
    }
  }
  return s;
}

std::string format_name(JobConfig::Format f) {
  return f == JobConfig::Format::Json ? "json" : "text";
}

JobConfig::Format parse_format(const std::string& name) {
  if (name == "text") return JobConfig::Format::Text;
  if (name == "json") return JobConfig::Format::Json;
  throw std::invalid_argument("format must be 'text' or 'json'");
}

std::string config_to_json(const JobConfig& cfg) {
  nlohmann::ordered_json j;
  j["p"] = cfg.p;
  j["orders"] = cfg.orders;
  j["involution"] = cfg.involution;
  j["format"] = format_name(cfg.format);
  j["size_guard"] = cfg.size_guard;
  j["enumeration_cap"] = cfg.enumeration_cap;
  j["combinatorial_cap"] = cfg.combinatorial_cap;
  j["max_i"] = cfg.max_i;
  j["out"] = cfg.out_path;
  return j.dump();
}

JobConfig config_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  JobConfig cfg;
  cfg.p = j.at("p").get<std::int64_t>();
  cfg.orders = j.at("orders").get<std::vector<std::int64_t>>();
  cfg.involution = j.at("involution").get<std::string>();
  cfg.format = parse_format(j.at("format").get<std::string>());
  cfg.size_guard = j.at("size_guard").get<std::int64_t>();
  cfg.enumeration_cap = j.at("enumeration_cap").get<std::int64_t>();
  cfg.combinatorial_cap = j.at("combinatorial_cap").get<std::int64_t>();
  cfg.max_i = j.at("max_i").get<std::int64_t>();
  cfg.out_path = j.at("out").get<std::string>();
  return cfg;
}

}  // namespace ustar
