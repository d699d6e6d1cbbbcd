#include "qf/link/parse.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "qf/error.hpp"

namespace qf {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg, std::to_string(line));
}

int parse_sign(const std::string& s, std::size_t line) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  fail(ErrorCode::SignError, "line " + std::to_string(line) + ": bad sign '" + s + "'", std::to_string(line));
}

}  // namespace

LinkDiagram parse_link(std::string_view text) {
  std::string name;
  std::vector<CrossingSpec> crossings;
  std::vector<ComponentSpec> components;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) continue;
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (head == "name") {
      if (tokens.size() != 1) parse_fail(lineno, "name takes one token");
      name = tokens[0];
      continue;
    }
    if (head != "X" && head != "C") parse_fail(lineno, "unknown record '" + head + "'");
    if (tokens.empty()) parse_fail(lineno, "missing identifier");
    std::map<std::string, std::string> kv;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const auto eq = tokens[i].find('=');
      if (eq == std::string::npos || eq == 0) parse_fail(lineno, "expected key=value, got '" + tokens[i] + "'");
      if (!kv.emplace(tokens[i].substr(0, eq), tokens[i].substr(eq + 1)).second) {
        parse_fail(lineno, "repeated key '" + tokens[i].substr(0, eq) + "'");
      }
    }
    auto take = [&](const std::string& key, bool required) -> std::string {
      auto it = kv.find(key);
      if (it == kv.end()) {
        if (required) parse_fail(lineno, "missing " + key + "=");
        return {};
      }
      std::string v = it->second;
      kv.erase(it);
      if (required && v.empty()) parse_fail(lineno, "empty " + key + "=");
      return v;
    };
    if (head == "X") {
      CrossingSpec c;
      c.id = tokens[0];
      c.sign = parse_sign(take("sign", true), lineno);
      c.over = take("over", true);
      c.in = take("in", true);
      c.out = take("out", true);
      const std::string normal = take("normal", false);
      if (!normal.empty()) {
        // The over-arc normal points from `in` to `out` exactly at positive crossings.
        int implied = 0;
        if (normal == "in>out") implied = 1;
        else if (normal == "out>in") implied = -1;
        else parse_fail(lineno, "normal must be in>out or out>in");
        if (implied != c.sign) {
          fail(ErrorCode::SignError, "line " + std::to_string(lineno) + ": sign contradicts the declared normal",
               c.id);
        }
      }
      crossings.push_back(std::move(c));
    } else {
      ComponentSpec comp;
      comp.name = tokens[0];
      comp.base = take("base", true);
      const std::string arcs = take("arcs", false);
      comp.arcs = split(arcs, ',');
      components.push_back(std::move(comp));
    }
    if (!kv.empty()) parse_fail(lineno, "unknown key '" + kv.begin()->first + "'");
  }
  if (components.empty()) fail(ErrorCode::TopologyError, "diagram has no components");
  return LinkDiagram::build(name, crossings, components);
}

std::string serialize_link(const LinkDiagram& d) {
  std::ostringstream os;
  if (!d.name().empty()) os << "name " << d.name() << "\n";
  for (const auto& c : d.crossing_specs()) {
    os << "X " << c.id << " sign=" << (c.sign > 0 ? "+" : "-") << " over=" << c.over << " in=" << c.in
       << " out=" << c.out << "\n";
  }
  for (const auto& comp : d.component_specs()) {
    os << "C " << comp.name << " base=" << comp.base << " arcs=";
    for (std::size_t i = 0; i < comp.arcs.size(); ++i) os << (i ? "," : "") << comp.arcs[i];
    os << "\n";
  }
  return os.str();
}

nlohmann::json link_to_json(const LinkDiagram& d) {
  nlohmann::json j;
  j["name"] = d.name();
  j["crossings"] = nlohmann::json::array();
  for (const auto& c : d.crossing_specs()) {
    j["crossings"].push_back({{"id", c.id}, {"sign", c.sign > 0 ? "+" : "-"}, {"over", c.over}, {"in", c.in}, {"out", c.out}});
  }
  j["components"] = nlohmann::json::array();
  for (const auto& comp : d.component_specs()) {
    j["components"].push_back({{"name", comp.name}, {"base", comp.base}, {"arcs", comp.arcs}});
  }
  return j;
}

LinkDiagram link_from_json(const nlohmann::json& j) {
  try {
    std::vector<CrossingSpec> crossings;
    for (const auto& c : j.at("crossings")) {
      CrossingSpec s;
      s.id = c.at("id").get<std::string>();
      const auto& sign = c.at("sign");
      if (sign.is_number_integer()) {
        const int v = sign.get<int>();
        if (v != 1 && v != -1) fail(ErrorCode::SignError, "bad sign in crossing " + s.id, s.id);
        s.sign = v;
      } else {
        s.sign = parse_sign(sign.get<std::string>(), 0);
      }
      s.over = c.at("over").get<std::string>();
      s.in = c.at("in").get<std::string>();
      s.out = c.at("out").get<std::string>();
      crossings.push_back(std::move(s));
    }
    std::vector<ComponentSpec> comps;
    for (const auto& c : j.at("components")) {
      ComponentSpec s;
      s.name = c.at("name").get<std::string>();
      s.base = c.at("base").get<std::string>();
      if (c.contains("arcs")) s.arcs = c.at("arcs").get<std::vector<std::string>>();
      comps.push_back(std::move(s));
    }
    if (comps.empty()) fail(ErrorCode::TopologyError, "diagram has no components");
    return LinkDiagram::build(j.value("name", std::string{}), crossings, comps);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("link JSON: ") + e.what());
  }
}

LinkDiagram load_link_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::ParseError, "cannot open " + path, path);
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return link_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      fail(ErrorCode::ParseError, std::string("link JSON: ") + e.what(), path);
    }
  }
  return parse_link(text);
}

}  // namespace qf
