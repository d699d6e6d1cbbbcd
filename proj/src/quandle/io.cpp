#include "qf/quandle/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "qf/error.hpp"

namespace qf {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// One CSV record; handles quoted cells with doubled quotes.
std::vector<std::string> split_csv(const std::string& line, std::size_t lineno) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (quoted) fail(ErrorCode::ParseError, "unterminated quote on line " + std::to_string(lineno), std::to_string(lineno));
  cells.push_back(cur);
  for (auto& cell : cells) {
    const auto a = cell.find_first_not_of(' ');
    const auto b = cell.find_last_not_of(' ');
    cell = a == std::string::npos ? std::string{} : cell.substr(a, b - a + 1);
  }
  return cells;
}

}  // namespace

std::string quandle_to_csv(const FiniteQuandle& q) {
  std::ostringstream os;
  os << "\"\"";
  for (const auto& l : q.labels()) os << "," << quote(l);
  os << "\n";
  for (FiniteQuandle::Element a = 0; a < q.size(); ++a) {
    os << quote(q.label(a));
    for (FiniteQuandle::Element b = 0; b < q.size(); ++b) os << "," << quote(q.label(q.op(a, b)));
    os << "\n";
  }
  return os.str();
}

FiniteQuandle quandle_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<std::string>> rows;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \r\t") == std::string::npos) continue;
    rows.push_back(split_csv(line, lineno));
  }
  if (rows.empty()) fail(ErrorCode::ParseError, "empty quandle table");
  std::vector<std::string> labels(rows[0].begin() + 1, rows[0].end());
  const std::size_t n = labels.size();
  if (rows.size() != n + 1) fail(ErrorCode::ParseError, "expected " + std::to_string(n) + " table rows");
  std::map<std::string, FiniteQuandle::Element> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(labels[i], static_cast<FiniteQuandle::Element>(i)).second) {
      fail(ErrorCode::ParseError, "duplicate label " + labels[i], labels[i]);
    }
  }
  std::vector<FiniteQuandle::Element> op(n * n);
  for (std::size_t r = 1; r <= n; ++r) {
    const auto& row = rows[r];
    if (row.size() != n + 1) fail(ErrorCode::ParseError, "row " + std::to_string(r) + " has the wrong width");
    auto a = index.find(row[0]);
    if (a == index.end() || a->second != r - 1) {
      fail(ErrorCode::ParseError, "row labels must follow the header order", row[0]);
    }
    for (std::size_t c = 0; c < n; ++c) {
      auto v = index.find(row[c + 1]);
      if (v == index.end()) fail(ErrorCode::ParseError, "unknown label " + row[c + 1], row[c + 1]);
      op[(r - 1) * n + c] = v->second;
    }
  }
  return validate_quandle(std::move(labels), std::move(op));
}

nlohmann::json quandle_to_json(const FiniteQuandle& q) {
  nlohmann::json rows = nlohmann::json::array();
  for (FiniteQuandle::Element a = 0; a < q.size(); ++a) {
    std::vector<FiniteQuandle::Element> row;
    for (FiniteQuandle::Element b = 0; b < q.size(); ++b) row.push_back(q.op(a, b));
    rows.push_back(row);
  }
  return {{"labels", q.labels()}, {"op", rows}};
}

FiniteQuandle quandle_from_json(const nlohmann::json& j) {
  try {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    const std::size_t n = labels.size();
    const auto& rows = j.at("op");
    if (rows.size() != n) fail(ErrorCode::ParseError, "op must have one row per label");
    std::vector<FiniteQuandle::Element> op;
    for (const auto& row : rows) {
      auto r = row.get<std::vector<FiniteQuandle::Element>>();
      if (r.size() != n) fail(ErrorCode::ParseError, "op rows must have one entry per label");
      op.insert(op.end(), r.begin(), r.end());
    }
    return validate_quandle(std::move(labels), std::move(op));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("quandle JSON: ") + e.what());
  }
}

FiniteQuandle load_quandle_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::ParseError, "cannot open " + path, path);
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return quandle_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      fail(ErrorCode::ParseError, std::string("quandle JSON: ") + e.what(), path);
    }
  }
  return quandle_from_csv(text);
}

}  // namespace qf
