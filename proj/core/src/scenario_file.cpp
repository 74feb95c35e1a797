#include "fecheck/scenario_file.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fecheck/errors.hpp"
#include "fecheck/parser.hpp"

namespace fecheck {

namespace {

struct Entry {
  std::string key;
  std::string value;
  std::size_t line;
  std::size_t column;  // of the first value character
};

std::size_t skip_blanks(const std::string& s, std::size_t i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return i;
}

std::string rtrim(std::string s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) s.pop_back();
  return s;
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

int depth_change(const std::string& s) {
  int d = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++d;
    if (c == ')' || c == ']') --d;
  }
  return d;
}

std::vector<Entry> split_entries(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) lines.push_back(strip_comment(line));

  std::vector<Entry> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    std::size_t p = skip_blanks(line, 0);
    if (rtrim(line.substr(p)).empty()) continue;
    const std::size_t key_start = p;
    while (p < line.size() && (std::isalnum(static_cast<unsigned char>(line[p])) || line[p] == '_')) ++p;
    std::string key = line.substr(key_start, p - key_start);
    if (key.empty()) throw ParseError("expected a key", i + 1, key_start + 1);
    if (key == "let") {
      p = skip_blanks(line, p);
      const std::size_t name_start = p;
      while (p < line.size() && (std::isalnum(static_cast<unsigned char>(line[p])) || line[p] == '_')) ++p;
      if (p == name_start) throw ParseError("expected a name after 'let'", i + 1, p + 1);
      key = "let " + line.substr(name_start, p - name_start);
    }
    p = skip_blanks(line, p);
    if (p >= line.size() || line[p] != '=') throw ParseError("expected '=' after '" + key + "'", i + 1, p + 1);
    p = skip_blanks(line, p + 1);
    Entry e{key, line.substr(p), i + 1, p + 1};
    int depth = depth_change(e.value);
    while (depth > 0 && i + 1 < lines.size()) {
      ++i;
      e.value += "\n" + lines[i];
      depth += depth_change(lines[i]);
    }
    e.value = rtrim(e.value);
    if (e.value.empty()) throw ParseError("empty value for '" + key + "'", e.line, e.column);
    out.push_back(std::move(e));
  }
  return out;
}

// Splits on commas outside brackets, tracking where each piece starts.
std::vector<Entry> split_list(const Entry& e) {
  std::vector<Entry> out;
  std::size_t line = e.line;
  std::size_t column = e.column;
  std::string piece;
  std::size_t piece_line = line;
  std::size_t piece_column = column;
  int depth = 0;
  bool started = false;
  auto flush = [&] {
    std::string v = rtrim(piece);
    if (v.empty()) throw ParseError("empty list element", piece_line, piece_column);
    out.push_back(Entry{"", v, piece_line, piece_column});
    piece.clear();
    started = false;
  };
  for (char c : e.value) {
    if (c == ',' && depth == 0) {
      flush();
    } else {
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (!started && c != ' ' && c != '\t' && c != '\n') {
        started = true;
        piece_line = line;
        piece_column = column;
      }
      if (started) piece += c;
    }
    if (c == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  flush();
  return out;
}

}  // namespace

Scenario parse_scenario(std::string_view text, const std::string& default_name) {
  Bindings bindings;
  std::optional<UnaryFn> lhs, rhs;
  Scenario s{default_name, UnaryFn::constant(FieldElem()), UnaryFn::constant(FieldElem()), {}, Outcome::pass};
  std::set<std::string> seen;
  std::optional<Entry> first;
  for (const auto& e : split_entries(text)) {
    if (!first) first = e;
    if (!seen.insert(e.key).second) throw ParseError("duplicate key '" + e.key + "'", e.line, 1);
    if (e.key.rfind("let ", 0) == 0) {
      bindings.insert_or_assign(e.key.substr(4), parse_expression(e.value, bindings, e.line, e.column));
    } else if (e.key == "name") {
      s.name = e.value;
    } else if (e.key == "lhs") {
      lhs = parse_function(e.value, bindings, e.line, e.column);
    } else if (e.key == "rhs") {
      rhs = parse_function(e.value, bindings, e.line, e.column);
    } else if (e.key == "samples") {
      for (const auto& item : split_list(e)) {
        Expression v = parse_expression(item.value, bindings, item.line, item.column);
        const auto* c = std::get_if<FieldElem>(&v);
        if (!c) throw ParseError("samples must be constants", item.line, item.column);
        s.samples.push_back(*c);
      }
    } else if (e.key == "expect") {
      if (e.value == "pass") {
        s.expected = Outcome::pass;
      } else if (e.value == "fail") {
        s.expected = Outcome::fail;
      } else {
        throw ParseError("expect must be 'pass' or 'fail'", e.line, e.column);
      }
    } else {
      throw ParseError("unknown key '" + e.key + "'", e.line, 1);
    }
  }
  if (!lhs) throw ParseError("missing 'lhs'", first ? first->line : 1, 1);
  if (!rhs) throw ParseError("missing 'rhs'", first ? first->line : 1, 1);
  s.lhs = *lhs;
  s.rhs = *rhs;
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str(), path.stem().string());
}

}  // namespace fecheck
