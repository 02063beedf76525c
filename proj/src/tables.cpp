#include "isg/tables.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace isg {

namespace {

struct Line {
  int                      no;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::string const& text) {
  std::vector<Line> out;
  std::istringstream ss(text);
  std::string        raw;
  int                no = 0;
  while (std::getline(ss, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) {
      raw.erase(hash);
    }
    while (!raw.empty() && (raw.back() == '\r' || raw.back() == '\n')) {
      raw.pop_back();
    }
    std::istringstream       ls(raw);
    std::vector<std::string> toks;
    std::string              t;
    while (ls >> t) {
      toks.push_back(t);
    }
    if (!toks.empty()) {
      out.push_back({no, std::move(toks)});
    }
  }
  return out;
}

void validate_name(std::string const& name, int line) {
  if (name == ".") {
    throw ParseError(line, "'.' is reserved for undefined products");
  }
  if (name.find("->") != std::string::npos) {
    throw ParseError(line, "element name '" + name + "' may not contain '->'");
  }
  if (name.back() == ':') {
    throw ParseError(line, "element name '" + name + "' may not end with ':'");
  }
}

}  // namespace

ParseError::ParseError(int line_, std::string const& msg)
    : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
      line(line_) {}

Structure parse_structure(std::string const& text) {
  auto lines = significant_lines(text);
  if (lines.empty() || lines.front().tokens.front() != "elements:") {
    int no = lines.empty() ? 1 : lines.front().no;
    throw ParseError(no, "expected 'elements:' header");
  }

  std::vector<std::string>         names(lines.front().tokens.begin() + 1,
                                         lines.front().tokens.end());
  std::map<std::string, ElementId> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    validate_name(names[i], lines.front().no);
    if (!index.emplace(names[i], static_cast<ElementId>(i)).second) {
      throw ParseError(lines.front().no,
                       "duplicate element name '" + names[i] + "'");
    }
  }
  std::size_t n = names.size();
  if (n > MAX_ORDER) {
    throw ParseError(lines.front().no,
                     "structure order " + std::to_string(n) + " exceeds cap "
                         + std::to_string(MAX_ORDER));
  }

  auto lookup = [&](std::string const& sym, int line) {
    auto it = index.find(sym);
    if (it == index.end()) {
      throw ParseError(line, "unknown symbol '" + sym + "'");
    }
    return it->second;
  };

  DesignatedElements     designated;
  std::vector<ElementId> inverse;
  bool                   have_inverse = false;
  std::size_t            cursor       = 1;
  int                    last_line    = lines.front().no;

  // headers up to "table:"
  while (true) {
    if (cursor >= lines.size()) {
      throw ParseError(last_line + 1, "expected 'table:' header");
    }
    Line const& line = lines[cursor];
    last_line        = line.no;
    auto const& key  = line.tokens.front();
    if (key == "table:") {
      if (line.tokens.size() != 1) {
        throw ParseError(line.no, "table rows start on the line after 'table:'");
      }
      ++cursor;
      break;
    } else if (key == "zero:" || key == "unit:") {
      if (line.tokens.size() != 2) {
        throw ParseError(line.no, "'" + key + "' expects exactly one symbol");
      }
      auto& slot = (key == "zero:") ? designated.zero : designated.unit;
      if (slot.has_value()) {
        throw ParseError(line.no, "duplicate '" + key + "' header");
      }
      slot = lookup(line.tokens[1], line.no);
    } else if (key == "inverse:") {
      if (have_inverse) {
        throw ParseError(line.no, "duplicate 'inverse:' header");
      }
      have_inverse = true;
      inverse.assign(n, UNDEFINED);
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        auto const& tok = line.tokens[t];
        auto        arrow = tok.find("->");
        if (arrow == std::string::npos) {
          throw ParseError(line.no, "malformed inverse entry '" + tok + "'");
        }
        ElementId lhs = lookup(tok.substr(0, arrow), line.no);
        ElementId rhs = lookup(tok.substr(arrow + 2), line.no);
        if (inverse[lhs] != UNDEFINED) {
          throw ParseError(line.no, "duplicate inverse entry for '"
                                        + names[lhs] + "'");
        }
        inverse[lhs] = rhs;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (inverse[i] == UNDEFINED) {
          throw ParseError(line.no,
                           "inverse map is missing '" + names[i] + "'");
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (inverse[inverse[i]] != static_cast<ElementId>(i)) {
          throw ParseError(line.no, "inverse map is not an involution at '"
                                        + names[i] + "'");
        }
      }
    } else {
      throw ParseError(line.no, "unexpected token '" + key + "'");
    }
    ++cursor;
  }

  std::vector<ElementId> table(n * n, UNDEFINED);
  int                    first_dot_line = 0;
  for (std::size_t row = 0; row < n; ++row) {
    if (cursor >= lines.size()) {
      throw ParseError(last_line + 1,
                       "expected " + std::to_string(n) + " table rows, got "
                           + std::to_string(row));
    }
    Line const& line = lines[cursor++];
    last_line        = line.no;
    if (line.tokens.size() != n) {
      throw ParseError(line.no, "table row has "
                                    + std::to_string(line.tokens.size())
                                    + " entries, expected "
                                    + std::to_string(n));
    }
    for (std::size_t col = 0; col < n; ++col) {
      auto const& tok = line.tokens[col];
      if (tok == ".") {
        if (first_dot_line == 0) {
          first_dot_line = line.no;
        }
      } else {
        table[row * n + col] = lookup(tok, line.no);
      }
    }
  }
  if (cursor < lines.size()) {
    throw ParseError(lines[cursor].no, "unexpected content after table");
  }

  if (have_inverse) {
    return FinitePartialMagma{std::move(names), std::move(table),
                              std::move(inverse), designated};
  }
  if (first_dot_line != 0) {
    throw ParseError(first_dot_line, "partial table requires inverse map");
  }
  return FiniteMagma{std::move(names), std::move(table), designated};
}

namespace {

void write_header(std::ostringstream& os, std::vector<std::string> const& names,
                  DesignatedElements const& designated) {
  os << "elements:";
  for (auto const& name : names) {
    os << ' ' << name;
  }
  os << '\n';
  if (designated.zero) {
    os << "zero: " << names[*designated.zero] << '\n';
  }
  if (designated.unit) {
    os << "unit: " << names[*designated.unit] << '\n';
  }
}

void write_table(std::ostringstream& os, std::vector<std::string> const& names,
                 std::vector<ElementId> const& table) {
  std::size_t n = names.size();
  os << "table:\n";
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) {
      if (col > 0) {
        os << ' ';
      }
      ElementId e = table[row * n + col];
      os << (e == UNDEFINED ? "." : names[e]);
    }
    os << '\n';
  }
}

}  // namespace

std::string serialize_structure(FiniteMagma const& s) {
  std::ostringstream os;
  write_header(os, s.names, s.designated);
  write_table(os, s.names, s.table);
  return os.str();
}

std::string serialize_structure(FinitePartialMagma const& s) {
  std::ostringstream os;
  write_header(os, s.names, s.designated);
  os << "inverse:";
  for (std::size_t i = 0; i < s.order(); ++i) {
    os << ' ' << s.names[i] << "->" << s.names[s.inverse[i]];
  }
  os << '\n';
  write_table(os, s.names, s.table);
  return os.str();
}

std::string serialize_structure(Structure const& s) {
  return std::visit([](auto const& v) { return serialize_structure(v); }, s);
}

}  // namespace isg
