#include "segrekit/manifold_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "segrekit/errors.hpp"

namespace segrekit {

namespace {

struct Line {
  std::size_t number;
  std::string keyword;
  std::string body;
  std::size_t body_column;  // 1-based column of body start
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    start = end + 1;
    std::string content = trim(raw);
    if (content.empty()) continue;
    std::size_t lead = raw.find_first_not_of(" \t\r");
    std::size_t kw_end = 0;
    while (kw_end < content.size() && (std::isalnum(static_cast<unsigned char>(content[kw_end])) || content[kw_end] == '_')) {
      ++kw_end;
    }
    std::string keyword = content.substr(0, kw_end);
    std::size_t body_start = kw_end;
    if (body_start < content.size() && content[body_start] == ':') ++body_start;
    while (body_start < content.size() && std::isspace(static_cast<unsigned char>(content[body_start]))) ++body_start;
    out.push_back({number, keyword, content.substr(body_start), lead + body_start + 1});
    if (end == text.size()) break;
  }
  return out;
}

std::vector<std::string> parse_names(const Line& line) {
  std::vector<std::string> out;
  std::istringstream is(line.body);
  std::string tok;
  while (is >> tok) {
    if (auto dots = tok.find(".."); dots != std::string::npos) {
      std::string lo = tok.substr(0, dots);
      std::string hi = tok.substr(dots + 2);
      std::size_t split = lo.find_first_of("0123456789");
      if (split == std::string::npos || split == 0 || hi.compare(0, split, lo, 0, split) != 0) {
        throw ParseError("bad variable range '" + tok + "'", line.number, line.body_column);
      }
      std::string stem = lo.substr(0, split);
      int a = 0, b = 0;
      try {
        a = std::stoi(lo.substr(split));
        b = std::stoi(hi.substr(split));
      } catch (const std::exception&) {
        throw ParseError("bad variable range '" + tok + "'", line.number, line.body_column);
      }
      if (b < a || b - a > 64) throw ParseError("bad variable range '" + tok + "'", line.number, line.body_column);
      for (int k = a; k <= b; ++k) out.push_back(stem + std::to_string(k));
    } else {
      out.push_back(tok);
    }
  }
  if (out.empty()) throw ParseError("expected variable names", line.number, line.body_column);
  return out;
}

Poly parse_at(const Line& line, std::string_view src, std::size_t offset, const TablePtr& table) {
  try {
    return parse_poly(src, table);
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), line.number, line.body_column + offset + e.column() - 1);
  }
}

TablePtr make_complex(const Line& line, const std::vector<std::string>& names) {
  try {
    return VarTable::complex(names);
  } catch (const InputError& e) {
    throw ParseError(e.what(), line.number, line.body_column);
  }
}

}  // namespace

CRManifold parse_manifold(std::string_view text) {
  TablePtr table;
  std::vector<Poly> rho;
  Chart chart;
  for (const auto& line : split_lines(text)) {
    if (line.keyword == "vars") {
      if (table) throw ParseError("duplicate vars line", line.number, 1);
      table = make_complex(line, parse_names(line));
    } else if (line.keyword == "rho") {
      if (!table) throw ParseError("rho before vars", line.number, 1);
      rho.push_back(parse_at(line, line.body, 0, table));
    } else if (line.keyword == "chart") {
      std::istringstream is(line.body);
      std::string kind;
      is >> kind;
      if (kind == "affine") {
        chart = Chart{};
      } else if (kind == "projective") {
        long idx = -1;
        if (!(is >> idx) || idx < 0) throw ParseError("expected 'projective <index>'", line.number, line.body_column);
        chart = Chart{Chart::Kind::Projective, static_cast<std::size_t>(idx), ""};
      } else {
        throw ParseError("unknown chart kind '" + kind + "'", line.number, line.body_column);
      }
    } else {
      throw ParseError("unknown directive '" + line.keyword + "'", line.number, 1);
    }
  }
  if (!table) throw ParseError("missing vars line", 0, 1);
  if (rho.empty()) throw ParseError("no rho lines", 0, 1);
  if (chart.kind == Chart::Kind::Projective) {
    if (*chart.index >= table->size() / 2) throw ParseError("chart index out of range", 0, 1);
    chart.homogenizing_name = table->name(*chart.index);
  }
  return CRManifold(table, std::move(rho), chart);
}

CRManifold load_manifold(const std::filesystem::path& path) {
  std::string text = read_text_file(path);
  try {
    return parse_manifold(text);
  } catch (const ParseError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string format_manifold(const CRManifold& manifold) {
  std::string out = "vars";
  for (const auto& n : manifold.holomorphic_names()) out += " " + n;
  out += "\n";
  for (const auto& r : manifold.rho()) out += "rho: " + r.to_string() + "\n";
  if (manifold.chart().kind == Chart::Kind::Projective) {
    out += "chart: projective " + std::to_string(manifold.chart().index.value_or(0)) + "\n";
  }
  return out;
}

AlgebraicMap parse_map(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::string> targets;
  std::vector<Poly> nums, dens;
  std::vector<std::pair<Line, std::string>> relations;
  TablePtr table;
  std::size_t vars_line = 0;
  for (const auto& line : split_lines(text)) {
    if (line.keyword == "vars") {
      if (table) throw ParseError("duplicate vars line", line.number, 1);
      names = parse_names(line);
      try {
        table = plain_table(names);
      } catch (const InputError& e) {
        throw ParseError(e.what(), line.number, line.body_column);
      }
      vars_line = line.number;
    } else if (line.keyword == "target") {
      targets = parse_names(line);
    } else if (line.keyword == "map") {
      if (!table) throw ParseError("map before vars", line.number, 1);
      std::string_view body = line.body;
      std::size_t bar = body.find('|');
      nums.push_back(parse_at(line, body.substr(0, bar), 0, table));
      if (bar == std::string_view::npos) {
        dens.push_back(Poly::constant(table, 1));
      } else {
        Poly d = parse_at(line, body.substr(bar + 1), bar + 1, table);
        if (d.is_zero()) throw ParseError("zero denominator", line.number, line.body_column + bar + 1);
        dens.push_back(std::move(d));
      }
    } else if (line.keyword == "relation") {
      relations.emplace_back(line, line.body);
    } else {
      throw ParseError("unknown directive '" + line.keyword + "'", line.number, 1);
    }
  }
  if (!table) throw ParseError("missing vars line", 0, 1);
  if (!relations.empty()) {
    if (!nums.empty()) throw ParseError("map and relation lines cannot be mixed", relations.front().first.number, 1);
    if (targets.empty()) throw ParseError("relation maps need a target line", vars_line, 1);
    std::vector<std::string> all = names;
    all.insert(all.end(), targets.begin(), targets.end());
    TablePtr joint;
    try {
      joint = plain_table(all);
    } catch (const InputError& e) {
      throw ParseError(e.what(), vars_line, 1);
    }
    std::vector<std::string> srcs;
    for (const auto& [line, body] : relations) {
      parse_at(line, body, 0, joint);
      srcs.push_back(body);
    }
    return AlgebraicMap::from_relations(names, targets, srcs);
  }
  if (nums.empty()) throw ParseError("no map lines", 0, 1);
  return AlgebraicMap::from_polys(table, std::move(nums), std::move(dens));
}

AlgebraicMap load_map(const std::filesystem::path& path) {
  std::string text = read_text_file(path);
  try {
    return parse_map(text);
  } catch (const ParseError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::vector<GaussianRational> parse_point(std::string_view text) {
  static const TablePtr empty = VarTable::make({});
  std::vector<GaussianRational> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    Poly p = parse_poly(piece, empty);
    if (!p.is_constant()) throw InputError("point coordinates must be constants");
    out.push_back(p.constant_term());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_point(const std::vector<GaussianRational>& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += ",";
    out += p[k].to_string();
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace segrekit
