#include "finloc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace finloc {

namespace {

struct RawPoset {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pairs;
  int bot = -1;        // from a bot: line
  int top_decl = -1;   // from a top: line
  int bot_decl = -1;
  bool has_bot_line = false;
};

std::vector<std::string> tokenize(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

RawPoset parse_raw(const std::string& text) {
  RawPoset raw;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  auto index_of = [&](const std::string& label, int at) {
    auto it = std::find(raw.labels.begin(), raw.labels.end(), label);
    if (it == raw.labels.end())
      throw ParseError(at, "unknown element '" + label + "'");
    return int(it - raw.labels.begin());
  };
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "elements:") {
      if (!raw.labels.empty()) throw ParseError(lineno, "duplicate elements: line");
      raw.labels.assign(toks.begin() + 1, toks.end());
      if (raw.labels.empty()) throw ParseError(lineno, "elements: needs at least one element");
    } else if (toks[0] == "le:") {
      if (toks.size() != 3) throw ParseError(lineno, "le: needs exactly two elements");
      if (raw.labels.empty()) throw ParseError(lineno, "le: before elements:");
      raw.pairs.push_back({index_of(toks[1], lineno), index_of(toks[2], lineno)});
    } else if (toks[0] == "bot:") {
      if (toks.size() != 2) throw ParseError(lineno, "bot: needs one element");
      raw.bot_decl = index_of(toks[1], lineno);
      raw.has_bot_line = true;
    } else if (toks[0] == "top:") {
      if (toks.size() != 2) throw ParseError(lineno, "top: needs one element");
      raw.top_decl = index_of(toks[1], lineno);
    } else {
      throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
    }
  }
  if (raw.labels.empty()) throw ParseError(lineno, "missing elements: line");
  return raw;
}

FinPoset poset_of_raw(const RawPoset& raw) {
  const int n = int(raw.labels.size());
  std::vector<uint8_t> rel(size_t(n) * n, 0);
  for (auto [a, b] : raw.pairs) rel[size_t(a) * n + b] = 1;
  rel = reflexive_transitive_closure(n, std::move(rel));
  return validate_poset(n, std::move(rel), raw.labels);
}

}  // namespace

FinPoset parse_poset_text(const std::string& text) {
  return poset_of_raw(parse_raw(text));
}

FinDistLattice parse_lattice_text(const std::string& text) {
  RawPoset raw = parse_raw(text);
  FinDistLattice l = build_lattice(poset_of_raw(raw));
  if (raw.top_decl >= 0 && raw.top_decl != l.top)
    throw ValidationError({"TopOverrideMismatch", {raw.top_decl, l.top}});
  if (raw.bot_decl >= 0 && raw.bot_decl != l.bot)
    throw ValidationError({"BotOverrideMismatch", {raw.bot_decl, l.bot}});
  return l;
}

ScottDomain parse_domain_text(const std::string& text) {
  RawPoset raw = parse_raw(text);
  if (!raw.has_bot_line) throw ParseError(0, "domain file needs a bot: line");
  return validate_scott_domain(poset_of_raw(raw), raw.bot_decl);
}

InputKind kind_of_path(const std::string& path) {
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".poset") return InputKind::Poset;
  if (ext == ".lattice") return InputKind::Lattice;
  if (ext == ".domain") return InputKind::Domain;
  throw ParseError(0, "cannot tell input kind of '" + path +
                          "' (expected .poset/.lattice/.domain)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParsedInput parse_input(const std::string& path) {
  std::string text = read_file(path);
  switch (kind_of_path(path)) {
    case InputKind::Poset: return parse_poset_text(text);
    case InputKind::Lattice: return parse_lattice_text(text);
    case InputKind::Domain: return parse_domain_text(text);
  }
  throw ParseError(0, "unreachable");
}

std::string emit_dot(const FinPoset& p, const std::string& graph_name) {
  auto cover = hasse_cover(p);
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  out << "  rankdir=BT;\n";
  for (int i = 0; i < p.n; ++i)
    out << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (cover[size_t(i) * p.n + j]) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

std::string lattice_to_text(const FinDistLattice& l) {
  std::ostringstream out;
  out << "elements:";
  for (int i = 0; i < l.n(); ++i) out << " " << l.label(i);
  out << "\n";
  auto cover = hasse_cover(l.poset);
  for (int i = 0; i < l.n(); ++i)
    for (int j = 0; j < l.n(); ++j)
      if (cover[size_t(i) * l.n() + j])
        out << "le: " << l.label(i) << " " << l.label(j) << "\n";
  out << "bot: " << l.label(l.bot) << "\n";
  out << "top: " << l.label(l.top) << "\n";
  return out.str();
}

std::vector<int> parse_nucleus_table(const FinFrame& f, const std::string& text) {
  auto toks = tokenize(text);
  size_t start = 0;
  if (!toks.empty() && toks[0] == "j:") start = 1;
  auto index_of = [&](const std::string& label) {
    for (int i = 0; i < f.n(); ++i)
      if (f.label(i) == label) return i;
    throw ParseError(1, "unknown element '" + label + "'");
  };
  std::vector<int> table(f.n(), -1);
  for (size_t t = start; t < toks.size(); ++t) {
    auto arrow = toks[t].find("->");
    if (arrow == std::string::npos)
      throw ParseError(1, "expected label->label, got '" + toks[t] + "'");
    int from = index_of(toks[t].substr(0, arrow));
    int to = index_of(toks[t].substr(arrow + 2));
    table[from] = to;
  }
  for (int i = 0; i < f.n(); ++i)
    if (table[i] < 0)
      throw ParseError(1, "no image given for element '" + f.label(i) + "'");
  return table;
}

std::string format_nucleus_table(const FinFrame& f, const std::vector<int>& table) {
  std::ostringstream out;
  out << "j:";
  for (int i = 0; i < f.n(); ++i)
    out << " " << f.label(i) << "->" << f.label(table[i]);
  return out.str();
}

}  // namespace finloc
