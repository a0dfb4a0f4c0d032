#include "sokq/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace sokq {

ParseError::ParseError(const std::string& message, Span span)
    : SokqError("line " + std::to_string(span.line) + ", column " + std::to_string(span.column) + ": " + message),
      span_(span) {}

namespace {

enum class Tok { Ident, Op, Tilde, LParen, RParen, LBrack, RBrack, LBrace, RBrace, Colon, Sep, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Triangle triangle = Triangle::Right;
  std::optional<Sign> sign;
  Span span;
};

bool ident_start(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return ident_start(c) || c == '\'' || c == '.'; }

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  int line = 1;
  size_t line_start = 0;
  auto span_at = [&](size_t start, size_t len) {
    return Span{start, len, line, static_cast<int>(start - line_start) + 1};
  };
  auto starts = [&](const char* s) { return text.compare(i, std::char_traits<char>::length(s), s) == 0; };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      line_start = ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    Token t;
    size_t start = i;
    if (ident_start(c)) {
      while (i < text.size() && ident_char(text[i])) ++i;
      t.kind = Tok::Ident;
      t.text = text.substr(start, i - start);
    } else if (starts("|>") || starts("<|") || starts("\xE2\x96\xB7") || starts("\xE2\x97\x81")) {
      t.kind = Tok::Op;
      if (starts("|>") || starts("<|")) {
        t.triangle = starts("|>") ? Triangle::Right : Triangle::Left;
        i += 2;
      } else {
        t.triangle = starts("\xE2\x96\xB7") ? Triangle::Right : Triangle::Left;
        i += 3;
      }
      if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        t.sign = text[i] == '+' ? Sign::Pos : Sign::Neg;
        ++i;
      } else if (starts("\xE2\x88\x92")) {  // U+2212 minus
        t.sign = Sign::Neg;
        i += 3;
      }
      t.text = text.substr(start, i - start);
    } else if (starts("\xE2\x88\xBC")) {
      t.kind = Tok::Tilde;
      i += 3;
      t.text = "~";
    } else {
      static const std::map<char, Tok> single = {{'~', Tok::Tilde},  {'(', Tok::LParen}, {')', Tok::RParen},
                                                 {'[', Tok::LBrack}, {']', Tok::RBrack}, {'{', Tok::LBrace},
                                                 {'}', Tok::RBrace}, {':', Tok::Colon},  {',', Tok::Sep},
                                                 {';', Tok::Sep}};
      auto it = single.find(c);
      if (it == single.end()) throw ParseError(std::string("unexpected character '") + c + "'", span_at(start, 1));
      t.kind = it->second;
      t.text = std::string(1, c);
      ++i;
    }
    t.span = span_at(start, i - start);
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  end.span = span_at(text.size(), 0);
  out.push_back(end);
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_keyword(const char* kw) const {
    return peek().kind == Tok::Ident && peek().text == kw && peek(1).kind == Tok::Colon;
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  const Token& expect(Tok k, const char* what) {
    if (!at(k)) throw ParseError(std::string("expected ") + what + found(), peek().span);
    return next();
  }
  void expect_keyword(const char* kw) {
    if (!at_keyword(kw)) throw ParseError(std::string("expected '") + kw + ":'" + found(), peek().span);
    next();
    next();
  }
  void skip_separators() {
    while (at(Tok::Sep)) next();
  }
  std::string found() const {
    if (at(Tok::End)) return ", found end of input";
    return ", found '" + peek().text + "'";
  }
  std::vector<Span> spans() const {
    std::vector<Span> s;
    for (const auto& t : toks_)
      if (t.kind != Tok::End) s.push_back(t.span);
    return s;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

Relation parse_short_relation(Cursor& cur) {
  const Token& first = cur.expect(Tok::Ident, "identifier");
  std::string a = first.text;
  auto signed_op = [&]() {
    const Token& op = cur.expect(Tok::Op, "operation (|>+, |>-, <|+, <|-)");
    if (!op.sign) throw ParseError("operation '" + op.text + "' needs a sign (+ or -)", op.span);
    return std::pair{op.triangle, *op.sign};
  };
  if (cur.at(Tok::Tilde)) {
    cur.next();
    std::string in = cur.expect(Tok::Ident, "identifier").text;
    auto [tri, sign] = signed_op();
    std::string op = cur.expect(Tok::Ident, "identifier").text;
    return Relation{a, in, op, tri, sign};
  }
  auto [tri, sign] = signed_op();
  std::string op = cur.expect(Tok::Ident, "identifier").text;
  cur.expect(Tok::Tilde, "'~'");
  std::string out = cur.expect(Tok::Ident, "identifier").text;
  return Relation{out, a, op, tri, sign};
}

struct ClassItem {
  std::string label;
  std::vector<std::string> contents;
  bool braces = false;
  Span span;
};

// Component groups must be rotations of the successor orbits, covering each
// orbit once.
void check_groups(const SokqPresentation& p, const std::vector<std::vector<ClassItem>>& groups) {
  auto comps = derived_class_order(p);
  std::map<std::string, size_t> comp_of;
  for (size_t i = 0; i < comps.size(); ++i)
    for (const auto& g : comps[i]) comp_of[g] = i;
  std::set<size_t> covered;
  for (const auto& group : groups) {
    if (group.empty()) throw SemanticError("empty component group in order section");
    size_t ci = comp_of.at(group.front().label);
    const auto& cyc = comps[ci];
    bool matches = false;
    if (cyc.size() == group.size()) {
      auto start = std::find(cyc.begin(), cyc.end(), group.front().label) - cyc.begin();
      matches = true;
      for (size_t k = 0; k < group.size(); ++k) {
        if (cyc[(start + k) % cyc.size()] != group[k].label) matches = false;
      }
    }
    if (!matches) {
      std::string expected;
      for (const auto& g : cyc) expected += " " + g;
      throw SemanticError("component group starting at '" + group.front().label +
                          "' does not follow the cyclic class order (" + expected.substr(1) + ")");
    }
    if (!covered.insert(ci).second) throw SemanticError("component of '" + group.front().label + "' listed twice");
  }
}

}  // namespace

PresentationDoc parse_presentation_doc(const std::string& text) {
  Cursor cur(tokenize(text));
  std::vector<std::string> gens;
  std::vector<Relation> rels;
  cur.expect_keyword("gens");
  while (!cur.at_keyword("rels")) {
    cur.skip_separators();
    if (cur.at_keyword("rels")) break;
    gens.push_back(cur.expect(Tok::Ident, "generator or 'rels:'").text);
  }
  cur.expect_keyword("rels");
  while (true) {
    cur.skip_separators();
    if (cur.at_keyword("order")) break;
    if (cur.at(Tok::End)) throw ParseError("missing 'order:' section", cur.peek().span);
    rels.push_back(parse_short_relation(cur));
  }
  cur.expect_keyword("order");
  std::vector<std::vector<ClassItem>> groups;
  while (!cur.at(Tok::End)) {
    cur.skip_separators();
    if (cur.at(Tok::End)) break;
    cur.expect(Tok::LParen, "'('");
    std::vector<ClassItem> group;
    while (!cur.at(Tok::RParen)) {
      ClassItem item;
      item.span = cur.peek().span;
      if (cur.at(Tok::LBrace)) {
        item.braces = true;
        cur.next();
      } else {
        cur.expect(Tok::LBrack, "'[' or '{'");
      }
      Tok close = item.braces ? Tok::RBrace : Tok::RBrack;
      while (!cur.at(close)) item.contents.push_back(cur.expect(Tok::Ident, item.braces ? "identifier or '}'" : "identifier or ']'").text);
      cur.next();
      item.label = cur.expect(Tok::Ident, "class label").text;
      group.push_back(std::move(item));
    }
    cur.next();
    groups.push_back(std::move(group));
  }

  std::set<std::string> declared;
  for (const auto& g : gens) {
    if (!declared.insert(g).second) throw SemanticError("generator '" + g + "' declared twice");
  }
  for (const auto& r : rels) {
    for (const auto* g : {&r.output, &r.input, &r.op}) {
      if (!declared.count(*g)) throw SemanticError("relation " + relation_text(r) + " uses undeclared generator '" + *g + "'");
    }
  }
  std::map<std::string, std::vector<std::string>> classes;
  std::set<std::string> braced;
  for (const auto& group : groups) {
    for (const auto& item : group) {
      if (!declared.count(item.label)) throw ParseError("class label '" + item.label + "' is not a generator", item.span);
      if (classes.count(item.label)) throw ParseError("class of '" + item.label + "' given twice", item.span);
      classes[item.label] = item.contents;
      if (item.braces) braced.insert(item.label);
    }
  }
  for (const auto& g : gens) {
    if (!classes.count(g)) throw SemanticError("generator '" + g + "' has no class in the order section");
  }
  auto knot = validate_knotlike(SignedPresentation{gens, rels});
  if (!knot.ok()) throw SemanticError("presentation is not knotlike:\n" + knot.describe());
  SokqPresentation p = make_presentation(gens, rels, classes);
  auto ord = validate_order_info(p);
  if (!ord.ok()) throw SemanticError("order information is inconsistent:\n" + ord.describe());
  for (const auto& g : braced) {
    if (!p.order.cyclic.count(g)) throw SemanticError("class of '" + g + "' uses {} but the arc is not a closed loop");
  }
  check_groups(p, groups);
  return PresentationDoc{std::move(p), cur.spans()};
}

SokqPresentation parse_presentation(const std::string& text) { return parse_presentation_doc(text).presentation; }

std::string relation_text(const Relation& r) {
  return r.output + " ~ " + r.input + " " + to_string(r.triangle) + to_string(r.sign) + " " + r.op;
}

namespace {

std::vector<CyclicWord> sorted_components(const SokqPresentation& p) {
  auto comps = derived_class_order(p);
  for (auto& c : comps) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  std::sort(comps.begin(), comps.end());
  return comps;
}

}  // namespace

std::string serialize_presentation(const SokqPresentation& p) {
  auto comps = sorted_components(p);
  std::vector<std::string> gens;
  std::set<std::string> seen;
  auto use = [&](const std::string& g) {
    if (seen.insert(g).second) gens.push_back(g);
  };
  std::string order;
  std::vector<Relation> rels;
  for (const auto& comp : comps) {
    order += " (";
    for (size_t k = 0; k < comp.size(); ++k) {
      const auto& label = comp[k];
      const auto& contents = p.order.classes.at(label);
      bool cyclic = p.order.cyclic.count(label) > 0;
      if (k) order += " ";
      order += cyclic ? "{" : "[";
      for (size_t j = 0; j < contents.size(); ++j) {
        if (j) order += " ";
        order += contents[j];
        rels.push_back(canonicalize_relation(p.sp.relations.at(*relation_with_inbound(p.sp, contents[j]))));
      }
      order += cyclic ? "}" : "]";
      order += label;
      use(label);
    }
    order += ")";
  }
  std::string out = "gens:";
  for (const auto& g : gens) out += " " + g;
  out += "\nrels:";
  for (const auto& r : rels) out += "\n  " + relation_text(r);
  out += "\norder:" + order;
  return out;
}

std::string presentation_to_json(const SokqPresentation& p) {
  using nlohmann::json;
  json doc;
  doc["gens"] = p.sp.generators;
  doc["rels"] = json::array();
  for (const auto& r : p.sp.relations) {
    doc["rels"].push_back({r.output, r.input, r.op, to_string(r.triangle), to_string(r.sign)});
  }
  doc["order"] = json::array();
  for (const auto& comp : sorted_components(p)) {
    json group = json::array();
    for (const auto& label : comp) {
      group.push_back({{"label", label}, {"class", p.order.classes.at(label)}, {"cyclic", p.order.cyclic.count(label) > 0}});
    }
    doc["order"].push_back(group);
  }
  return doc.dump(2);
}

SokqPresentation presentation_from_json(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what(), Span{});
  }
  try {
    std::vector<std::string> gens = doc.at("gens").get<std::vector<std::string>>();
    std::vector<Relation> rels;
    for (const auto& r : doc.at("rels")) {
      auto tri = r.at(3).get<std::string>();
      auto sign = r.at(4).get<std::string>();
      if ((tri != "|>" && tri != "<|") || (sign != "+" && sign != "-")) throw SemanticError("bad operation in JSON relation");
      rels.push_back(Relation{r.at(0).get<std::string>(), r.at(1).get<std::string>(), r.at(2).get<std::string>(),
                              tri == "|>" ? Triangle::Right : Triangle::Left, sign == "+" ? Sign::Pos : Sign::Neg});
    }
    std::map<std::string, std::vector<std::string>> classes;
    for (const auto& group : doc.at("order"))
      for (const auto& item : group) classes[item.at("label").get<std::string>()] = item.at("class").get<std::vector<std::string>>();
    auto knot = validate_knotlike(SignedPresentation{gens, rels});
    if (!knot.ok()) throw SemanticError("presentation is not knotlike:\n" + knot.describe());
    SokqPresentation p = make_presentation(gens, rels, classes);
    auto ord = validate_order_info(p);
    if (!ord.ok()) throw SemanticError("order information is inconsistent:\n" + ord.describe());
    return p;
  } catch (const json::exception& e) {
    throw SemanticError(std::string("malformed presentation JSON: ") + e.what());
  }
}

namespace {

Term parse_term(Cursor& cur);

Term parse_primary(Cursor& cur) {
  if (cur.at(Tok::LParen)) {
    cur.next();
    Term t = parse_term(cur);
    cur.expect(Tok::RParen, "')'");
    return t;
  }
  return Term::leaf(cur.expect(Tok::Ident, "identifier or '('").text);
}

Term parse_term(Cursor& cur) {
  Term t = parse_primary(cur);
  while (cur.at(Tok::Op)) {
    Triangle op = cur.next().triangle;
    t = Term::node(std::move(t), op, parse_primary(cur));
  }
  return t;
}

}  // namespace

GeneralPresentation parse_general_presentation(const std::string& text) {
  Cursor cur(tokenize(text));
  GeneralPresentation gp;
  cur.expect_keyword("gens");
  while (!cur.at_keyword("rels")) {
    cur.skip_separators();
    if (cur.at_keyword("rels")) break;
    gp.generators.push_back(cur.expect(Tok::Ident, "generator or 'rels:'").text);
  }
  cur.expect_keyword("rels");
  std::set<std::string> declared(gp.generators.begin(), gp.generators.end());
  if (declared.size() != gp.generators.size()) throw SemanticError("duplicate generator declaration");
  while (true) {
    cur.skip_separators();
    if (cur.at(Tok::End)) break;
    Span at = cur.peek().span;
    Word lhs = left_associate(parse_term(cur));
    cur.expect(Tok::Tilde, "'~'");
    Word rhs = left_associate(parse_term(cur));
    for (const Word* w : {&lhs, &rhs}) {
      std::vector<std::string> used{w->head};
      for (const auto& [op, g] : w->tail) used.push_back(g);
      for (const auto& g : used)
        if (!declared.count(g)) throw ParseError("undeclared generator '" + g + "'", at);
    }
    gp.relations.emplace_back(std::move(lhs), std::move(rhs));
  }
  return gp;
}

std::string serialize_short_form(const ShortPresentation& sp) {
  std::string out = "gens:";
  for (const auto& g : sp.generators) out += " " + g;
  out += "\nrels:";
  for (const auto& r : sp.relations) out += "\n  " + r.output + " ~ " + r.input + " " + to_string(r.triangle) + " " + r.op;
  return out;
}

GaussCode parse_gauss(const std::string& text) {
  GaussCode g;
  std::string stripped;
  for (std::istringstream lines(text); !lines.eof();) {
    std::string line;
    std::getline(lines, line);
    stripped += line.substr(0, line.find('#')) + " ";
  }
  if (stripped.find_first_not_of(" \t\r") == std::string::npos) return g;
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t semi = stripped.find(';', start);
    parts.push_back(stripped.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  for (const auto& part : parts) {
    std::vector<GaussSymbol> comp;
    std::istringstream words(part);
    std::string w;
    while (words >> w) {
      if (w == "()") continue;
      bool ok = w.size() >= 3 && (w[0] == 'O' || w[0] == 'U' || w[0] == 'o' || w[0] == 'u') &&
                (w.back() == '+' || w.back() == '-');
      for (size_t i = 1; ok && i + 1 < w.size(); ++i) ok = std::isdigit(static_cast<unsigned char>(w[i])) != 0;
      if (!ok) throw ParseError("bad Gauss symbol '" + w + "' (expected e.g. O1+ or U2-)", Span{0, 0, 1, 1});
      GaussSymbol s;
      s.over = w[0] == 'O' || w[0] == 'o';
      s.crossing = std::stoi(w.substr(1, w.size() - 2));
      s.sign = w.back() == '+' ? Sign::Pos : Sign::Neg;
      comp.push_back(s);
    }
    g.components.push_back(std::move(comp));
  }
  check_pairing(g);
  return normalize_gauss(g);
}

std::string serialize_gauss(const GaussCode& g) {
  std::string out;
  for (size_t k = 0; k < g.components.size(); ++k) {
    if (k) out += " ; ";
    if (g.components[k].empty()) out += "()";
    for (size_t i = 0; i < g.components[k].size(); ++i) {
      const auto& s = g.components[k][i];
      if (i) out += " ";
      out += (s.over ? "O" : "U") + std::to_string(s.crossing) + to_string(s.sign);
    }
  }
  return out;
}

FiniteQuandle parse_quandle_table(const std::string& text) {
  std::string stripped;
  for (std::istringstream lines(text); !lines.eof();) {
    std::string line;
    std::getline(lines, line);
    stripped += line.substr(0, line.find('#')) + "\n";
  }
  std::istringstream in(stripped);
  std::string header;
  int n = 0;
  if (!(in >> header) || (header != "quandle" && header != "rack"))
    throw ParseError("quandle table must start with 'quandle n' or 'rack n'", Span{});
  if (!(in >> n) || n <= 0) throw ParseError("bad quandle size", Span{});
  std::vector<int> table;
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      table.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad table entry '" + tok + "'", Span{});
    }
  }
  if (table.size() != static_cast<size_t>(n) * n)
    throw ParseError("quandle table has " + std::to_string(table.size()) + " entries, expected " +
                         std::to_string(n * n),
                     Span{});
  return FiniteQuandle::from_table(n, std::move(table), header == "rack", header + "-table-" + std::to_string(n));
}

std::string serialize_quandle_table(const FiniteQuandle& q) {
  std::string out = (q.is_rack() ? "rack " : "quandle ") + std::to_string(q.size()) + "\n";
  for (int i = 0; i < q.size(); ++i) {
    for (int j = 0; j < q.size(); ++j) out += (j ? " " : "") + std::to_string(q.right(i, j));
    out += "\n";
  }
  return out;
}

}  // namespace sokq
