#include "edgegraph/text.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <utility>
#include <vector>

#include "json.hpp"

namespace edgegraph::text {

namespace {

enum class Tok { Plus, Into, Pits, Tips, LParen, RParen, Label, Empty, End };

struct Token {
  Tok kind;
  std::string value;  // Label only
  std::size_t line, column;
};

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    std::size_t line = line_, col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, col};
    char c = src_[pos_];
    if (c == '+') return advance(1), Token{Tok::Plus, "", line, col};
    if (c == '(') return advance(1), Token{Tok::LParen, "", line, col};
    if (c == ')') return advance(1), Token{Tok::RParen, "", line, col};
    if (c == '>') {
      if (peek(1) == '>') return advance(2), Token{Tok::Into, "", line, col};
      if (peek(1) == '<') return advance(2), Token{Tok::Tips, "", line, col};
      throw SyntaxError(line, col, "stray '>': expected '>>' or '><'");
    }
    if (c == '<') {
      if (peek(1) == '>') return advance(2), Token{Tok::Pits, "", line, col};
      throw SyntaxError(line, col, "stray '<': expected '<>'");
    }
    if (c == '"') return quoted_label(line, col);
    // unicode aliases
    if (starts_with("\xce\xb5")) return advance(2), Token{Tok::Empty, "", line, col};          // ε
    if (starts_with("\xe2\x89\xab")) return advance(3), Token{Tok::Into, "", line, col};       // ≫
    if (starts_with("\xe2\x8b\x84")) return advance(3), Token{Tok::Pits, "", line, col};       // ⋄
    if (starts_with("\xc3\x97")) return advance(2), Token{Tok::Tips, "", line, col};           // ×
    if (is_word_char(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && is_word_char(src_[pos_])) advance(1);
      std::string word(src_.substr(start, pos_ - start));
      if (word == "e") return {Tok::Empty, "", line, col};
      return {Tok::Label, std::move(word), line, col};
    }
    throw SyntaxError(line, col, "unexpected character '" + std::string(1, c) + "'");
  }

 private:
  char peek(std::size_t off) const {
    return pos_ + off < src_.size() ? src_[pos_ + off] : '\0';
  }

  bool starts_with(std::string_view s) const {
    return src_.substr(pos_, s.size()) == s;
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i, ++pos_) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])) != 0)
      advance(1);
  }

  Token quoted_label(std::size_t line, std::size_t col) {
    advance(1);  // opening quote
    std::string value;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '"') {
        advance(1);
        return {Tok::Label, std::move(value), line, col};
      }
      if (c == '\\') {
        char esc = peek(1);
        if (esc != '"' && esc != '\\')
          throw SyntaxError(line_, col_, "bad escape: only \\\" and \\\\ are recognized");
        value.push_back(esc);
        advance(2);
        continue;
      }
      value.push_back(c);
      advance(1);
    }
    throw SyntaxError(line, col, "unterminated quoted label");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { shift(); }

  Term parse() {
    Term t = sum();
    if (tok_.kind != Tok::End) throw err("expected an operator or end of input");
    return t;
  }

 private:
  void shift() { tok_ = lexer_.next(); }

  SyntaxError err(const std::string& expected) const {
    return SyntaxError(tok_.line, tok_.column, expected);
  }

  Term sum() {
    Term t = into();
    while (tok_.kind == Tok::Plus) {
      shift();
      t = Term::overlay(std::move(t), into());
    }
    return t;
  }

  Term into() {
    Term t = tips();
    while (tok_.kind == Tok::Into) {
      shift();
      t = Term::into(std::move(t), tips());
    }
    return t;
  }

  Term tips() {
    Term t = pits();
    while (tok_.kind == Tok::Tips) {
      shift();
      t = Term::tips(std::move(t), pits());
    }
    return t;
  }

  Term pits() {
    Term t = atom();
    while (tok_.kind == Tok::Pits) {
      shift();
      t = Term::pits(std::move(t), atom());
    }
    return t;
  }

  Term atom() {
    switch (tok_.kind) {
      case Tok::Empty:
        shift();
        return Term::empty();
      case Tok::Label: {
        Term t = Term::edge(std::move(tok_.value));
        shift();
        return t;
      }
      case Tok::LParen: {
        shift();
        Term t = sum();
        if (tok_.kind != Tok::RParen) throw err("expected ')'");
        shift();
        return t;
      }
      default:
        throw err("expected a label, 'e' or '('");
    }
  }

  Lexer lexer_;
  Token tok_{Tok::End, "", 1, 1};
};

int precedence(Term::Kind k) {
  switch (k) {
    case Term::Kind::Overlay: return 0;
    case Term::Kind::Into: return 1;
    case Term::Kind::Tips: return 2;
    case Term::Kind::Pits: return 3;
    default: return 4;  // atoms never need parentheses
  }
}

const char* spelling(Term::Kind k) {
  switch (k) {
    case Term::Kind::Overlay: return " + ";
    case Term::Kind::Into: return " >> ";
    case Term::Kind::Tips: return " >< ";
    default: return " <> ";
  }
}

void render(const Term& t, int parent_prec, bool right_child, std::string& out) {
  int prec = precedence(t.kind());
  bool parens = prec < parent_prec || (prec == parent_prec && right_child);
  if (parens) out.push_back('(');
  switch (t.kind()) {
    case Term::Kind::Empty:
      out.push_back('e');
      break;
    case Term::Kind::Edge:
      out += render_label(t.label());
      break;
    default:
      render(t.left(), prec, false, out);
      out += spelling(t.kind());
      render(t.right(), prec, true, out);
      break;
  }
  if (parens) out.push_back(')');
}

using nlohmann::json;

json parse_json(std::string_view doc) {
  json j = json::parse(doc, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw DocumentError("not well-formed JSON");
  return j;
}

std::vector<std::string> string_list(const json& j, const char* field) {
  if (!j.is_array()) throw DocumentError(std::string("'") + field + "' must be a list");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string())
      throw DocumentError(std::string("'") + field + "' entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

Term parse_expr(std::string_view src) { return Parser(src).parse(); }

std::string render_expr(const Term& t) {
  std::string out;
  render(t, 0, false, out);
  return out;
}

std::string render_label(const std::string& label) {
  bool bare = !label.empty() && label != "e";
  for (char c : label)
    if (!is_word_char(c)) bare = false;
  if (bare) return label;
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string flow_to_doc(const Flow& g) {
  json nodes = json::array();
  for (const auto& n : g.nodes()) {
    json node;
    node["tips"] = json(n.tips);
    node["pits"] = json(n.pits);
    nodes.push_back(std::move(node));
  }
  json doc;
  doc["nodes"] = std::move(nodes);
  return doc.dump(2) + "\n";
}

Flow flow_from_doc(std::string_view doc) {
  json j = parse_json(doc);
  if (!j.is_object() || !j.contains("nodes"))
    throw DocumentError("expected an object with a 'nodes' field");
  if (!j["nodes"].is_array()) throw DocumentError("'nodes' must be a list");
  Flow::NodeSet raw;
  for (const auto& item : j["nodes"]) {
    if (!item.is_object() || !item.contains("tips") || !item.contains("pits"))
      throw DocumentError("each node needs 'tips' and 'pits' lists");
    FlowNode<std::string> n;
    for (auto& t : string_list(item["tips"], "tips")) n.tips.insert(std::move(t));
    for (auto& p : string_list(item["pits"], "pits")) n.pits.insert(std::move(p));
    raw.insert(std::move(n));
  }
  return validate<std::string>(raw);
}

std::string export_dot(const Flow& g) {
  std::map<std::string, std::size_t> tip_owner, pit_owner;
  std::size_t index = 0;
  std::string out = "digraph flow {\n";
  for (const auto& n : g.nodes()) {
    out += "  n" + std::to_string(index) + " [shape=point];\n";
    for (const auto& t : n.tips) tip_owner[t] = index;
    for (const auto& p : n.pits) pit_owner[p] = index;
    ++index;
  }
  for (const auto& [label, from] : pit_owner) {
    out += "  n" + std::to_string(from) + " -> n" + std::to_string(tip_owner.at(label)) +
           " [label=" + quote_dot(label) + "];\n";
  }
  out += "}\n";
  return out;
}

double WeightTable::at(const std::string& label) const {
  auto it = weights.find(label);
  if (it != weights.end()) return it->second;
  if (fallback) return *fallback;
  throw Error("WeightMissing",
              "no weight for label " + render_label(label) + " and no default declared");
}

WeightTable weights_from_doc(std::string_view doc) {
  json j = parse_json(doc);
  if (!j.is_object()) throw DocumentError("expected a JSON object of weights");
  WeightTable table;
  const json* entries = &j;
  if (j.contains("weights") && j["weights"].is_object()) {
    entries = &j["weights"];
    if (j.contains("default")) {
      if (!j["default"].is_number()) throw DocumentError("'default' must be a number");
      table.fallback = j["default"].get<double>();
    }
  }
  for (const auto& [key, value] : entries->items()) {
    if (!value.is_number())
      throw DocumentError("weight for " + render_label(key) + " must be a number");
    table.weights[key] = value.get<double>();
  }
  return table;
}

std::string format_weight(double w) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, w);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace edgegraph::text
