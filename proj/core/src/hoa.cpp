#include "dra2dpa/hoa.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "dra2dpa/sbacc.hpp"

namespace dra2dpa {

namespace {

// ---------------------------------------------------------------- tokenizer

enum class TokenKind {
  kHeaderName,  // identifier immediately followed by ':'
  kIdent,
  kInt,
  kString,
  kPunct,  // one of [ ] { } ( ) ! & |
  kBody,   // --BODY--
  kEnd,    // --END--
  kEof,
};

struct Token {
  TokenKind kind = TokenKind::kEof;
  std::string text;
  std::uint64_t value = 0;
  int line = 1;
  int column = 1;
};

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token token = current_;
    advance();
    return token;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(current_.line, current_.column, message);
  }

 private:
  void advance() {
    skip_space_and_comments();
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = TokenKind::kEof;
      current_.text.clear();
      return;
    }
    const char c = text_[pos_];
    if (c == '"') {
      read_string();
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      read_int();
      return;
    }
    if (c == '-' && text_.substr(pos_).starts_with("--")) {
      read_marker();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@') {
      read_ident();
      return;
    }
    if (std::string_view("[]{}()!&|").find(c) != std::string_view::npos) {
      current_.kind = TokenKind::kPunct;
      current_.text.assign(1, c);
      bump();
      return;
    }
    throw ParseError(line_, column_, std::string("unexpected character '") + c + "'");
  }

  void skip_space_and_comments() {
    for (;;) {
      while (pos_ < text_.size() &&
             std::isspace(static_cast<unsigned char>(text_[pos_])))
        bump();
      if (text_.substr(pos_).starts_with("/*")) {
        int depth = 0;
        const int line = line_;
        const int column = column_;
        while (pos_ < text_.size()) {
          if (text_.substr(pos_).starts_with("/*")) {
            ++depth;
            bump();
            bump();
          } else if (text_.substr(pos_).starts_with("*/")) {
            --depth;
            bump();
            bump();
            if (depth == 0) break;
          } else {
            bump();
          }
        }
        if (depth != 0) throw ParseError(line, column, "unterminated comment");
        continue;
      }
      return;
    }
  }

  void read_string() {
    bump();  // opening quote
    std::string value;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) {
        bump();
        value += text_[pos_];
        bump();
      } else {
        value += text_[pos_];
        bump();
      }
    }
    if (pos_ >= text_.size())
      throw ParseError(current_.line, current_.column, "unterminated string");
    bump();  // closing quote
    current_.kind = TokenKind::kString;
    current_.text = std::move(value);
  }

  void read_int() {
    std::uint64_t value = 0;
    std::string text;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      text += text_[pos_];
      bump();
    }
    current_.kind = TokenKind::kInt;
    current_.value = value;
    current_.text = std::move(text);
  }

  void read_marker() {
    std::string text;
    while (pos_ < text_.size() &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      text += text_[pos_];
      bump();
    }
    if (text == "--BODY--")
      current_.kind = TokenKind::kBody;
    else if (text == "--END--")
      current_.kind = TokenKind::kEnd;
    else
      throw ParseError(current_.line, current_.column,
                       "unknown marker " + text);
    current_.text = std::move(text);
  }

  void read_ident() {
    std::string text;
    if (text_[pos_] == '@') {  // alias name; only ever reported as an error
      text += '@';
      bump();
    }
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
        text += c;
        bump();
      } else {
        break;
      }
    }
    if (pos_ < text_.size() && text_[pos_] == ':') {
      bump();
      current_.kind = TokenKind::kHeaderName;
    } else {
      current_.kind = TokenKind::kIdent;
    }
    current_.text = std::move(text);
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

// ------------------------------------------------- label / acceptance trees

struct Expr {
  enum Kind { kTrue, kFalse, kAtom, kNot, kAnd, kOr, kFin, kInf } kind = kTrue;
  std::uint32_t value = 0;  // AP index or acceptance set index
  std::vector<Expr> children;

  bool operator==(const Expr&) const = default;
};

Expr make_node(Expr::Kind kind, std::vector<Expr> children) {
  // Flatten nested conjunctions/disjunctions so that associativity does not
  // matter when matching shapes.
  Expr node;
  node.kind = kind;
  for (Expr& child : children) {
    if (child.kind == kind)
      for (Expr& grand : child.children) node.children.push_back(std::move(grand));
    else
      node.children.push_back(std::move(child));
  }
  return node;
}

class ExprParser {
 public:
  ExprParser(Tokenizer& tokens, bool acceptance)
      : tokens_(tokens), acceptance_(acceptance) {}

  Expr parse() { return parse_or(); }

 private:
  Expr parse_or() {
    std::vector<Expr> terms{parse_and()};
    while (is_punct("|")) {
      tokens_.take();
      terms.push_back(parse_and());
    }
    if (terms.size() == 1) return std::move(terms.front());
    return make_node(Expr::kOr, std::move(terms));
  }

  Expr parse_and() {
    std::vector<Expr> terms{parse_unary()};
    while (is_punct("&")) {
      tokens_.take();
      terms.push_back(parse_unary());
    }
    if (terms.size() == 1) return std::move(terms.front());
    return make_node(Expr::kAnd, std::move(terms));
  }

  Expr parse_unary() {
    const Token& token = tokens_.peek();
    if (is_punct("!")) {
      if (acceptance_) tokens_.fail("negation not allowed here");
      tokens_.take();
      Expr node;
      node.kind = Expr::kNot;
      node.children.push_back(parse_unary());
      return node;
    }
    if (is_punct("(")) {
      tokens_.take();
      Expr inner = parse_or();
      expect_punct(")");
      return inner;
    }
    if (token.kind == TokenKind::kInt) {
      if (acceptance_) tokens_.fail("expected Fin(...) or Inf(...)");
      Expr node;
      node.kind = Expr::kAtom;
      node.value = static_cast<std::uint32_t>(tokens_.take().value);
      return node;
    }
    if (token.kind == TokenKind::kIdent) {
      if (token.text == "t") {
        tokens_.take();
        return Expr{Expr::kTrue, 0, {}};
      }
      if (token.text == "f") {
        tokens_.take();
        return Expr{Expr::kFalse, 0, {}};
      }
      if (acceptance_ && (token.text == "Fin" || token.text == "Inf")) {
        Expr node;
        node.kind = token.text == "Fin" ? Expr::kFin : Expr::kInf;
        tokens_.take();
        expect_punct("(");
        if (tokens_.peek().kind == TokenKind::kPunct &&
            tokens_.peek().text == "!")
          tokens_.fail("negated acceptance sets are not supported");
        if (tokens_.peek().kind != TokenKind::kInt)
          tokens_.fail("expected acceptance set index");
        node.value = static_cast<std::uint32_t>(tokens_.take().value);
        expect_punct(")");
        return node;
      }
      tokens_.fail("unexpected identifier '" + token.text + "'");
    }
    tokens_.fail("unexpected token in expression");
  }

  bool is_punct(std::string_view text) const {
    return tokens_.peek().kind == TokenKind::kPunct &&
           tokens_.peek().text == text;
  }
  void expect_punct(std::string_view text) {
    if (!is_punct(text)) tokens_.fail("expected '" + std::string(text) + "'");
    tokens_.take();
  }

  Tokenizer& tokens_;
  bool acceptance_;
};

bool eval_label(const Expr& expr, Letter letter) {
  switch (expr.kind) {
    case Expr::kTrue:
      return true;
    case Expr::kFalse:
      return false;
    case Expr::kAtom:
      return letter & (Letter{1} << expr.value);
    case Expr::kNot:
      return !eval_label(expr.children.front(), letter);
    case Expr::kAnd:
      for (const Expr& child : expr.children)
        if (!eval_label(child, letter)) return false;
      return true;
    case Expr::kOr:
      for (const Expr& child : expr.children)
        if (eval_label(child, letter)) return true;
      return false;
    default:
      return false;
  }
}

std::uint32_t max_atom(const Expr& expr) {
  std::uint32_t max = 0;
  if (expr.kind == Expr::kAtom) max = expr.value + 1;
  for (const Expr& child : expr.children)
    max = std::max(max, max_atom(child));
  return max;
}

// ------------------------------------------------------ raw parsed document

struct RawEdge {
  std::optional<Expr> label;
  StateId target = 0;
  std::vector<std::uint32_t> marks;
  int line = 0;
  int column = 0;
};

struct RawState {
  StateId id = 0;
  std::string name;
  std::vector<std::uint32_t> marks;
  std::vector<RawEdge> edges;
  int line = 0;
  int column = 0;
};

struct RawDocument {
  std::optional<std::uint64_t> states;
  std::optional<std::uint64_t> start;
  bool start_seen = false;
  std::vector<std::string> aps;
  bool aps_seen = false;
  std::optional<std::uint64_t> acc_count;
  std::optional<Expr> acc_formula;
  std::vector<std::string> acc_name;
  std::vector<RawState> body;
};

RawDocument parse_document(Tokenizer& tokens) {
  RawDocument doc;
  if (tokens.peek().kind != TokenKind::kHeaderName ||
      tokens.peek().text != "HOA")
    tokens.fail("expected HOA: v1 header");
  tokens.take();
  if (tokens.peek().kind != TokenKind::kIdent || tokens.peek().text != "v1")
    tokens.fail("unsupported HOA version");
  tokens.take();

  while (tokens.peek().kind == TokenKind::kHeaderName) {
    const Token header = tokens.take();
    const std::string& name = header.text;
    auto take_int = [&](const char* what) {
      if (tokens.peek().kind != TokenKind::kInt)
        tokens.fail(std::string("expected integer after ") + what);
      return tokens.take().value;
    };
    if (name == "States") {
      if (doc.states) tokens.fail("duplicate States header");
      doc.states = take_int("States:");
    } else if (name == "Start") {
      if (doc.start_seen)
        throw ParseError(header.line, header.column,
                         "multiple initial states are not supported");
      doc.start_seen = true;
      doc.start = take_int("Start:");
      if (tokens.peek().kind == TokenKind::kPunct &&
          tokens.peek().text == "&")
        throw ParseError(header.line, header.column,
                         "universal initial states are not supported");
    } else if (name == "AP") {
      if (doc.aps_seen) tokens.fail("duplicate AP header");
      doc.aps_seen = true;
      const std::uint64_t count = take_int("AP:");
      for (std::uint64_t i = 0; i < count; ++i) {
        if (tokens.peek().kind != TokenKind::kString)
          tokens.fail("expected AP name string");
        doc.aps.push_back(tokens.take().text);
      }
    } else if (name == "Acceptance") {
      if (doc.acc_count) tokens.fail("duplicate Acceptance header");
      doc.acc_count = take_int("Acceptance:");
      ExprParser parser(tokens, /*acceptance=*/true);
      doc.acc_formula = parser.parse();
    } else if (name == "acc-name") {
      while (tokens.peek().kind == TokenKind::kIdent ||
             tokens.peek().kind == TokenKind::kInt)
        doc.acc_name.push_back(tokens.take().text);
    } else if (name == "Alias") {
      throw ParseError(header.line, header.column, "aliases are not supported");
    } else if (name == "tool" || name == "name" || name == "properties" ||
               !std::isupper(static_cast<unsigned char>(name.front()))) {
      // Skip items of headers we either know to be irrelevant or may ignore
      // by convention (lowercase first letter).
      for (;;) {
        const TokenKind kind = tokens.peek().kind;
        if (kind == TokenKind::kIdent || kind == TokenKind::kInt ||
            kind == TokenKind::kString)
          tokens.take();
        else
          break;
      }
    } else {
      throw ParseError(header.line, header.column,
                       "unsupported mandatory header " + name + ":");
    }
  }

  if (tokens.peek().kind != TokenKind::kBody) tokens.fail("expected --BODY--");
  tokens.take();

  while (tokens.peek().kind == TokenKind::kHeaderName &&
         tokens.peek().text == "State") {
    const Token header = tokens.take();
    RawState state;
    state.line = header.line;
    state.column = header.column;
    if (tokens.peek().kind == TokenKind::kPunct && tokens.peek().text == "[")
      tokens.fail("state labels are not supported");
    if (tokens.peek().kind != TokenKind::kInt)
      tokens.fail("expected state number");
    state.id = static_cast<StateId>(tokens.take().value);
    if (tokens.peek().kind == TokenKind::kString)
      state.name = tokens.take().text;
    if (tokens.peek().kind == TokenKind::kPunct && tokens.peek().text == "{") {
      tokens.take();
      while (tokens.peek().kind == TokenKind::kInt)
        state.marks.push_back(static_cast<std::uint32_t>(tokens.take().value));
      if (tokens.peek().kind != TokenKind::kPunct || tokens.peek().text != "}")
        tokens.fail("expected '}'");
      tokens.take();
    }
    for (;;) {
      RawEdge edge;
      edge.line = tokens.peek().line;
      edge.column = tokens.peek().column;
      if (tokens.peek().kind == TokenKind::kPunct &&
          tokens.peek().text == "[") {
        tokens.take();
        ExprParser parser(tokens, /*acceptance=*/false);
        edge.label = parser.parse();
        if (tokens.peek().kind != TokenKind::kPunct ||
            tokens.peek().text != "]")
          tokens.fail("expected ']'");
        tokens.take();
        if (tokens.peek().kind != TokenKind::kInt)
          tokens.fail("expected edge target");
        edge.target = static_cast<StateId>(tokens.take().value);
      } else if (tokens.peek().kind == TokenKind::kInt) {
        edge.target = static_cast<StateId>(tokens.take().value);
      } else {
        break;
      }
      if (tokens.peek().kind == TokenKind::kPunct &&
          tokens.peek().text == "&")
        tokens.fail("universal branching is not supported");
      if (tokens.peek().kind == TokenKind::kPunct &&
          tokens.peek().text == "{") {
        tokens.take();
        while (tokens.peek().kind == TokenKind::kInt)
          edge.marks.push_back(static_cast<std::uint32_t>(tokens.take().value));
        if (tokens.peek().kind != TokenKind::kPunct ||
            tokens.peek().text != "}")
          tokens.fail("expected '}'");
        tokens.take();
      }
      state.edges.push_back(std::move(edge));
    }
    doc.body.push_back(std::move(state));
  }

  if (tokens.peek().kind != TokenKind::kEnd) tokens.fail("expected --END--");
  tokens.take();
  return doc;
}

// ------------------------------------------------------------ shape matching

std::vector<Expr> disjuncts(const Expr& expr) {
  if (expr.kind == Expr::kOr) return expr.children;
  return {expr};
}
std::vector<Expr> conjuncts(const Expr& expr) {
  if (expr.kind == Expr::kAnd) return expr.children;
  return {expr};
}

// (Fin(a) & Inf(b1) & ... & Inf(bm)) per disjunct, any order, m >= 1.
std::optional<std::vector<GeneralizedRabinPair>> match_gen_rabin_shape(
    const Expr& formula, const std::vector<TransitionSet>& sets,
    bool* plain_rabin) {
  std::vector<GeneralizedRabinPair> pairs;
  *plain_rabin = true;
  if (formula.kind == Expr::kFalse) return pairs;
  for (const Expr& clause : disjuncts(formula)) {
    GeneralizedRabinPair pair;
    bool have_fin = false;
    for (const Expr& atom : conjuncts(clause)) {
      if (atom.kind == Expr::kFin && !have_fin) {
        have_fin = true;
        pair.fin = sets[atom.value];
      } else if (atom.kind == Expr::kInf) {
        pair.infs.push_back(sets[atom.value]);
      } else {
        return std::nullopt;
      }
    }
    if (!have_fin || pair.infs.empty()) return std::nullopt;
    if (pair.infs.size() > 1) *plain_rabin = false;
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

// (Fin(a) | Inf(b)) per conjunct; Fin is the I part and Inf the F part of the
// stored Streett pair (condition: Inf(fin) or Fin(inf)).
std::optional<std::vector<RabinPair>> match_streett_shape(
    const Expr& formula, const std::vector<TransitionSet>& sets) {
  std::vector<RabinPair> pairs;
  if (formula.kind == Expr::kTrue) return pairs;
  for (const Expr& clause : conjuncts(formula)) {
    const std::vector<Expr> atoms = disjuncts(clause);
    if (atoms.size() != 2) return std::nullopt;
    const Expr* fin_atom = nullptr;
    const Expr* inf_atom = nullptr;
    for (const Expr& atom : atoms) {
      if (atom.kind == Expr::kFin && !fin_atom)
        fin_atom = &atom;
      else if (atom.kind == Expr::kInf && !inf_atom)
        inf_atom = &atom;
      else
        return std::nullopt;
    }
    if (!fin_atom || !inf_atom) return std::nullopt;
    RabinPair pair;
    pair.fin = sets[inf_atom->value];
    pair.inf = sets[fin_atom->value];
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

// Canonical nesting of "parity max even/odd c" acceptance formulas, with
// top = c - 1:  Inf(top) | (Fin(top-1) & ...) on accepting levels and
// Fin(top) & (...) on rejecting ones, e.g. "parity max even 5" becomes
// Inf(4) | (Fin(3) & (Inf(2) | (Fin(1) & Inf(0)))).
Expr parity_formula(bool even, std::int64_t top) {
  const bool accepting_level = (top % 2 == 0) == even;
  Expr atom;
  atom.kind = accepting_level ? Expr::kInf : Expr::kFin;
  atom.value = static_cast<std::uint32_t>(top);
  if (accepting_level) {
    if (top == 0) return atom;
    Expr fin;
    fin.kind = Expr::kFin;
    fin.value = static_cast<std::uint32_t>(top - 1);
    if (top == 1) return make_node(Expr::kOr, {atom, fin});
    Expr rest = parity_formula(even, top - 2);
    return make_node(Expr::kOr, {atom, make_node(Expr::kAnd, {fin, rest})});
  }
  if (top == 0) return atom;
  Expr rest = parity_formula(even, top - 1);
  return make_node(Expr::kAnd, {atom, rest});
}

// --------------------------------------------------------------- layout out

struct AcceptanceLayout {
  std::string acc_name;
  std::string formula;
  std::vector<TransitionSet> sets;
};

std::string expr_to_string(const Expr& expr, bool parenthesize = false) {
  switch (expr.kind) {
    case Expr::kTrue:
      return "t";
    case Expr::kFalse:
      return "f";
    case Expr::kFin:
      return "Fin(" + std::to_string(expr.value) + ")";
    case Expr::kInf:
      return "Inf(" + std::to_string(expr.value) + ")";
    case Expr::kAnd:
    case Expr::kOr: {
      std::string join = expr.kind == Expr::kAnd ? " & " : " | ";
      std::string out;
      for (std::size_t i = 0; i < expr.children.size(); ++i) {
        if (i) out += join;
        const Expr& child = expr.children[i];
        const bool need_parens = child.kind == Expr::kAnd || child.kind == Expr::kOr;
        out += expr_to_string(child, need_parens);
      }
      if (parenthesize) return "(" + out + ")";
      return out;
    }
    default:
      return "?";
  }
}

AcceptanceLayout acceptance_layout(const Automaton& aut) {
  AcceptanceLayout layout;
  if (aut.is_rabin()) {
    const std::vector<RabinPair>& pairs = aut.rabin().pairs;
    layout.acc_name = "Rabin " + std::to_string(pairs.size());
    std::string formula;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      layout.sets.push_back(pairs[i].fin);
      layout.sets.push_back(pairs[i].inf);
      if (i) formula += " | ";
      formula += "(Fin(" + std::to_string(2 * i) + ") & Inf(" +
                 std::to_string(2 * i + 1) + "))";
    }
    layout.formula = pairs.empty() ? "f" : formula;
    return layout;
  }
  if (aut.is_streett()) {
    const std::vector<RabinPair>& pairs = aut.streett().pairs;
    layout.acc_name = "Streett " + std::to_string(pairs.size());
    std::string formula;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      layout.sets.push_back(pairs[i].inf);  // Fin part
      layout.sets.push_back(pairs[i].fin);  // Inf part
      if (i) formula += " & ";
      formula += "(Fin(" + std::to_string(2 * i) + ") | Inf(" +
                 std::to_string(2 * i + 1) + "))";
    }
    layout.formula = pairs.empty() ? "t" : formula;
    return layout;
  }
  if (aut.is_generalized_rabin()) {
    const std::vector<GeneralizedRabinPair>& pairs =
        aut.generalized_rabin().pairs;
    layout.acc_name = "generalized-Rabin " + std::to_string(pairs.size());
    std::string formula;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      layout.acc_name += " " + std::to_string(pairs[i].infs.size());
      if (i) formula += " | ";
      formula += "(Fin(" + std::to_string(layout.sets.size()) + ")";
      layout.sets.push_back(pairs[i].fin);
      for (const TransitionSet& inf : pairs[i].infs) {
        formula += " & Inf(" + std::to_string(layout.sets.size()) + ")";
        layout.sets.push_back(inf);
      }
      formula += ")";
    }
    layout.formula = pairs.empty() ? "f" : formula;
    return layout;
  }
  const ParityAcc& acc = aut.parity();
  const Priority top = max_priority(aut);
  layout.acc_name = "parity max even " + std::to_string(top + 1);
  layout.formula = expr_to_string(parity_formula(true, top));
  layout.sets.resize(top + 1);
  for (TransKey key = 0; key < acc.priority.size(); ++key)
    if (acc.priority[key] != kNoPriority)
      layout.sets[acc.priority[key]].insert(key);
  return layout;
}

// HOA labels are formulas over AP indices, unlike the display formulas used
// for DOT output.
std::string letter_label(const Dts& dts, Letter letter) {
  if (dts.ap_count == 0) return "t";
  std::string out;
  for (std::uint32_t i = 0; i < dts.ap_count; ++i) {
    if (!out.empty()) out += "&";
    if (!(letter & (Letter{1} << i))) out += '!';
    out += std::to_string(i);
  }
  return out;
}

void emit_header_and_body(std::ostream& out, const Dts& dts, StateId initial,
                          const AcceptanceLayout& layout,
                          const std::vector<std::vector<std::uint32_t>>* state_marks,
                          bool edge_marks) {
  out << "HOA: v1\n";
  out << "tool: \"dra2dpa\"\n";
  out << "States: " << dts.num_states() << "\n";
  out << "Start: " << initial << "\n";
  out << "AP: " << dts.ap_count;
  for (std::uint32_t i = 0; i < dts.ap_count; ++i) {
    out << " \"";
    if (i < dts.ap_names.size() && !dts.ap_names[i].empty())
      out << dts.ap_names[i];
    else
      out << "p" << i;
    out << "\"";
  }
  out << "\n";
  out << "acc-name: " << layout.acc_name << "\n";
  out << "Acceptance: " << layout.sets.size() << " " << layout.formula << "\n";
  out << "properties: trans-labels explicit-labels "
      << (edge_marks ? "trans-acc" : "state-acc") << " deterministic";
  if (dts.is_complete()) out << " complete";
  out << "\n";

  std::map<TransKey, std::vector<std::uint32_t>> marks_of;
  if (edge_marks)
    for (std::uint32_t set = 0; set < layout.sets.size(); ++set)
      for (TransKey key : layout.sets[set].keys()) marks_of[key].push_back(set);

  out << "--BODY--\n";
  for (StateId s = 0; s < dts.num_states(); ++s) {
    out << "State: " << s;
    if (s < dts.state_names.size() && !dts.state_names[s].empty())
      out << " \"" << dts.state_names[s] << "\"";
    if (state_marks && !(*state_marks)[s].empty()) {
      out << " {";
      for (std::size_t i = 0; i < (*state_marks)[s].size(); ++i)
        out << (i ? " " : "") << (*state_marks)[s][i];
      out << "}";
    }
    out << "\n";
    for (Letter a = 0; a < dts.alphabet_size(); ++a) {
      const StateId t = dts.succ(s, a);
      if (t == kNoState) continue;
      out << "[" << letter_label(dts, a) << "] " << t;
      if (edge_marks) {
        auto it = marks_of.find(dts.key(s, a));
        if (it != marks_of.end()) {
          out << " {";
          for (std::size_t i = 0; i < it->second.size(); ++i)
            out << (i ? " " : "") << it->second[i];
          out << "}";
        }
      }
      out << "\n";
    }
  }
  out << "--END--\n";
}

}  // namespace

// ------------------------------------------------------------------ parsing

Automaton parse_hoa_string(std::string_view text) {
  Tokenizer tokens(text);
  const RawDocument doc = parse_document(tokens);

  if (!doc.states) throw ParseError(1, 1, "missing States: header");
  if (!doc.start) throw ParseError(1, 1, "missing Start: header");
  if (!doc.acc_count || !doc.acc_formula)
    throw ParseError(1, 1, "missing Acceptance: header");
  const StateId num_states = static_cast<StateId>(*doc.states);
  if (num_states == 0) throw ParseError(1, 1, "automaton has no states");
  if (*doc.start >= num_states)
    throw ParseError(1, 1, "initial state out of range");
  if (doc.aps.size() > 16) throw ParseError(1, 1, "too many atomic propositions");

  Dts dts = make_dts(static_cast<std::uint32_t>(doc.aps.size()), num_states,
                     static_cast<StateId>(*doc.start));
  dts.ap_names = doc.aps;
  dts.state_names.assign(num_states, "");

  const std::uint32_t num_sets = static_cast<std::uint32_t>(*doc.acc_count);
  std::vector<TransitionSet> sets(num_sets);
  StateMarkedDts marked;
  marked.state_sets.assign(num_states, {});
  marked.num_sets = num_sets;

  std::vector<bool> seen(num_states, false);
  for (const RawState& state : doc.body) {
    if (state.id >= num_states)
      throw ParseError(state.line, state.column, "state number out of range");
    if (seen[state.id])
      throw ParseError(state.line, state.column, "duplicate state section");
    seen[state.id] = true;
    dts.state_names[state.id] = state.name;
    for (std::uint32_t mark : state.marks) {
      if (mark >= num_sets)
        throw ParseError(state.line, state.column,
                         "acceptance set index out of range");
      marked.state_sets[state.id].push_back(mark);
    }

    bool any_implicit = false;
    bool any_explicit = false;
    for (const RawEdge& edge : state.edges)
      (edge.label ? any_explicit : any_implicit) = true;
    if (any_implicit && any_explicit)
      throw ParseError(state.line, state.column,
                       "mixed implicit and explicit edge labels");
    if (any_implicit && state.edges.size() != dts.alphabet_size())
      throw ParseError(state.line, state.column,
                       "implicit labels require one edge per letter");

    for (std::size_t i = 0; i < state.edges.size(); ++i) {
      const RawEdge& edge = state.edges[i];
      if (edge.target >= num_states)
        throw ParseError(edge.line, edge.column, "edge target out of range");
      for (std::uint32_t mark : edge.marks)
        if (mark >= num_sets)
          throw ParseError(edge.line, edge.column,
                           "acceptance set index out of range");
      if (edge.label && max_atom(*edge.label) > dts.ap_count)
        throw ParseError(edge.line, edge.column, "AP index out of range");
      for (Letter letter = 0; letter < dts.alphabet_size(); ++letter) {
        const bool applies =
            edge.label ? eval_label(*edge.label, letter) : letter == i;
        if (!applies) continue;
        if (dts.succ(state.id, letter) != kNoState)
          throw ParseError(edge.line, edge.column,
                           "nondeterministic automaton: two edges share a letter");
        dts.set_succ(state.id, letter, edge.target);
        for (std::uint32_t mark : edge.marks)
          sets[mark].insert(dts.key(state.id, letter));
      }
    }
  }
  for (StateId s = 0; s < num_states; ++s)
    if (!seen[s]) throw ParseError(1, 1, "missing state section");

  // State marks become transition marks on every outgoing edge.
  marked.dts = dts;
  const std::vector<TransitionSet> from_states = to_transition_based(marked);
  for (std::uint32_t set = 0; set < num_sets; ++set)
    sets[set] = union_of(sets[set], from_states[set]);

  // Interpret the acceptance formula, using acc-name as arbiter when present.
  const Expr& formula = *doc.acc_formula;
  {
    struct CheckAtoms {
      std::uint32_t num_sets;
      void operator()(const Expr& expr) const {
        if ((expr.kind == Expr::kFin || expr.kind == Expr::kInf) &&
            expr.value >= num_sets)
          throw ParseError(1, 1, "acceptance formula uses undeclared set");
        for (const Expr& child : expr.children) (*this)(child);
      }
    };
    CheckAtoms{num_sets}(formula);
  }

  Automaton result;
  result.dts = std::move(dts);
  result.declared_sets = num_sets;

  const std::string kind = doc.acc_name.empty() ? "" : doc.acc_name.front();
  auto fail_kind = [&](const std::string& message) {
    throw ParseError(1, 1, message);
  };

  auto build_parity = [&](bool even) {
    if (num_sets == 0) return false;
    if (!(formula == parity_formula(even, static_cast<std::int64_t>(num_sets) - 1)))
      return false;
    ParityAcc acc;
    acc.priority.assign(result.dts.delta.size(), kNoPriority);
    std::vector<std::int64_t> mark_of(result.dts.delta.size(), -1);
    for (std::uint32_t set = 0; set < num_sets; ++set)
      for (TransKey key : sets[set].keys()) {
        if (mark_of[key] != -1)
          fail_kind("parity input marks a transition with two sets");
        mark_of[key] = set;
      }
    bool all_marked = true;
    for (TransKey key = 0; key < result.dts.delta.size(); ++key)
      if (result.dts.delta[key] != kNoState && mark_of[key] == -1)
        all_marked = false;
    for (TransKey key = 0; key < result.dts.delta.size(); ++key) {
      if (result.dts.delta[key] == kNoState) continue;
      const std::int64_t mark = mark_of[key];
      if (even)
        acc.priority[key] = all_marked ? static_cast<Priority>(mark)
                            : mark >= 0 ? static_cast<Priority>(mark + 2)
                                        : 1;
      else
        acc.priority[key] =
            mark >= 0 ? static_cast<Priority>(mark + 1) : 0;
    }
    result.acceptance = std::move(acc);
    return true;
  };

  bool plain_rabin = false;
  if (kind == "Rabin" || kind == "generalized-Rabin" || kind == "none") {
    auto pairs = match_gen_rabin_shape(formula, sets, &plain_rabin);
    if (!pairs) fail_kind("acceptance formula does not match " + kind);
    if (kind == "generalized-Rabin") {
      result.acceptance = GeneralizedRabinAcc{std::move(*pairs)};
    } else {
      RabinAcc acc;
      for (GeneralizedRabinPair& pair : *pairs) {
        if (pair.infs.size() != 1)
          fail_kind("Rabin acceptance with several required sets per pair");
        acc.pairs.push_back({std::move(pair.fin), std::move(pair.infs.front())});
      }
      result.acceptance = std::move(acc);
    }
  } else if (kind == "Streett" || kind == "all") {
    auto pairs = match_streett_shape(formula, sets);
    if (!pairs) fail_kind("acceptance formula does not match Streett");
    result.acceptance = StreettAcc{std::move(*pairs)};
  } else if (kind == "parity") {
    if (doc.acc_name.size() != 4 || doc.acc_name[1] != "max")
      fail_kind("only parity max even/odd is supported");
    const bool even = doc.acc_name[2] == "even";
    if (!even && doc.acc_name[2] != "odd")
      fail_kind("only parity max even/odd is supported");
    if (!build_parity(even))
      fail_kind("acceptance formula does not match the parity acc-name");
  } else if (kind.empty()) {
    // No acc-name: recognize the formula shape directly.
    if (build_parity(true) || build_parity(false)) {
      // done
    } else if (auto gr = match_gen_rabin_shape(formula, sets, &plain_rabin)) {
      if (plain_rabin) {
        RabinAcc acc;
        for (GeneralizedRabinPair& pair : *gr)
          acc.pairs.push_back({std::move(pair.fin), std::move(pair.infs.front())});
        result.acceptance = std::move(acc);
      } else {
        result.acceptance = GeneralizedRabinAcc{std::move(*gr)};
      }
    } else if (auto streett = match_streett_shape(formula, sets)) {
      result.acceptance = StreettAcc{std::move(*streett)};
    } else {
      fail_kind("unrecognized acceptance formula shape");
    }
  } else {
    fail_kind("unsupported acc-name " + kind);
  }

  validate(result);
  return result;
}

Automaton parse_hoa(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_hoa_string(buffer.str());
}

// ----------------------------------------------------------------- emission

void emit_hoa(const Automaton& aut, std::ostream& out,
              const HoaEmitOptions& options) {
  if (options.state_based) {
    if (!aut.is_parity())
      throw std::invalid_argument(
          "state-based emission is only supported for parity output");
    const StateBasedParity sb = to_state_based(aut);
    const Automaton tb = to_automaton(sb);
    AcceptanceLayout layout = acceptance_layout(tb);
    std::vector<std::vector<std::uint32_t>> state_marks(sb.dts.num_states());
    for (StateId s = 0; s < sb.dts.num_states(); ++s)
      state_marks[s].push_back(sb.state_priority[s]);
    layout.sets.clear();  // marks carried on states
    layout.sets.resize(max_priority(tb) + 1);
    emit_header_and_body(out, sb.dts, sb.dts.initial, layout, &state_marks,
                         /*edge_marks=*/false);
    return;
  }
  const AcceptanceLayout layout = acceptance_layout(aut);
  emit_header_and_body(out, aut.dts, aut.dts.initial, layout, nullptr,
                       /*edge_marks=*/true);
}

std::string emit_hoa_string(const Automaton& aut, const HoaEmitOptions& options) {
  std::ostringstream out;
  emit_hoa(aut, out, options);
  return out.str();
}

void emit_dot(const Automaton& aut, std::ostream& out) {
  const Dts& dts = aut.dts;
  out << "digraph automaton {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=ellipse];\n";
  out << "  init [shape=point, style=invis];\n";
  out << "  init -> s" << dts.initial << ";\n";
  for (StateId s = 0; s < dts.num_states(); ++s)
    out << "  s" << s << " [label=\"" << dts.state_name(s) << "\"];\n";

  std::map<TransKey, std::vector<std::uint32_t>> marks_of;
  if (!aut.is_parity()) {
    const AcceptanceLayout layout = acceptance_layout(aut);
    for (std::uint32_t set = 0; set < layout.sets.size(); ++set)
      for (TransKey key : layout.sets[set].keys()) marks_of[key].push_back(set);
  }
  for (StateId s = 0; s < dts.num_states(); ++s) {
    for (Letter a = 0; a < dts.alphabet_size(); ++a) {
      const StateId t = dts.succ(s, a);
      if (t == kNoState) continue;
      out << "  s" << s << " -> s" << t << " [label=\""
          << letter_formula(dts, a);
      if (aut.is_parity()) {
        out << " " << aut.parity().priority[dts.key(s, a)];
      } else {
        auto it = marks_of.find(dts.key(s, a));
        if (it != marks_of.end()) {
          out << " {";
          for (std::size_t i = 0; i < it->second.size(); ++i)
            out << (i ? " " : "") << it->second[i];
          out << "}";
        }
      }
      out << "\"];\n";
    }
  }
  out << "}\n";
}

}  // namespace dra2dpa
