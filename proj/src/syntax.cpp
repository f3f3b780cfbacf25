#include "cello/syntax.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace cello::syntax {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

bool ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool ident_char(unsigned char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

bool digit(unsigned char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    while (pos_ < src_.size()) step();
    return std::move(out_);
  }

 private:
  char at(std::size_t i) const { return i < src_.size() ? src_[i] : '\0'; }

  void emit(TokenKind kind, std::size_t begin) {
    out_.push_back({kind, {begin, pos_}, directive_});
    line_start_ = false;
  }

  // Newline handling: a directive ends at a newline not escaped by a backslash.
  void newline() {
    std::size_t k = pos_;
    while (k > 0 && src_[k - 1] == '\r') --k;
    const bool continued = k > 0 && src_[k - 1] == '\\';
    if (!continued) directive_ = -1;
    line_start_ = true;
    ++pos_;
  }

  void step() {
    const auto c = static_cast<unsigned char>(src_[pos_]);
    if (c == '\n') {
      newline();
      return;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v' || c == '\\') {
      ++pos_;
      return;
    }
    const std::size_t begin = pos_;
    if (c == '/' && at(pos_ + 1) == '/') {
      line_comment();
      emit(TokenKind::Comment, begin);
      return;
    }
    if (c == '/' && at(pos_ + 1) == '*') {
      const auto close = src_.find("*/", pos_ + 2);
      if (close == std::string_view::npos) {
        pos_ = src_.size();
        emit(TokenKind::Unterminated, begin);
      } else {
        pos_ = close + 2;
        const bool keep = line_start_;
        emit(TokenKind::Comment, begin);
        line_start_ = keep;
      }
      return;
    }
    if (c == '#' && line_start_ && directive_ < 0) {
      directive_ = next_directive_++;
      ++pos_;
      emit(TokenKind::Punct, begin);
      return;
    }
    if (ident_start(c)) {
      while (pos_ < src_.size() && ident_char(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const auto word = src_.substr(begin, pos_ - begin);
      if (at(pos_) == '"' && (word == "R" || word == "u8R" || word == "uR" || word == "UR" || word == "LR")) {
        raw_string(begin);
        return;
      }
      if ((at(pos_) == '"' || at(pos_) == '\'') && (word == "u8" || word == "u" || word == "U" || word == "L")) {
        quoted(begin, at(pos_));
        return;
      }
      emit(TokenKind::Identifier, begin);
      return;
    }
    if (digit(c) || (c == '.' && digit(static_cast<unsigned char>(at(pos_ + 1))))) {
      number();
      emit(TokenKind::Number, begin);
      return;
    }
    if (c == '"' || c == '\'') {
      quoted(begin, static_cast<char>(c));
      return;
    }
    if (c == ':' && at(pos_ + 1) == ':') {
      pos_ += 2;
    } else if (c == '-' && at(pos_ + 1) == '>') {
      pos_ += 2;
    } else {
      ++pos_;
    }
    emit(TokenKind::Punct, begin);
  }

  void line_comment() {
    while (pos_ < src_.size()) {
      if (src_[pos_] == '\n') {
        std::size_t k = pos_;
        while (k > 0 && src_[k - 1] == '\r') --k;
        if (k > 0 && src_[k - 1] == '\\') {
          ++pos_;
          continue;
        }
        return;
      }
      ++pos_;
    }
  }

  void number() {
    while (pos_ < src_.size()) {
      const auto ch = static_cast<unsigned char>(src_[pos_]);
      if ((ch == '+' || ch == '-') && pos_ > 0) {
        const char prev = src_[pos_ - 1];
        if (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P') {
          ++pos_;
          continue;
        }
        return;
      }
      if (ch == '\'' && ident_char(static_cast<unsigned char>(at(pos_ + 1)))) {
        pos_ += 2;
        continue;
      }
      if (ident_char(ch) || ch == '.') {
        ++pos_;
        continue;
      }
      return;
    }
  }

  void quoted(std::size_t begin, char quote) {
    ++pos_;  // opening quote
    while (pos_ < src_.size()) {
      const char ch = src_[pos_];
      if (ch == '\\') {
        pos_ += 2;
        continue;
      }
      if (ch == quote) {
        ++pos_;
        emit(quote == '"' ? TokenKind::String : TokenKind::Char, begin);
        return;
      }
      if (ch == '\n') break;
      ++pos_;
    }
    pos_ = std::min(pos_, src_.size());
    // Stray quotes in directives (#error don't ...) are not syntax errors.
    emit(directive_ >= 0 ? TokenKind::String : TokenKind::Unterminated, begin);
  }

  void raw_string(std::size_t begin) {
    const std::size_t open = src_.find('(', pos_ + 1);
    if (open == std::string_view::npos || open - pos_ - 1 > 16) {
      quoted(begin, '"');
      return;
    }
    const std::string terminator = ")" + std::string(src_.substr(pos_ + 1, open - pos_ - 1)) + "\"";
    const auto close = src_.find(terminator, open + 1);
    if (close == std::string_view::npos) {
      pos_ = src_.size();
      emit(TokenKind::Unterminated, begin);
      return;
    }
    pos_ = close + terminator.size();
    emit(TokenKind::String, begin);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  bool line_start_ = true;
  int directive_ = -1;
  int next_directive_ = 0;
  std::vector<Token> out_;
};

bool is_opener(std::string_view t) { return t == "(" || t == "[" || t == "{"; }
bool is_closer(std::string_view t) { return t == ")" || t == "]" || t == "}"; }

char closer_for(char open) { return open == '(' ? ')' : open == '[' ? ']' : '}'; }

bool attribute_keyword(std::string_view t) {
  static constexpr std::array<std::string_view, 18> kWords = {
      "alignas", "alignof", "decltype", "__attribute__", "__declspec", "noexcept", "throw", "requires", "sizeof",
      "__launch_bounds__", "static_assert", "if", "while", "switch", "for", "catch", "return", "case"};
  return std::find(kWords.begin(), kWords.end(), t) != kWords.end();
}

bool class_key(std::string_view t) { return t == "class" || t == "struct" || t == "union" || t == "enum"; }

bool access_specifier(std::string_view t) {
  return t == "public" || t == "private" || t == "protected" || t == "signals" || t == "slots";
}

class Parser {
 public:
  Parser(std::string_view src, SyntaxTree& tree) : src_(src), tree_(tree) {
    for (std::size_t i = 0; i < tree.tokens.size(); ++i) {
      const auto& t = tree.tokens[i];
      if (t.kind == TokenKind::Unterminated) ++tree.error_count;
      if (t.kind != TokenKind::Comment && t.directive < 0) sig_.push_back(i);
    }
    match_.assign(sig_.size(), npos);
    tree.scaffolding.assign(tree.tokens.size(), false);
    match_brackets();
  }

  void run() { tree_.nodes = scope(0, sig_.size(), "", false); }

 private:
  std::string_view text(std::size_t s) const {
    const auto& r = tree_.tokens[sig_[s]].range;
    return src_.substr(r.begin, r.size());
  }
  bool is(std::size_t s, std::string_view v) const { return s < sig_.size() && text(s) == v; }
  bool ident(std::size_t s) const {
    return s < sig_.size() && tree_.tokens[sig_[s]].kind == TokenKind::Identifier;
  }
  TokenKind kind(std::size_t s) const { return tree_.tokens[sig_[s]].kind; }

  void match_brackets() {
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < sig_.size(); ++s) {
      if (kind(s) != TokenKind::Punct) continue;
      const auto t = text(s);
      if (is_opener(t)) {
        stack.push_back(s);
      } else if (is_closer(t)) {
        auto it = std::find_if(stack.rbegin(), stack.rend(),
                               [&](std::size_t o) { return closer_for(text(o)[0]) == t[0]; });
        if (it == stack.rend()) {
          ++tree_.error_count;  // stray closer
          continue;
        }
        const auto depth = static_cast<std::size_t>(std::distance(stack.rbegin(), it));
        tree_.error_count += depth;  // openers left unclosed by this closer
        stack.resize(stack.size() - depth);
        match_[stack.back()] = s;
        match_[s] = stack.back();
        stack.pop_back();
      }
    }
    tree_.error_count += stack.size();
  }

  SyntaxNode make(NodeKind k, std::size_t first, std::size_t last, const std::string& prefix) const {
    SyntaxNode n;
    n.kind = k;
    n.first_token = sig_[first];
    n.last_token = sig_[last];
    n.range = {tree_.tokens[n.first_token].range.begin, tree_.tokens[n.last_token].range.end};
    (void)prefix;
    return n;
  }

  void set_name(SyntaxNode& n, std::string name, const std::string& prefix) const {
    n.qualified = name.empty() ? std::string() : prefix + name;
    n.name = std::move(name);
  }

  void mark_scaffolding(std::size_t s) { tree_.scaffolding[sig_[s]] = true; }

  // Index just past the '>' closing the angle list opened at `lt`; stops early at ';' or '{'.
  std::size_t skip_angles(std::size_t lt, std::size_t end) const {
    int depth = 0;
    std::size_t q = lt;
    while (q < end) {
      const auto t = text(q);
      if (t == "<") {
        ++depth;
      } else if (t == ">") {
        if (--depth == 0) return q + 1;
      } else if (t == ";" || t == "{" || t == "}") {
        return q;
      } else if ((t == "(" || t == "[") && match_[q] != npos) {
        q = match_[q];
      }
      ++q;
    }
    return end;
  }

  bool operator_before(std::size_t s, std::size_t lo) const {
    for (std::size_t back = 1; back <= 3 && s >= lo + back; ++back) {
      if (is(s - back, "operator")) return true;
      if (kind(s - back) != TokenKind::Punct) return false;
    }
    return false;
  }

  // Position of the parameter list of a function declarator among `parens`, or npos.
  std::size_t declarator_paren(const std::vector<std::size_t>& parens, std::size_t lo) const {
    for (auto it = parens.rbegin(); it != parens.rend(); ++it) {
      const std::size_t p = *it;
      if (p == lo) continue;
      const std::size_t prev = p - 1;
      const auto t = text(prev);
      if (ident(prev)) {
        if (attribute_keyword(t)) continue;
        return p;
      }
      if (t == ">") return p;
      if (t == ")" && match_[prev] != npos && match_[prev] > lo && is(match_[prev] - 1, "operator")) return p;
      if (kind(prev) == TokenKind::Punct && operator_before(p, lo)) return p;
    }
    return npos;
  }

  std::string declarator_name(std::size_t paren, std::size_t lo) const {
    std::size_t s = paren - 1;
    std::string name;
    if (is(s, ")") && match_[s] != npos && match_[s] > lo && is(match_[s] - 1, "operator")) {
      s = match_[s] - 1;
      name = "operator()";
    } else if (kind(s) == TokenKind::Punct && !is(s, ">") && operator_before(paren, lo)) {
      std::string sym;
      while (!is(s, "operator")) sym.insert(0, text(s)), --s;
      name = "operator" + sym;
    } else {
      if (is(s, ">")) {
        int depth = 0;
        while (s > lo) {
          if (is(s, ">")) ++depth;
          if (is(s, "<") && --depth == 0) break;
          --s;
        }
        if (s == lo) return {};
        --s;
      }
      if (!ident(s)) return {};
      name = std::string(text(s));
      if (s > lo && is(s - 1, "operator")) {
        --s;
        name = "operator " + name;
      }
    }
    if (s > lo && is(s - 1, "~")) {
      --s;
      name.insert(0, "~");
    }
    while (s >= lo + 2 && is(s - 1, "::") && (ident(s - 2) || is(s - 2, ">"))) {
      std::size_t q = s - 2;
      std::string args;
      if (is(q, ">")) {
        int depth = 0;
        std::size_t r = q;
        while (r > lo) {
          if (is(r, ">")) ++depth;
          if (is(r, "<") && --depth == 0) break;
          --r;
        }
        if (r <= lo || !ident(r - 1)) break;
        q = r - 1;
      }
      name.insert(0, std::string(text(q)) + "::");
      s = q;
    }
    return name;
  }

  // Last identifier of a declaration outside brackets, before any '=' or ':'.
  std::string declaration_name(std::size_t first, std::size_t last) const {
    std::string name;
    for (std::size_t q = first; q <= last && q < sig_.size(); ++q) {
      const auto t = text(q);
      if (t == "=" || t == ";") break;
      if ((t == "(" || t == "[" || t == "{") && match_[q] != npos) {
        q = match_[q];
        continue;
      }
      if (t == "<" && q > first && ident(q - 1)) {
        q = skip_angles(q, last + 1) - 1;
        continue;
      }
      if (ident(q) && !class_key(t)) name = std::string(t);
    }
    return name;
  }

  std::string class_name(std::size_t keyword, std::size_t brace) const {
    std::string name;
    for (std::size_t q = keyword + 1; q < brace; ++q) {
      const auto t = text(q);
      if (t == ":") break;
      if ((t == "(" || t == "[") && match_[q] != npos) {
        q = match_[q];
        continue;
      }
      if (t == "<") {
        q = skip_angles(q, brace) - 1;
        continue;
      }
      if (t == "::") {
        name += "::";
        continue;
      }
      if (ident(q) && !class_key(t) && t != "final" && !attribute_keyword(t)) {
        if (!name.empty() && name.size() >= 2 && name.compare(name.size() - 2, 2, "::") == 0)
          name += t;
        else
          name = std::string(t);
      }
    }
    return name;
  }

  std::vector<SyntaxNode> scope(std::size_t b, std::size_t e, const std::string& prefix, bool class_scope) {
    std::vector<SyntaxNode> nodes;
    std::size_t p = b;
    while (p < e) {
      if (is(p, ";")) {
        mark_scaffolding(p);
        ++p;
        continue;
      }
      if (class_scope && access_specifier(text(p)) && is(p + 1, ":")) {
        p += 2;
        continue;
      }
      if (kind(p) == TokenKind::Punct && is_closer(text(p))) {
        auto n = make(NodeKind::Error, p, p, prefix);
        n.error = true;
        nodes.push_back(std::move(n));
        ++p;
        continue;
      }
      p = declaration(p, e, prefix, nodes);
    }
    return nodes;
  }

  std::size_t declaration(std::size_t start, std::size_t e, const std::string& prefix,
                          std::vector<SyntaxNode>& out) {
    const bool is_namespace = is(start, "namespace") || (is(start, "inline") && is(start + 1, "namespace"));
    const bool is_linkage = is(start, "extern") && start + 2 < e && kind(start + 1) == TokenKind::String &&
                            is(start + 2, "{");
    bool saw_eq = false;
    bool ctor_init = false;
    std::size_t class_kw = npos;
    std::vector<std::size_t> parens;

    std::size_t q = start;
    while (q < e) {
      const auto t = text(q);
      const bool punct = kind(q) == TokenKind::Punct;
      if (punct && t == ";") {
        auto n = make(NodeKind::Declaration, start, q, prefix);
        const auto d = saw_eq ? npos : declarator_paren(parens, start);
        set_name(n, d != npos ? declarator_name(d, start) : declaration_name(start, q), prefix);
        out.push_back(std::move(n));
        return q + 1;
      }
      if (t == "template" && is(q + 1, "<")) {
        q = skip_angles(q + 1, e);
        continue;
      }
      if (punct && (t == "(" || t == "[")) {
        if (match_[q] == npos || match_[q] >= e) {
          auto n = make(NodeKind::Error, start, e - 1, prefix);
          n.error = true;
          out.push_back(std::move(n));
          return e;
        }
        if (t == "(" && !ctor_init) parens.push_back(q);  // member initializers are not declarators
        q = match_[q] + 1;
        continue;
      }
      if (punct && is_closer(t)) {
        auto n = make(NodeKind::Error, start, q, prefix);
        n.error = true;
        out.push_back(std::move(n));
        return q + 1;
      }
      if (punct && t == "=" && !operator_before(q + 1, start)) saw_eq = true;
      if (punct && t == ":" && !parens.empty() && class_kw == npos) ctor_init = true;
      if (class_key(t) && class_kw == npos && !saw_eq) class_kw = q;
      if (punct && t == "{") return braced(start, q, e, prefix, out, is_namespace, is_linkage, saw_eq, ctor_init,
                                           class_kw, parens);
      ++q;
    }
    auto n = make(NodeKind::Declaration, start, e - 1, prefix);
    set_name(n, declaration_name(start, e - 1), prefix);
    out.push_back(std::move(n));
    return e;
  }

  std::size_t braced(std::size_t start, std::size_t& q, std::size_t e, const std::string& prefix,
                     std::vector<SyntaxNode>& out, bool is_namespace, bool is_linkage, bool saw_eq,
                     bool ctor_init, std::size_t class_kw, std::vector<std::size_t>& parens) {
    while (true) {
      const std::size_t close = match_[q] != npos && match_[q] < e ? match_[q] : npos;
      const bool unclosed = close == npos;
      const std::size_t body_last = unclosed ? e - 1 : close;

      if (is_namespace || is_linkage) {
        auto n = make(is_namespace ? NodeKind::Namespace : NodeKind::Linkage, start, body_last, prefix);
        std::string name;
        if (is_namespace) {
          for (std::size_t r = start; r < q; ++r)
            if (ident(r) && text(r) != "namespace" && text(r) != "inline") name += std::string(text(r));
            else if (is(r, "::")) name += "::";
        }
        set_name(n, name, prefix);
        for (std::size_t r = start; r <= q; ++r) mark_scaffolding(r);
        if (!unclosed) mark_scaffolding(close);
        n.error = unclosed;
        const std::string inner = name.empty() ? prefix : prefix + name + "::";
        n.children = scope(q + 1, unclosed ? e : close, inner, false);
        out.push_back(std::move(n));
        return body_last + 1;
      }

      const bool initializer = saw_eq || (ctor_init && (ident(q - 1) || is(q - 1, ">")));
      if (initializer && !unclosed) {
        // Keep scanning the same declaration past the braced initializer.
        std::size_t r = close + 1;
        while (r < e) {
          const auto t = text(r);
          if (t == ";") {
            auto n = make(NodeKind::Declaration, start, r, prefix);
            const auto d = saw_eq ? npos : declarator_paren(parens, start);
            set_name(n, d != npos ? declarator_name(d, start) : declaration_name(start, r), prefix);
            out.push_back(std::move(n));
            return r + 1;
          }
          if ((t == "(" || t == "[") && match_[r] != npos && match_[r] < e) {
            if (t == "(" && !ctor_init) parens.push_back(r);
            r = match_[r] + 1;
            continue;
          }
          if (is_closer(t)) break;
          if (t == "{") {
            q = r;
            break;
          }
          ++r;
        }
        if (r < e && text(r) == "{") continue;  // next brace: body or another initializer
        auto n = make(NodeKind::Declaration, start, r < e ? r - 1 : e - 1, prefix);
        set_name(n, declaration_name(start, r < e ? r - 1 : e - 1), prefix);
        out.push_back(std::move(n));
        return r;
      }

      const std::size_t decl = declarator_paren(parens, start);
      if (class_kw != npos && (decl == npos || decl < class_kw)) {
        const bool is_enum = is(class_kw, "enum");
        auto n = make(is_enum ? NodeKind::Enum : NodeKind::Class, start, body_last, prefix);
        const auto name = class_name(class_kw, q);
        set_name(n, name, prefix);
        n.error = unclosed;
        if (!is_enum) n.children = scope(q + 1, unclosed ? e : close, prefix + (name.empty() ? "" : name + "::"), true);
        if (!unclosed) {
          std::size_t r = close + 1;
          while (r < e && !is(r, ";") && !is(r, "{") && !is_closer(text(r))) {
            if ((is(r, "(") || is(r, "[")) && match_[r] != npos && match_[r] < e) r = match_[r];
            ++r;
          }
          if (r < e && is(r, ";")) {
            n.last_token = sig_[r];
            n.range.end = tree_.tokens[n.last_token].range.end;
            out.push_back(std::move(n));
            return r + 1;
          }
        }
        out.push_back(std::move(n));
        return body_last + 1;
      }

      auto n = make(decl != npos ? NodeKind::Function : NodeKind::Other, start, body_last, prefix);
      if (decl != npos) set_name(n, declarator_name(decl, start), prefix);
      n.error = unclosed;
      out.push_back(std::move(n));
      return body_last + 1;
    }
  }

  std::string_view src_;
  SyntaxTree& tree_;
  std::vector<std::size_t> sig_;
  std::vector<std::size_t> match_;
};

void collect_routines(const std::vector<SyntaxNode>& nodes, std::vector<const SyntaxNode*>& out) {
  for (const auto& n : nodes) {
    if (is_routine(n.kind)) {
      out.push_back(&n);
    } else if (n.kind == NodeKind::Namespace || n.kind == NodeKind::Linkage) {
      collect_routines(n.children, out);
    }
  }
}

void collect_documentable(const std::vector<SyntaxNode>& nodes, std::vector<const SyntaxNode*>& out) {
  for (const auto& n : nodes) {
    if (n.kind == NodeKind::Function || n.kind == NodeKind::Class) out.push_back(&n);
    if (n.kind == NodeKind::Namespace || n.kind == NodeKind::Linkage || n.kind == NodeKind::Class)
      collect_documentable(n.children, out);
  }
}

const SyntaxNode* deepest(const std::vector<SyntaxNode>& nodes, std::size_t offset) {
  for (const auto& n : nodes) {
    if (!n.range.contains(offset)) continue;
    if (const auto* inner = deepest(n.children, offset)) return inner;
    const bool named_kind =
        n.kind == NodeKind::Function || n.kind == NodeKind::Class || n.kind == NodeKind::Declaration;
    return named_kind && !n.name.empty() ? &n : nullptr;
  }
  return nullptr;
}

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

SyntaxTree parse(std::string_view source) {
  SyntaxTree tree;
  tree.tokens = tokenize(source);
  Parser parser(source, tree);
  parser.run();
  return tree;
}

bool is_routine(NodeKind kind) noexcept { return kind == NodeKind::Function || kind == NodeKind::Class; }

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Function: return "function";
    case NodeKind::Class: return "class";
    case NodeKind::Enum: return "enum";
    case NodeKind::Namespace: return "namespace";
    case NodeKind::Linkage: return "linkage";
    case NodeKind::Declaration: return "declaration";
    case NodeKind::Other: return "other";
    case NodeKind::Error: return "error";
  }
  return "other";
}

std::vector<const SyntaxNode*> routine_definitions(const SyntaxTree& tree) {
  std::vector<const SyntaxNode*> out;
  collect_routines(tree.nodes, out);
  return out;
}

std::vector<const SyntaxNode*> documentable_definitions(const SyntaxTree& tree) {
  std::vector<const SyntaxNode*> out;
  collect_documentable(tree.nodes, out);
  return out;
}

const SyntaxNode* enclosing_named(const SyntaxTree& tree, std::size_t offset) {
  return deepest(tree.nodes, offset);
}

std::string mask_comments_and_strings(std::string_view source) {
  std::string out(source);
  for (const auto& t : tokenize(source)) {
    if (t.kind == TokenKind::Comment || t.kind == TokenKind::String || t.kind == TokenKind::Char ||
        t.kind == TokenKind::Unterminated) {
      for (std::size_t i = t.range.begin; i < t.range.end; ++i)
        if (out[i] != '\n') out[i] = ' ';
    }
  }
  return out;
}

std::vector<std::string_view> code_tokens(std::string_view source, const std::vector<Token>& tokens) {
  std::vector<std::string_view> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens)
    if (t.kind != TokenKind::Comment) out.push_back(source.substr(t.range.begin, t.range.size()));
  return out;
}

bool delimiters_balanced(std::string_view source) {
  std::vector<char> stack;
  for (const auto& t : tokenize(source)) {
    if (t.kind == TokenKind::Unterminated) return false;
    if (t.kind != TokenKind::Punct || t.directive >= 0) continue;
    const char c = source[t.range.begin];
    if (t.range.size() != 1) continue;
    if (c == '(' || c == '[' || c == '{') {
      stack.push_back(closer_for(c));
    } else if (c == ')' || c == ']' || c == '}') {
      if (stack.empty() || stack.back() != c) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

}  // namespace cello::syntax
