#pragma once

// Concrete-syntax layer for the C family (C, C++, CUDA, HIP).
//
// The lexer keeps every byte of the input accounted for: tokens plus the whitespace between
// them reconstruct the source. The structural parser matches brackets over significant
// tokens (not comments, not preprocessor directives) and groups them into declaration-level
// nodes: function/method definitions, class/struct/union definitions, enums, namespaces,
// linkage blocks and plain declarations. It never throws on malformed input; problems are
// counted in `SyntaxTree::error_count` and flagged on the nodes they affect.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cello/byte_range.hpp"

namespace cello::syntax {

enum class TokenKind { Identifier, Number, String, Char, Punct, Comment, Unterminated };

struct Token {
  TokenKind kind = TokenKind::Punct;
  ByteRange range;
  int directive = -1;  // index of the enclosing preprocessor directive, -1 outside
};

std::vector<Token> tokenize(std::string_view source);

enum class NodeKind { Function, Class, Enum, Namespace, Linkage, Declaration, Other, Error };

struct SyntaxNode {
  NodeKind kind = NodeKind::Other;
  std::size_t first_token = 0;  // inclusive, index into SyntaxTree::tokens
  std::size_t last_token = 0;   // inclusive
  ByteRange range;
  std::string name;       // as written at the declaration, e.g. "Foo::bar"
  std::string qualified;  // enclosing namespaces/classes prepended
  bool error = false;     // unterminated body or stray closer inside
  std::vector<SyntaxNode> children;
};

struct SyntaxTree {
  std::vector<Token> tokens;
  std::vector<SyntaxNode> nodes;  // top level, in source order
  std::size_t error_count = 0;
  // Tokens that only open or close a namespace/linkage block, plus empty-declaration ';'.
  std::vector<bool> scaffolding;
};

SyntaxTree parse(std::string_view source);

// Function and class definitions at file scope or nested only in namespaces / linkage blocks.
std::vector<const SyntaxNode*> routine_definitions(const SyntaxTree& tree);

// Function, method and class definitions outside function bodies, in source order.
std::vector<const SyntaxNode*> documentable_definitions(const SyntaxTree& tree);

// Deepest Function/Class/Declaration node containing `offset` that has a name, or nullptr.
const SyntaxNode* enclosing_named(const SyntaxTree& tree, std::size_t offset);

bool is_routine(NodeKind kind) noexcept;
std::string_view to_string(NodeKind kind);

// Every byte inside a comment, string or character literal replaced by a space (newlines kept),
// so offsets are preserved.
std::string mask_comments_and_strings(std::string_view source);

// Texts of all non-comment tokens, in order. Directive tokens are included.
std::vector<std::string_view> code_tokens(std::string_view source, const std::vector<Token>& tokens);

// (), [] and {} balance over significant text (comments and literals ignored).
bool delimiters_balanced(std::string_view source);

}  // namespace cello::syntax
