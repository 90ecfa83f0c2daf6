// Copyright 2026 The DesignProbe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "designprobe/corpus/java_parser.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "designprobe/common/error.h"
#include "designprobe/corpus/java_lexer.h"

namespace designprobe::corpus {
namespace {

constexpr std::array<std::string_view, 13> kModifierWords = {
    "public",    "protected",    "private",   "static",     "abstract",
    "final",     "native",       "synchronized", "transient", "volatile",
    "strictfp",  "default",      "sealed",
};

bool IsModifierWord(std::string_view word) {
  return std::find(kModifierWords.begin(), kModifierWords.end(), word) !=
         kModifierWords.end();
}

bool IsOpen(const Token& t) { return t.Is("(") || t.Is("{") || t.Is("["); }
bool IsClose(const Token& t) { return t.Is(")") || t.Is("}") || t.Is("]"); }

// Words after which an identifier cannot be a declared local name.
bool IsStatementWord(std::string_view word) {
  return IsKeyword(word) || word == "yield" || word == "record";
}

bool StartsUpper(std::string_view word) {
  return !word.empty() && std::isupper(static_cast<unsigned char>(word[0]));
}

// Pending body scans, run once the enclosing class's members are known.
struct PendingBody {
  enum class Owner { kMethod, kConstructor, kClass } owner;
  std::size_t member_index = 0;
  std::size_t open = 0;   // token index of '{' or first initializer token
  std::size_t close = 0;  // token index of '}' or one past the initializer
  bool is_block = true;
};

class Parser {
 public:
  explicit Parser(CompilationUnit& unit)
      : unit_(unit), lex_(Lex(unit.text)), toks_(lex_.tokens) {
    unit_.comments = lex_.comments;
  }

  void Run() {
    while (!AtEnd()) {
      if (Peek().Is(";")) {
        ++pos_;
        continue;
      }
      const std::size_t begin = Peek().begin;
      Modifiers mods = ParseModifiers();
      if (Peek().Is("package")) {
        ++pos_;
        unit_.package_name = ParseQualifiedName();
        Expect(";");
        continue;
      }
      if (Peek().Is("import")) {
        ++pos_;
        Import imp;
        if (Peek().Is("static")) {
          imp.is_static = true;
          ++pos_;
        }
        imp.name = ParseQualifiedName();
        if (Peek().Is(".") && Peek(1).Is("*")) {
          pos_ += 2;
          imp.is_wildcard = true;
        }
        Expect(";");
        unit_.imports.push_back(std::move(imp));
        continue;
      }
      if (!AtTypeDeclaration()) Fail("expected a type declaration");
      ParseTypeDeclaration(std::move(mods), begin, "");
    }
  }

 private:
  // Token access.

  bool AtEnd() const { return toks_[pos_].kind == TokenKind::kEnd; }
  const Token& Peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  const Token& Tok(std::size_t i) const {
    return toks_[std::min(i, toks_.size() - 1)];
  }

  [[noreturn]] void Fail(const std::string& what) const {
    const Token& t = Peek();
    throw Error(ErrorCode::kParse,
                unit_.path + ": " + what + " near '" + std::string(t.text) +
                    "' at line " + std::to_string(LineOf(unit_.text, t.begin)));
  }

  void Expect(std::string_view s) {
    if (!Peek().Is(s)) Fail("expected '" + std::string(s) + "'");
    ++pos_;
  }

  const Token& ExpectIdentifier() {
    if (!Peek().IsIdentifier() || IsKeyword(Peek().text)) {
      Fail("expected an identifier");
    }
    return toks_[pos_++];
  }

  std::string ParseQualifiedName() {
    std::string name(ExpectIdentifier().text);
    while (Peek().Is(".") && Peek(1).IsIdentifier()) {
      name += ".";
      name += Peek(1).text;
      pos_ += 2;
    }
    return name;
  }

  // Index of the token closing the bracket at `open`.
  std::size_t MatchBalanced(std::size_t open) const {
    std::vector<std::string_view> stack;
    for (std::size_t i = open; i < toks_.size(); ++i) {
      const Token& t = toks_[i];
      if (t.kind == TokenKind::kEnd) break;
      if (IsOpen(t)) {
        stack.push_back(t.text);
      } else if (IsClose(t)) {
        if (stack.empty()) break;
        const std::string_view o = stack.back();
        if ((o == "(" && t.text != ")") || (o == "{" && t.text != "}") ||
            (o == "[" && t.text != "]")) {
          throw Error(ErrorCode::kParse,
                      unit_.path + ": mismatched '" + std::string(t.text) +
                          "' at line " +
                          std::to_string(LineOf(unit_.text, t.begin)));
        }
        stack.pop_back();
        if (stack.empty()) return i;
      }
    }
    throw Error(ErrorCode::kParse,
                unit_.path + ": unbalanced '" + std::string(toks_[open].text) +
                    "' opened at line " +
                    std::to_string(LineOf(unit_.text, toks_[open].begin)));
  }

  void SkipBalanced() { pos_ = MatchBalanced(pos_) + 1; }

  // Skips a type-argument or type-parameter list starting at '<'.
  void SkipGeneric() {
    int depth = 0;
    do {
      const Token& t = Peek();
      if (AtEnd()) Fail("unterminated type arguments");
      if (t.Is("<")) {
        ++depth;
      } else if (t.Is(">")) {
        --depth;
      } else if (t.Is("(")) {
        SkipBalanced();
        continue;
      } else if (t.Is(";") || t.Is("{") || t.Is("}")) {
        Fail("malformed type arguments");
      }
      ++pos_;
    } while (depth > 0);
  }

  // True when `<` at index i opens a type-argument list that closes
  // before any expression-only token appears.
  bool LooksLikeTypeArguments(std::size_t i) const {
    if (i == 0 || !Tok(i - 1).IsIdentifier()) return false;
    int depth = 0;
    for (std::size_t j = i; j < toks_.size(); ++j) {
      const Token& t = toks_[j];
      if (t.Is("<")) {
        ++depth;
      } else if (t.Is(">")) {
        if (--depth == 0) return true;
      } else if (!(t.IsIdentifier() || t.Is(".") || t.Is(",") || t.Is("?") ||
                   t.Is("&") || t.Is("[") || t.Is("]") || t.Is("@"))) {
        return false;
      }
    }
    return false;
  }

  // True when '>' at index i closes a type-argument list.
  bool ClosesTypeArguments(std::size_t i) const {
    int depth = 0;
    for (std::size_t j = i + 1; j-- > 0;) {
      const Token& t = toks_[j];
      if (t.Is(">")) {
        ++depth;
      } else if (t.Is("<")) {
        if (--depth == 0) return j > 0 && Tok(j - 1).IsIdentifier();
      } else if (!(t.IsIdentifier() || t.Is(".") || t.Is(",") || t.Is("?") ||
                   t.Is("&") || t.Is("[") || t.Is("]"))) {
        return false;
      }
    }
    return false;
  }

  // Declarations.

  Modifiers ParseModifiers() {
    Modifiers m;
    while (true) {
      const Token& t = Peek();
      if (t.Is("@") && !Peek(1).Is("interface")) {
        ++pos_;
        std::string name = ParseQualifiedName();
        m.annotations.push_back(std::string(SimpleNameOf(name)));
        if (Peek().Is("(")) SkipBalanced();
        continue;
      }
      if (t.IsIdentifier() && t.text == "non" && Peek(1).Is("-") &&
          Peek(2).Is("sealed")) {
        pos_ += 3;
        continue;
      }
      if (!t.IsIdentifier() || !IsModifierWord(t.text)) break;
      // `default:` labels and `sealed` used as a type are not modifiers.
      if (t.text == "default" && Peek(1).Is(":")) break;
      if (t.text == "sealed" && !(Peek(1).IsIdentifier())) break;
      if (t.text == "public") m.visibility = Visibility::kPublic;
      if (t.text == "protected") m.visibility = Visibility::kProtected;
      if (t.text == "private") m.visibility = Visibility::kPrivate;
      if (t.text == "static") m.is_static = true;
      if (t.text == "abstract") m.is_abstract = true;
      if (t.text == "final") m.is_final = true;
      if (t.text == "default") m.is_default = true;
      ++pos_;
    }
    return m;
  }

  static std::string_view SimpleNameOf(std::string_view qualified) {
    const std::size_t dot = qualified.rfind('.');
    return dot == std::string_view::npos ? qualified
                                         : qualified.substr(dot + 1);
  }

  bool AtTypeDeclaration() const {
    const Token& t = Peek();
    if (t.Is("class") || t.Is("interface") || t.Is("enum")) return true;
    if (t.Is("@") && Peek(1).Is("interface")) return true;
    if (t.IsIdentifier() && t.text == "record" && Peek(1).IsIdentifier() &&
        (Peek(2).Is("(") || Peek(2).Is("<"))) {
      return true;
    }
    return false;
  }

  // Parses a type and returns its whitespace-collapsed text and span.
  std::pair<std::string, Span> ParseType() {
    while (Peek().Is("@")) {
      ++pos_;
      ParseQualifiedName();
      if (Peek().Is("(")) SkipBalanced();
    }
    const std::size_t first = pos_;
    if (Peek().Is("?")) Fail("unexpected wildcard");
    ExpectIdentifier_AllowPrimitive();
    if (Peek().Is("<")) SkipGeneric();
    while (Peek().Is(".") && (Peek(1).IsIdentifier() || Peek(1).Is("@"))) {
      ++pos_;
      while (Peek().Is("@")) {
        ++pos_;
        ParseQualifiedName();
        if (Peek().Is("(")) SkipBalanced();
      }
      ExpectIdentifier_AllowPrimitive();
      if (Peek().Is("<")) SkipGeneric();
    }
    while (Peek().Is("[") && Peek(1).Is("]")) pos_ += 2;
    return {CollapseTokens(first, pos_),
            Span{toks_[first].begin, toks_[pos_ - 1].end}};
  }

  void ExpectIdentifier_AllowPrimitive() {
    const Token& t = Peek();
    if (!t.IsIdentifier()) Fail("expected a type");
    if (IsKeyword(t.text) && !IsPrimitiveType(t.text) && t.text != "void") {
      Fail("expected a type");
    }
    ++pos_;
  }

  std::string CollapseTokens(std::size_t first, std::size_t last) const {
    std::string out;
    for (std::size_t i = first; i < last; ++i) {
      if (i > first && toks_[i].IsIdentifier() && toks_[i - 1].IsIdentifier()) {
        out += ' ';
      }
      out += toks_[i].text;
    }
    return out;
  }

  void ParseTypeDeclaration(Modifiers mods, std::size_t decl_begin,
                            const std::string& enclosing) {
    ClassModel c;
    c.unit_path = unit_.path;
    c.package_name = unit_.package_name;
    c.enclosing_class = enclosing;
    c.modifiers = std::move(mods);
    bool is_enum = false;
    bool is_record = false;
    bool is_interface = false;
    if (Peek().Is("@")) {
      pos_ += 2;
      c.kind = ClassKind::kInterface;
      is_interface = true;
    } else if (Peek().Is("interface")) {
      ++pos_;
      c.kind = ClassKind::kInterface;
      is_interface = true;
    } else if (Peek().Is("enum")) {
      ++pos_;
      c.kind = ClassKind::kEnum;
      is_enum = true;
    } else if (Peek().Is("record")) {
      ++pos_;
      c.kind = ClassKind::kRecordLike;
      is_record = true;
    } else {
      Expect("class");
      c.kind = c.modifiers.is_abstract ? ClassKind::kAbstractClass
                                       : ClassKind::kConcreteClass;
    }
    const Token& name = ExpectIdentifier();
    c.simple_name = std::string(name.text);
    c.name_span = Span{name.begin, name.end};
    if (!enclosing.empty()) {
      c.qualified_name = enclosing + "." + c.simple_name;
    } else if (!unit_.package_name.empty()) {
      c.qualified_name = unit_.package_name + "." + c.simple_name;
    } else {
      c.qualified_name = c.simple_name;
    }
    if (Peek().Is("<")) SkipGeneric();
    std::vector<Parameter> components;
    if (is_record) {
      if (!Peek().Is("(")) Fail("expected record components");
      components = ParseParameters().first;
    }
    while (true) {
      if (Peek().Is("extends")) {
        ++pos_;
        do {
          std::string type = ParseType().first;
          if (is_interface) {
            c.interface_names.push_back(std::move(type));
          } else {
            c.supertype_names.push_back(std::move(type));
          }
        } while (Peek().Is(",") && (++pos_, true));
        continue;
      }
      if (Peek().Is("implements")) {
        ++pos_;
        do {
          c.interface_names.push_back(ParseType().first);
        } while (Peek().Is(",") && (++pos_, true));
        continue;
      }
      if (Peek().IsIdentifier() && Peek().text == "permits") {
        ++pos_;
        do {
          ParseType();
        } while (Peek().Is(",") && (++pos_, true));
        continue;
      }
      break;
    }
    if (!Peek().Is("{")) Fail("expected class body");
    for (const Parameter& p : components) {
      FieldModel f;
      f.name = p.name;
      f.declared_type_name = p.type_name;
      f.modifiers.visibility = Visibility::kPrivate;
      f.modifiers.is_final = true;
      f.declaration_span = p.span;
      f.prefix_span = p.span;
      f.name_span = p.span;
      c.fields.push_back(std::move(f));
    }
    const std::size_t index = unit_.classes.size();
    unit_.classes.push_back(std::move(c));
    const std::size_t open = pos_;
    std::vector<PendingBody> pending;
    ParseClassBody(index, is_enum, is_interface, is_record, pending);
    const std::size_t close = pos_ - 1;
    ClassModel& done = unit_.classes[index];
    done.body_span = Span{toks_[open].begin, toks_[close].end};
    done.declaration_span = Span{decl_begin, toks_[close].end};
    AnalyzeClass(index, pending);
  }

  std::pair<std::vector<Parameter>, Span> ParseParameters() {
    Expect("(");
    const std::size_t inner_begin = toks_[pos_ - 1].end;
    std::vector<Parameter> params;
    while (!Peek().Is(")")) {
      const std::size_t begin = Peek().begin;
      ParseModifiers();
      auto [type, type_span] = ParseType();
      if (Peek().Is("...")) {
        ++pos_;
        type += "...";
      }
      Parameter p;
      if (Peek().Is("this")) {
        // Receiver parameter; not a real parameter.
        ++pos_;
        if (Peek().Is(",")) ++pos_;
        continue;
      }
      const Token& name = ExpectIdentifier();
      p.name = std::string(name.text);
      while (Peek().Is("[") && Peek(1).Is("]")) {
        pos_ += 2;
        type += "[]";
      }
      p.type_name = std::move(type);
      p.span = Span{begin, toks_[pos_ - 1].end};
      params.push_back(std::move(p));
      if (Peek().Is(",")) {
        ++pos_;
        continue;
      }
      if (!Peek().Is(")")) Fail("expected ',' or ')' in parameter list");
    }
    const std::size_t inner_end = Peek().begin;
    ++pos_;
    return {std::move(params), Span{inner_begin, inner_end}};
  }

  void ParseClassBody(std::size_t index, bool is_enum, bool is_interface,
                      bool is_record, std::vector<PendingBody>& pending) {
    Expect("{");
    if (is_enum) {
      while (!Peek().Is(";") && !Peek().Is("}")) {
        if (AtEnd()) Fail("unterminated enum body");
        if (IsOpen(Peek())) {
          SkipBalanced();
        } else if (IsClose(Peek())) {
          Fail("unexpected closing bracket in enum constants");
        } else {
          ++pos_;
        }
      }
      if (Peek().Is(";")) ++pos_;
    }
    const std::string simple = unit_.classes[index].simple_name;
    const std::string qualified = unit_.classes[index].qualified_name;
    while (true) {
      if (AtEnd()) Fail("unterminated class body");
      if (Peek().Is("}")) {
        ++pos_;
        return;
      }
      if (Peek().Is(";")) {
        ++pos_;
        continue;
      }
      const std::size_t member_begin = Peek().begin;
      Modifiers mods = ParseModifiers();
      if (Peek().Is("{")) {
        const std::size_t open = pos_;
        SkipBalanced();
        unit_.classes[index].initializer_blocks.push_back(
            Span{toks_[open].begin, toks_[pos_ - 1].end});
        pending.push_back(
            {PendingBody::Owner::kClass, 0, open, pos_ - 1, true});
        continue;
      }
      if (AtTypeDeclaration()) {
        ParseTypeDeclaration(std::move(mods), member_begin, qualified);
        continue;
      }
      if (Peek().Is("<")) SkipGeneric();
      if (Peek().IsIdentifier() && Peek().text == simple &&
          (Peek(1).Is("(") || (is_record && Peek(1).Is("{")))) {
        ParseCallable(index, std::move(mods), member_begin, "", true, pending);
        continue;
      }
      auto [type, type_span] = ParseType();
      if (!Peek().IsIdentifier() || IsKeyword(Peek().text)) {
        Fail("expected a member name");
      }
      if (Peek(1).Is("(")) {
        if (is_interface && !mods.is_static && !mods.is_default &&
            mods.visibility != Visibility::kPrivate) {
          mods.is_abstract = true;
        }
        ParseCallable(index, std::move(mods), member_begin, type, false,
                      pending);
        continue;
      }
      if (is_interface) {
        mods.is_static = true;
        mods.is_final = true;
      }
      ParseFieldDeclarators(index, mods, member_begin, type, type_span,
                            pending);
    }
  }

  void ParseCallable(std::size_t index, Modifiers mods, std::size_t begin,
                     std::string return_type, bool is_constructor,
                     std::vector<PendingBody>& pending) {
    MethodModel m;
    m.is_constructor = is_constructor;
    m.return_type_name = std::move(return_type);
    m.modifiers = std::move(mods);
    const Token& name = ExpectIdentifier();
    m.name = std::string(name.text);
    m.name_span = Span{name.begin, name.end};
    if (Peek().Is("(")) {
      auto [params, span] = ParseParameters();
      m.parameters = std::move(params);
      m.parameter_list_span = span;
    } else {
      // Compact record constructor.
      m.parameter_list_span = Span{name.end, name.end};
    }
    while (Peek().Is("[") && Peek(1).Is("]")) pos_ += 2;
    if (Peek().Is("throws")) {
      ++pos_;
      do {
        ParseType();
      } while (Peek().Is(",") && (++pos_, true));
    }
    if (Peek().Is("default")) {
      while (!Peek().Is(";")) {
        if (AtEnd()) Fail("unterminated annotation default");
        if (IsOpen(Peek())) {
          SkipBalanced();
        } else {
          ++pos_;
        }
      }
    }
    ClassModel& c = unit_.classes[index];
    if (Peek().Is("{")) {
      const std::size_t open = pos_;
      SkipBalanced();
      m.body_span = Span{toks_[open].begin, toks_[pos_ - 1].end};
      m.declaration_span = Span{begin, toks_[pos_ - 1].end};
      const std::size_t member =
          is_constructor ? c.constructors.size() : c.methods.size();
      pending.push_back({is_constructor ? PendingBody::Owner::kConstructor
                                        : PendingBody::Owner::kMethod,
                         member, open, pos_ - 1, true});
    } else {
      Expect(";");
      m.declaration_span = Span{begin, toks_[pos_ - 1].end};
      if (is_constructor) Fail("constructor without a body");
    }
    if (is_constructor) {
      c.constructors.push_back(std::move(m));
    } else {
      c.methods.push_back(std::move(m));
    }
  }

  void ParseFieldDeclarators(std::size_t index, const Modifiers& mods,
                             std::size_t begin, const std::string& type,
                             Span type_span, std::vector<PendingBody>& pending) {
    ClassModel& c = unit_.classes[index];
    const std::size_t first_field = c.fields.size();
    while (true) {
      const Token& name = ExpectIdentifier();
      FieldModel f;
      f.name = std::string(name.text);
      f.name_span = Span{name.begin, name.end};
      f.modifiers = mods;
      f.declared_type_name = type;
      f.prefix_span = Span{begin, type_span.end};
      while (Peek().Is("[") && Peek(1).Is("]")) {
        pos_ += 2;
        f.declared_type_name += "[]";
      }
      if (Peek().Is("=")) {
        ++pos_;
        const std::size_t first = pos_;
        ScanInitializer();
        if (pos_ == first) Fail("empty field initializer");
        f.initializer_span = Span{toks_[first].begin, toks_[pos_ - 1].end};
        pending.push_back({PendingBody::Owner::kClass, 0, first, pos_, false});
      }
      c.fields.push_back(std::move(f));
      if (Peek().Is(",")) {
        ++pos_;
        continue;
      }
      Expect(";");
      break;
    }
    const Span decl{begin, toks_[pos_ - 1].end};
    for (std::size_t i = first_field; i < c.fields.size(); ++i) {
      c.fields[i].declaration_span = decl;
    }
  }

  // Advances to the ',' or ';' that ends a variable initializer.
  void ScanInitializer() {
    while (true) {
      const Token& t = Peek();
      if (AtEnd()) Fail("unterminated initializer");
      if (t.Is(",") || t.Is(";")) return;
      if (IsOpen(t)) {
        SkipBalanced();
        continue;
      }
      if (IsClose(t)) Fail("unexpected closing bracket in initializer");
      if (t.Is("<") && LooksLikeTypeArguments(pos_)) {
        SkipGeneric();
        continue;
      }
      ++pos_;
    }
  }

  // Body analysis.

  void AnalyzeClass(std::size_t index, const std::vector<PendingBody>& pending) {
    ClassModel& c = unit_.classes[index];
    std::set<std::string> field_names;
    for (const FieldModel& f : c.fields) field_names.insert(f.name);
    std::set<std::string> method_names;
    for (const MethodModel& m : c.methods) method_names.insert(m.name);
    for (const PendingBody& p : pending) {
      const std::size_t first = p.is_block ? p.open + 1 : p.open;
      const std::size_t last = p.is_block ? p.close : p.close;
      if (p.owner == PendingBody::Owner::kClass) {
        ScanBody(first, last, {}, field_names, method_names, nullptr,
                 c.type_uses);
        continue;
      }
      MethodModel& m = p.owner == PendingBody::Owner::kMethod
                           ? c.methods[p.member_index]
                           : c.constructors[p.member_index];
      std::set<std::string> params;
      for (const Parameter& param : m.parameters) params.insert(param.name);
      ScanBody(first, last, params, field_names, method_names, &m,
               m.type_uses);
      ScanStatements(first, last, field_names, m);
    }
  }

  std::set<std::string> CollectLocals(std::size_t first,
                                      std::size_t last) const {
    std::set<std::string> locals;
    for (std::size_t i = first; i < last; ++i) {
      const Token& t = toks_[i];
      if (!t.IsIdentifier() || IsKeyword(t.text)) continue;
      const Token& next = Tok(i + 1);
      if (next.Is("->") && i > first &&
          (Tok(i - 1).Is("(") || Tok(i - 1).Is(",") || Tok(i - 1).Is("=") ||
           Tok(i - 1).Is("return"))) {
        locals.insert(std::string(t.text));
        continue;
      }
      if (i == first) continue;
      const Token& prev = Tok(i - 1);
      const bool prev_is_type =
          (prev.IsIdentifier() && !IsStatementWord(prev.text)) ||
          prev.Is("]") || (prev.Is(">") && ClosesTypeArguments(i - 1)) ||
          (prev.IsIdentifier() && IsPrimitiveType(prev.text));
      if (!prev_is_type) continue;
      if (next.Is("=") || next.Is(";") || next.Is(",") || next.Is(":") ||
          next.Is(")")) {
        locals.insert(std::string(t.text));
      }
    }
    return locals;
  }

  void ScanBody(std::size_t first, std::size_t last,
                const std::set<std::string>& params,
                const std::set<std::string>& field_names,
                const std::set<std::string>& method_names, MethodModel* m,
                std::vector<TypeUse>& uses) {
    std::set<std::string> shadowed = CollectLocals(first, last);
    shadowed.insert(params.begin(), params.end());
    std::size_t skip_until = 0;
    for (std::size_t i = first; i < last; ++i) {
      const Token& t = toks_[i];
      if (!t.IsIdentifier()) continue;
      if (t.text == "new") {
        TypeUse use = ScanNew(i);
        if (!use.name.empty()) uses.push_back(std::move(use));
        continue;
      }
      if (IsKeyword(t.text)) continue;
      const Token& prev = Tok(i - 1);
      const Token& next = Tok(i + 1);
      const std::string word(t.text);
      if (prev.Is(".")) {
        const bool via_this = Tok(i - 2).Is("this") && !Tok(i - 3).Is(".");
        if (via_this && m != nullptr) {
          if (next.Is("(")) {
            if (method_names.count(word)) m->invoked_methods.insert(word);
          } else if (field_names.count(word)) {
            m->accessed_fields.insert(word);
          }
        }
        continue;
      }
      if (prev.Is("new") || prev.Is("@") || i < skip_until) continue;
      if (next.Is("(")) {
        if (m != nullptr && method_names.count(word) && !prev.Is("::")) {
          m->invoked_methods.insert(word);
        }
        continue;
      }
      if (m != nullptr && field_names.count(word) && !shadowed.count(word) &&
          !prev.Is("::")) {
        m->accessed_fields.insert(word);
      }
      if (StartsUpper(word) && !shadowed.count(word) &&
          !field_names.count(word)) {
        TypeUse use;
        use.name = word;
        use.span = Span{t.begin, t.end};
        use.kind = next.Is(".") && Tok(i + 2).IsIdentifier() &&
                           !Tok(i + 2).Is("class")
                       ? TypeUseKind::kStaticAccess
                       : TypeUseKind::kReference;
        if (next.Is("::")) use.kind = TypeUseKind::kStaticAccess;
        uses.push_back(std::move(use));
        if (next.Is(".")) {
          // Skip the rest of a dotted name so "a.b.C" is not re-counted.
          std::size_t j = i + 1;
          while (Tok(j).Is(".") && Tok(j + 1).IsIdentifier()) j += 2;
          skip_until = j;
        }
      }
    }
  }

  // Describes the `new` expression at token index i.
  TypeUse ScanNew(std::size_t i) const {
    TypeUse use;
    use.kind = TypeUseKind::kInstantiation;
    std::size_t j = i + 1;
    while (Tok(j).Is("@")) {
      ++j;
      while (Tok(j).IsIdentifier() && Tok(j + 1).Is(".")) j += 2;
      ++j;
      if (Tok(j).Is("(")) j = MatchBalanced(j) + 1;
    }
    if (Tok(j).Is("<")) j = SkipGenericAt(j);
    if (!Tok(j).IsIdentifier()) return TypeUse{};
    std::string name(Tok(j).text);
    ++j;
    while (true) {
      if (Tok(j).Is("<")) {
        j = SkipGenericAt(j);
        continue;
      }
      if (Tok(j).Is(".") && Tok(j + 1).IsIdentifier()) {
        name += ".";
        name += Tok(j + 1).text;
        j += 2;
        continue;
      }
      break;
    }
    use.name = std::move(name);
    std::size_t end = j;  // one past the last token of the expression
    if (Tok(j).Is("[")) {
      while (Tok(j).Is("[")) j = MatchBalanced(j) + 1;
      if (Tok(j).Is("{")) j = MatchBalanced(j) + 1;
      end = j;
    } else if (Tok(j).Is("(")) {
      const std::size_t close = MatchBalanced(j);
      use.arguments = Span{Tok(j).end, Tok(close).begin};
      use.argument_count = CountArguments(j + 1, close);
      j = close + 1;
      if (Tok(j).Is("{")) j = MatchBalanced(j) + 1;
      end = j;
    }
    use.span = Span{Tok(i).begin, Tok(end - 1).end};
    return use;
  }

  std::size_t SkipGenericAt(std::size_t j) const {
    int depth = 0;
    do {
      if (Tok(j).kind == TokenKind::kEnd) return j;
      if (Tok(j).Is("<")) ++depth;
      if (Tok(j).Is(">")) --depth;
      ++j;
    } while (depth > 0);
    return j;
  }

  std::size_t CountArguments(std::size_t first, std::size_t close) const {
    if (first == close) return 0;
    std::size_t count = 1;
    for (std::size_t k = first; k < close; ++k) {
      if (IsOpen(Tok(k))) {
        k = MatchBalanced(k);
        continue;
      }
      if (Tok(k).Is("<") && LooksLikeTypeArguments(k)) {
        k = SkipGenericAt(k) - 1;
        continue;
      }
      if (Tok(k).Is(",")) ++count;
    }
    return count;
  }

  // Splits the top level of a body into statements, counting them and
  // recording `[this.]field = identifier;` assignments.
  void ScanStatements(std::size_t first, std::size_t last,
                      const std::set<std::string>& field_names,
                      MethodModel& m) {
    std::set<std::string> params;
    for (const Parameter& p : m.parameters) params.insert(p.name);
    std::size_t start = first;
    std::size_t i = first;
    while (i < last) {
      const Token& t = toks_[i];
      if (t.Is(";")) {
        if (i == start) {
          start = ++i;
          continue;
        }
        RecordStatement(start, i, field_names, m);
        start = ++i;
        continue;
      }
      if (IsOpen(t)) {
        const std::size_t close = MatchBalanced(i);
        i = close + 1;
        if (t.Is("{") && EndsBlockStatement(start, i, last)) {
          ++m.top_level_statement_count;
          start = i;
        }
        continue;
      }
      ++i;
    }
    if (start < last) ++m.top_level_statement_count;
  }

  bool EndsBlockStatement(std::size_t start, std::size_t after,
                          std::size_t last) const {
    if (after >= last) return true;
    const Token& head = toks_[start];
    const Token& next = toks_[after];
    if (head.Is("do")) return false;
    if (next.Is("else") || next.Is("catch") || next.Is("finally")) {
      return false;
    }
    static constexpr std::array<std::string_view, 9> kBlockHeads = {
        "if", "for", "while", "try", "switch", "synchronized", "{", "class",
        "static"};
    for (std::string_view h : kBlockHeads) {
      if (head.text == h) return true;
    }
    // Local class with modifiers, or a labeled block.
    if (head.Is("final") || head.Is("abstract")) return true;
    if (head.IsIdentifier() && Tok(start + 1).Is(":")) return true;
    return false;
  }

  void RecordStatement(std::size_t start, std::size_t semi,
                       const std::set<std::string>& field_names,
                       MethodModel& m) {
    ++m.top_level_statement_count;
    std::size_t i = start;
    if (Tok(i).Is("this") && Tok(i + 1).Is(".")) i += 2;
    if (semi != i + 3) return;
    const Token& field = Tok(i);
    const Token& value = Tok(i + 2);
    if (!field.IsIdentifier() || IsKeyword(field.text) || !Tok(i + 1).Is("=") ||
        !value.IsIdentifier() || IsKeyword(value.text)) {
      return;
    }
    const std::string field_name(field.text);
    if (!field_names.count(field_name)) return;
    // An unqualified target that names a parameter assigns the parameter.
    if (i == start) {
      for (const Parameter& p : m.parameters) {
        if (p.name == field_name) return;
      }
    }
    m.field_assignments.push_back(FieldAssignment{
        field_name, std::string(value.text),
        Span{Tok(start).begin, Tok(semi).end}, Span{value.begin, value.end}});
  }

  CompilationUnit& unit_;
  LexResult lex_;
  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

}  // namespace

CompilationUnit ParseCompilationUnit(std::string path, std::string text) {
  CompilationUnit unit;
  unit.path = std::move(path);
  unit.text = std::move(text);
  Parser parser(unit);
  parser.Run();
  return unit;
}

}  // namespace designprobe::corpus
