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

#include "designprobe/transforms/skeleton.h"

#include <algorithm>
#include <optional>

#include "designprobe/common/error.h"
#include "designprobe/corpus/java_lexer.h"

namespace designprobe::transforms {
namespace {

using corpus::ClassModel;
using corpus::CompilationUnit;
using corpus::Edit;
using corpus::Span;
using corpus::Token;

std::vector<const ClassModel*> ClassesWithin(const CompilationUnit& unit,
                                             const ClassModel& c) {
  std::vector<const ClassModel*> out;
  for (const ClassModel& k : unit.classes) {
    if (c.declaration_span.Contains(k.declaration_span)) out.push_back(&k);
  }
  return out;
}

bool InsideAny(const Span& s, const std::vector<Span>& spans) {
  return std::any_of(spans.begin(), spans.end(),
                     [&](const Span& outer) { return outer.Contains(s); });
}

bool IsBlank(char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; }

// Widens `s` to its whole line(s) when only blanks share them, so removal
// leaves no empty line behind. Stays within `limit`.
Span ExpandToLines(std::string_view text, Span s, const Span& limit) {
  std::size_t b = s.begin;
  while (b > limit.begin && IsBlank(text[b - 1])) --b;
  const bool starts_line = b == 0 || text[b - 1] == '\n';
  std::size_t e = s.end;
  while (e < limit.end && IsBlank(text[e])) ++e;
  const bool ends_line = e < limit.end && text[e] == '\n';
  if (starts_line && ends_line && b >= limit.begin) return Span{b, e + 1};
  return s;
}

// Sorts edits and drops any that lie inside an earlier one. Partial
// overlaps are left for ApplyEdits to reject.
std::vector<Edit> Normalize(std::vector<Edit> edits) {
  std::stable_sort(edits.begin(), edits.end(),
                   [](const Edit& a, const Edit& b) {
                     if (a.span.begin != b.span.begin) {
                       return a.span.begin < b.span.begin;
                     }
                     return a.span.end > b.span.end;
                   });
  std::vector<Edit> out;
  for (Edit& e : edits) {
    if (!out.empty() && out.back().span.Contains(e.span) &&
        out.back().span.size() > 0) {
      continue;
    }
    out.push_back(std::move(e));
  }
  return out;
}

bool IsPrimitive(std::string_view t) {
  return t == "int" || t == "long" || t == "short" || t == "byte" ||
         t == "char" || t == "float" || t == "double";
}

// Token-level view of the unit used to find statement boundaries.
class StatementFinder {
 public:
  explicit StatementFinder(std::string_view text)
      : lex_(corpus::Lex(text)) {}

  // Index of the token starting at `offset`.
  std::optional<std::size_t> TokenAt(std::size_t offset) const {
    const auto& toks = lex_.tokens;
    auto it = std::lower_bound(
        toks.begin(), toks.end(), offset,
        [](const Token& t, std::size_t off) { return t.begin < off; });
    if (it == toks.end() || it->begin != offset) return std::nullopt;
    return static_cast<std::size_t>(it - toks.begin());
  }

  const Token& Tok(std::size_t i) const { return lex_.tokens[i]; }

  // Paren/bracket depth of every token in [open, close], relative to the
  // block opened at `open`.
  std::vector<int> Depths(std::size_t open, std::size_t close) const {
    std::vector<int> depth(close - open + 1, 0);
    int d = 0;
    for (std::size_t i = open; i <= close; ++i) {
      const Token& t = Tok(i);
      if (t.Is(")") || t.Is("]")) --d;
      depth[i - open] = d;
      if (t.Is("(") || t.Is("[")) ++d;
    }
    return depth;
  }

 private:
  corpus::LexResult lex_;
};

struct Statement {
  std::size_t first;
  std::size_t semicolon;
};

// The statement around tokens [expr_first, expr_last] inside the block
// whose braces are tokens `open` and `close`, when it is a plain statement
// that can be removed on its own.
std::optional<Statement> EnclosingStatement(const StatementFinder& f,
                                            std::size_t open,
                                            std::size_t close,
                                            std::size_t expr_first,
                                            std::size_t expr_last) {
  const std::vector<int> depth = f.Depths(open, close);
  auto depth_of = [&](std::size_t i) { return depth[i - open]; };
  std::size_t i = expr_first;
  while (i > open) {
    const Token& t = f.Tok(i - 1);
    if (depth_of(i - 1) == 0 && (t.Is(";") || t.Is("{") || t.Is("}"))) break;
    --i;
  }
  const std::size_t first = i;
  if (depth_of(first) != 0 || !f.Tok(first).IsIdentifier()) {
    return std::nullopt;
  }
  const std::string_view lead = f.Tok(first).text;
  if (lead == "return" || lead == "throw" || lead == "yield" ||
      lead == "else" || lead == "case" || lead == "default") {
    return std::nullopt;
  }
  for (std::size_t j = expr_last + 1; j < close; ++j) {
    const Token& t = f.Tok(j);
    if (depth_of(j) != 0) continue;
    if (t.Is("{") || t.Is("}")) return std::nullopt;
    if (t.Is(";")) {
      if (f.Tok(j + 1).Is("else")) return std::nullopt;
      return Statement{first, j};
    }
  }
  return std::nullopt;
}

// For `T a = ..., b = <expr>;` returns the name token of the declarator
// owning the expression.
std::optional<std::size_t> LocalDeclarator(const StatementFinder& f,
                                           const Statement& s,
                                           std::size_t expr_first) {
  std::optional<std::size_t> eq;
  int d = 0;
  for (std::size_t j = s.first; j < expr_first; ++j) {
    const Token& t = f.Tok(j);
    if (t.Is("(") || t.Is("[") || t.Is("<")) ++d;
    if (t.Is(")") || t.Is("]") || t.Is(">")) --d;
    if (d == 0 && t.Is("=")) eq = j;
  }
  if (!eq || *eq < s.first + 2) return std::nullopt;
  const std::size_t name = *eq - 1;
  if (!f.Tok(name).IsIdentifier() || corpus::IsKeyword(f.Tok(name).text)) {
    return std::nullopt;
  }
  const Token& before = f.Tok(name - 1);
  const bool typeish =
      before.Is(">") || before.Is("]") || before.Is(",") ||
      (before.IsIdentifier() &&
       (!corpus::IsKeyword(before.text) || IsPrimitive(before.text) ||
        before.Is("boolean")));
  if (!typeish || f.Tok(s.first).Is("this")) return std::nullopt;
  return name;
}

}  // namespace

std::string MemberIndent(const CompilationUnit& unit, const ClassModel& c) {
  std::size_t first = c.body_span.end;
  for (const corpus::FieldModel& f : c.fields) {
    first = std::min(first, f.declaration_span.begin);
  }
  for (const auto* list : {&c.methods, &c.constructors}) {
    for (const corpus::MethodModel& m : *list) {
      first = std::min(first, m.declaration_span.begin);
    }
  }
  if (first == c.body_span.end) return "    ";
  std::size_t line = unit.text.rfind('\n', first);
  line = line == std::string::npos ? 0 : line + 1;
  std::string indent = unit.text.substr(line, first - line);
  if (indent.find_first_not_of(" \t") != std::string::npos) return "    ";
  return indent;
}

Edit MemberInsertion(const CompilationUnit& unit, const ClassModel& c,
                     const std::string& members) {
  const std::size_t brace = c.body_span.end - 1;
  const std::size_t line = unit.text.rfind('\n', brace);
  const bool brace_alone =
      line != std::string::npos && line + 1 > c.body_span.begin &&
      unit.text.find_first_not_of(" \t", line + 1) == brace;
  if (brace_alone) return Edit{Span{line + 1, line + 1}, "\n" + members};
  return Edit{Span{brace, brace}, "\n" + members};
}

std::string TextWithoutComments(const CompilationUnit& unit, Span span) {
  std::vector<Edit> edits;
  for (const Span& comment : unit.comments) {
    if (!span.Contains(comment)) continue;
    const Span removed = ExpandToLines(unit.text, comment, span);
    edits.push_back(Edit{Span{removed.begin - span.begin,
                              removed.end - span.begin},
                         removed == comment ? " " : ""});
  }
  return corpus::ApplyEdits(span.Of(unit.text), Normalize(std::move(edits)));
}

std::string DefaultBody(const std::string& return_type_name) {
  if (return_type_name == "void" || return_type_name.empty()) return "{ }";
  if (return_type_name == "boolean") return "{ return false; }";
  if (IsPrimitive(return_type_name)) return "{ return 0; }";
  return "{ return null; }";
}

std::vector<Edit> CommentRemovalEdits(const CompilationUnit& unit,
                                      const ClassModel& c,
                                      const std::vector<Span>& skip) {
  const std::string_view text = unit.text;
  const Span decl = c.declaration_span;
  std::vector<Edit> edits;
  for (const Span& comment : unit.comments) {
    if (!decl.Contains(comment) || InsideAny(comment, skip)) continue;
    Span removed = ExpandToLines(text, comment, decl);
    if (removed != comment) {
      edits.push_back(Edit{removed, ""});
      continue;
    }
    std::size_t b = comment.begin;
    while (b > decl.begin && IsBlank(text[b - 1])) --b;
    std::size_t e = comment.end;
    while (e < decl.end && IsBlank(text[e])) ++e;
    if (e == decl.end || text[e] == '\n') {
      edits.push_back(Edit{Span{b, comment.end}, ""});
      continue;
    }
    const bool space_before = b < comment.begin || b == decl.begin ||
                              text[b - 1] == '\n';
    const bool space_after = e > comment.end;
    edits.push_back(
        Edit{comment, space_before || space_after ? "" : std::string(" ")});
  }
  return Normalize(std::move(edits));
}

std::vector<Edit> BodyRemovalEdits(const CompilationUnit& unit,
                                   const ClassModel& c,
                                   const std::set<std::string>& preserve) {
  std::vector<Edit> edits;
  for (const ClassModel* k : ClassesWithin(unit, c)) {
    for (const corpus::MethodModel& m : k->methods) {
      if (!m.body_span) continue;
      if (k == &c && preserve.count(m.CallableId()) > 0) continue;
      edits.push_back(Edit{*m.body_span, DefaultBody(m.return_type_name)});
    }
  }
  return Normalize(std::move(edits));
}

std::vector<Edit> InstantiationRemovalEdits(const CompilationUnit& unit,
                                            const ClassModel& c,
                                            const std::vector<Span>& skip) {
  const std::vector<const ClassModel*> classes = ClassesWithin(unit, c);
  std::vector<Span> news;
  std::vector<Span> bodies;
  std::vector<const corpus::FieldModel*> fields;
  for (const ClassModel* k : classes) {
    auto collect = [&](const std::vector<corpus::TypeUse>& uses) {
      for (const corpus::TypeUse& u : uses) {
        if (u.kind == corpus::TypeUseKind::kInstantiation &&
            !InsideAny(u.span, skip)) {
          news.push_back(u.span);
        }
      }
    };
    collect(k->type_uses);
    for (const auto* list : {&k->methods, &k->constructors}) {
      for (const corpus::MethodModel& m : *list) {
        collect(m.type_uses);
        if (m.body_span) bodies.push_back(*m.body_span);
      }
    }
    for (const Span& block : k->initializer_blocks) bodies.push_back(block);
    for (const corpus::FieldModel& fm : k->fields) fields.push_back(&fm);
  }
  std::sort(news.begin(), news.end(), [](const Span& a, const Span& b) {
    return a.begin != b.begin ? a.begin < b.begin : a.end > b.end;
  });
  std::vector<Span> outermost;
  for (const Span& s : news) {
    if (!outermost.empty() && outermost.back().Contains(s)) continue;
    outermost.push_back(s);
  }

  const StatementFinder finder(unit.text);
  std::vector<Edit> edits;
  for (const Span& expr : outermost) {
    const corpus::FieldModel* owner = nullptr;
    for (const corpus::FieldModel* fm : fields) {
      if (fm->initializer_span && fm->initializer_span->Contains(expr)) {
        owner = fm;
        break;
      }
    }
    if (owner != nullptr) {
      edits.push_back(Edit{
          Span{owner->name_span.end, owner->initializer_span->end}, ""});
      continue;
    }
    const Span* body = nullptr;
    for (const Span& b : bodies) {
      if (b.Contains(expr) && (body == nullptr || body->Contains(b))) {
        body = &b;
      }
    }
    auto first = finder.TokenAt(expr.begin);
    std::optional<std::size_t> open;
    std::optional<std::size_t> close;
    if (body != nullptr) {
      open = finder.TokenAt(body->begin);
      close = finder.TokenAt(body->end - 1);
    }
    std::optional<std::size_t> last;
    if (first) {
      std::size_t j = *first;
      while (finder.Tok(j).end < expr.end) ++j;
      last = j;
    }
    std::optional<Statement> stmt;
    if (first && open && close) {
      stmt = EnclosingStatement(finder, *open, *close, *first, *last);
    }
    if (!stmt) {
      edits.push_back(Edit{expr, "null"});
      continue;
    }
    if (auto name = LocalDeclarator(finder, *stmt, *first)) {
      // Drop this declarator's initializer, up to the next ',' or ';'.
      std::size_t j = *last + 1;
      int d = 0;
      for (; j < stmt->semicolon; ++j) {
        const Token& t = finder.Tok(j);
        if (t.Is("(") || t.Is("[") || t.Is("{")) ++d;
        if (t.Is(")") || t.Is("]") || t.Is("}")) --d;
        if (d == 0 && t.Is(",")) break;
      }
      edits.push_back(Edit{
          Span{finder.Tok(*name).end, finder.Tok(j).begin}, ""});
      continue;
    }
    const Span whole{finder.Tok(stmt->first).begin,
                     finder.Tok(stmt->semicolon).end};
    edits.push_back(Edit{ExpandToLines(unit.text, whole, *body), ""});
  }
  return Normalize(std::move(edits));
}

std::string Skeletonize(const CompilationUnit& unit, const ClassModel& c,
                        const std::set<std::string>& preserve) {
  std::vector<Edit> edits = BodyRemovalEdits(unit, c, preserve);
  std::vector<Span> replaced;
  for (const Edit& e : edits) replaced.push_back(e.span);
  for (Edit& e : CommentRemovalEdits(unit, c, replaced)) {
    edits.push_back(std::move(e));
  }
  return corpus::RenderClass(unit, c, Normalize(std::move(edits)));
}

std::string StripInstantiations(const CompilationUnit& unit,
                                const ClassModel& c) {
  return corpus::RenderClass(unit, c, InstantiationRemovalEdits(unit, c));
}

std::string RenderDistractor(const CompilationUnit& unit,
                             const ClassModel& c) {
  std::vector<Edit> edits = BodyRemovalEdits(unit, c, {});
  std::vector<Span> replaced;
  for (const Edit& e : edits) replaced.push_back(e.span);
  std::vector<Edit> strip = InstantiationRemovalEdits(unit, c, replaced);
  for (const Edit& e : strip) replaced.push_back(e.span);
  for (Edit& e : CommentRemovalEdits(unit, c, replaced)) {
    edits.push_back(std::move(e));
  }
  for (Edit& e : strip) edits.push_back(std::move(e));
  return corpus::RenderClass(unit, c, Normalize(std::move(edits)));
}

std::string StripComments(const CompilationUnit& unit, const ClassModel& c) {
  return corpus::RenderClass(unit, c, CommentRemovalEdits(unit, c));
}

}  // namespace designprobe::transforms
