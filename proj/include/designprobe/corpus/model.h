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

#ifndef DESIGNPROBE_CORPUS_MODEL_H_
#define DESIGNPROBE_CORPUS_MODEL_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace designprobe::corpus {

// Half-open byte range [begin, end) into a compilation unit's text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool Contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool Overlaps(const Span& other) const {
    return begin < other.end && other.begin < end;
  }
  std::string_view Of(std::string_view text) const {
    return text.substr(begin, end - begin);
  }
  auto operator<=>(const Span&) const = default;
};

enum class ClassKind {
  kConcreteClass,
  kAbstractClass,
  kInterface,
  kEnum,
  kRecordLike,
};

std::string_view ClassKindName(ClassKind kind);

enum class Visibility { kPackage, kPublic, kProtected, kPrivate };

struct Modifiers {
  Visibility visibility = Visibility::kPackage;
  bool is_static = false;
  bool is_abstract = false;
  bool is_final = false;
  bool is_default = false;
  // Simple names without the '@'.
  std::vector<std::string> annotations;

  bool HasAnnotation(std::string_view simple_name) const;
};

struct Parameter {
  std::string name;
  std::string type_name;
  Span span;
};

struct FieldModel {
  std::string name;
  // Type as written, whitespace-collapsed ("Map<String,Order>").
  std::string declared_type_name;
  // The initializer expression after '='.
  std::optional<Span> initializer_span;
  Modifiers modifiers;
  // The whole declaration statement; shared by `int a, b;` declarators.
  Span declaration_span;
  // Annotations, modifiers and type of the declaration.
  Span prefix_span;
  Span name_span;
};

enum class TypeUseKind { kInstantiation, kStaticAccess, kReference };

// A mention of a type name inside executable code.
struct TypeUse {
  std::string name;
  TypeUseKind kind = TypeUseKind::kReference;
  // For instantiations, the whole `new ...` expression.
  Span span;
  // Instantiations with an argument list: the text between the parentheses.
  std::optional<Span> arguments;
  std::size_t argument_count = 0;
};

// A top-level body statement of the shape `[this.]field = identifier;`.
struct FieldAssignment {
  std::string field;
  std::string value;
  Span statement_span;
  Span value_span;
};

struct MethodModel {
  std::string name;
  bool is_constructor = false;
  std::vector<Parameter> parameters;
  // Empty for constructors.
  std::string return_type_name;
  Modifiers modifiers;
  // Braces inclusive; absent for abstract and interface methods.
  std::optional<Span> body_span;
  Span declaration_span;
  Span name_span;
  // Between the parentheses, exclusive.
  Span parameter_list_span;
  std::set<std::string> accessed_fields;
  std::set<std::string> invoked_methods;
  std::vector<FieldAssignment> field_assignments;
  std::size_t top_level_statement_count = 0;
  std::vector<TypeUse> type_uses;

  // "name(T1,T2)"; constructors use the class simple name.
  std::string CallableId() const;
};

struct ClassModel {
  std::string qualified_name;
  std::string simple_name;
  std::string package_name;
  std::string unit_path;
  // Qualified name of the enclosing class; empty for top-level classes.
  std::string enclosing_class;
  ClassKind kind = ClassKind::kConcreteClass;
  Modifiers modifiers;
  std::vector<FieldModel> fields;
  std::vector<MethodModel> methods;
  std::vector<MethodModel> constructors;
  std::vector<std::string> supertype_names;
  std::vector<std::string> interface_names;
  bool is_test = false;
  Span body_span;
  Span declaration_span;
  Span name_span;
  std::vector<Span> initializer_blocks;
  // Uses found in field initializers and initializer blocks.
  std::vector<TypeUse> type_uses;

  bool IsTopLevel() const { return enclosing_class.empty(); }
  const FieldModel* FindField(std::string_view name) const;
  // Every method and constructor with the given CallableId, or null.
  const MethodModel* FindCallable(std::string_view callable_id) const;
  bool DeclaresMethod(std::string_view name) const;
};

struct Import {
  std::string name;
  bool is_static = false;
  bool is_wildcard = false;
};

struct CompilationUnit {
  // Relative to the project root, '/'-separated.
  std::string path;
  std::string text;
  std::string package_name;
  std::vector<Import> imports;
  // Declaration order; nested classes follow their enclosing class.
  std::vector<ClassModel> classes;
  std::vector<Span> comments;
};

// "List<Order>[]" -> "List"; "a.b.C<X>" -> "a.b.C".
std::string BaseTypeName(std::string_view type_text);

// All type identifiers in a type expression, excluding primitives, wildcards
// and bounds keywords: "Map<String,List<Order>>" -> {Map, String, List, Order}.
std::vector<std::string> TypeIdentifiers(std::string_view type_text);

bool IsPrimitiveType(std::string_view name);

}  // namespace designprobe::corpus

#endif  // DESIGNPROBE_CORPUS_MODEL_H_
