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

#include "designprobe/corpus/model.h"

#include <algorithm>
#include <array>

#include "designprobe/common/text.h"

namespace designprobe::corpus {

std::string_view ClassKindName(ClassKind kind) {
  switch (kind) {
    case ClassKind::kConcreteClass:
      return "concrete-class";
    case ClassKind::kAbstractClass:
      return "abstract-class";
    case ClassKind::kInterface:
      return "interface";
    case ClassKind::kEnum:
      return "enum";
    case ClassKind::kRecordLike:
      return "record-like";
  }
  return "unknown";
}

bool Modifiers::HasAnnotation(std::string_view simple_name) const {
  return std::find(annotations.begin(), annotations.end(), simple_name) !=
         annotations.end();
}

std::string MethodModel::CallableId() const {
  std::string id = name + "(";
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    if (i > 0) id += ",";
    id += parameters[i].type_name;
  }
  return id + ")";
}

const FieldModel* ClassModel::FindField(std::string_view name) const {
  for (const FieldModel& f : fields) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const MethodModel* ClassModel::FindCallable(std::string_view callable_id) const {
  for (const MethodModel& m : constructors) {
    if (m.CallableId() == callable_id) return &m;
  }
  for (const MethodModel& m : methods) {
    if (m.CallableId() == callable_id) return &m;
  }
  return nullptr;
}

bool ClassModel::DeclaresMethod(std::string_view name) const {
  return std::any_of(methods.begin(), methods.end(),
                     [&](const MethodModel& m) { return m.name == name; });
}

bool IsPrimitiveType(std::string_view name) {
  static constexpr std::array<std::string_view, 9> kPrimitives = {
      "boolean", "byte", "char", "short", "int",
      "long",    "float", "double", "void"};
  return std::find(kPrimitives.begin(), kPrimitives.end(), name) !=
         kPrimitives.end();
}

std::string BaseTypeName(std::string_view type_text) {
  std::string out;
  for (char c : type_text) {
    if (c == '<' || c == '[') break;
    out += c;
  }
  // Drop trailing varargs dots left behind by "T...".
  while (!out.empty() && out.back() == '.') out.pop_back();
  return std::string(Trim(out));
}

std::vector<std::string> TypeIdentifiers(std::string_view type_text) {
  std::vector<std::string> out;
  std::string current;
  bool dotted = false;
  auto flush = [&] {
    if (!current.empty() && current != "extends" && current != "super" &&
        !IsPrimitiveType(current)) {
      if (dotted && !out.empty()) {
        out.back() += "." + current;
      } else {
        out.push_back(current);
      }
    }
    current.clear();
  };
  for (char c : type_text) {
    if (IsWordByte(static_cast<unsigned char>(c))) {
      current += c;
      continue;
    }
    if (c == '.') {
      flush();
      dotted = true;
      continue;
    }
    flush();
    dotted = false;
  }
  flush();
  return out;
}

}  // namespace designprobe::corpus
