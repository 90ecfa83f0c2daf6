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

#include "designprobe/analysis/dependency_graph.h"

#include <algorithm>
#include <deque>
#include <numeric>

#include "designprobe/common/error.h"
#include "designprobe/corpus/hierarchy.h"

namespace designprobe::analysis {

std::string_view EdgeKindName(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kFieldType:
      return "field-type";
    case EdgeKind::kParameterType:
      return "parameter-type";
    case EdgeKind::kReturnType:
      return "return-type";
    case EdgeKind::kInstantiation:
      return "instantiation";
    case EdgeKind::kStaticCall:
      return "static-call";
    case EdgeKind::kInheritance:
      return "inheritance";
    case EdgeKind::kTypeReference:
      return "type-reference";
  }
  return "unknown";
}

void DependencyGraph::AddNode(const std::string& name) { nodes_.insert(name); }

void DependencyGraph::AddEdge(const std::string& from, const std::string& to,
                              EdgeKind kind) {
  if (from == to) return;
  if (!HasNode(from) || !HasNode(to)) {
    throw Error(ErrorCode::kUnknownNode, "edge " + from + " -> " + to);
  }
  edges_.insert(Edge{from, to, kind});
  successors_[from].insert(to);
}

bool DependencyGraph::HasNode(std::string_view name) const {
  return nodes_.find(name) != nodes_.end();
}

bool DependencyGraph::TransitivelyDepends(std::string_view x,
                                          std::string_view z) const {
  if (!HasNode(x)) throw Error(ErrorCode::kUnknownNode, std::string(x));
  if (!HasNode(z)) throw Error(ErrorCode::kUnknownNode, std::string(z));
  std::set<std::string, std::less<>> seen;
  std::deque<std::string> queue;
  auto expand = [&](std::string_view n) {
    auto it = successors_.find(n);
    if (it == successors_.end()) return;
    for (const std::string& next : it->second) {
      if (seen.insert(next).second) queue.push_back(next);
    }
  };
  expand(x);
  while (!queue.empty()) {
    std::string n = std::move(queue.front());
    queue.pop_front();
    if (n == z) return true;
    expand(n);
  }
  return false;
}

std::vector<DependencyCluster> DependencyGraph::Clusters() const {
  std::vector<std::string> names(nodes_.begin(), nodes_.end());
  std::map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;
  std::vector<std::size_t> parent(names.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (const Edge& e : edges_) {
    std::size_t a = find(index[e.from]);
    std::size_t b = find(index[e.to]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  // Names are sorted, so each root is the smallest member of its component
  // and roots appear in ascending order.
  std::map<std::size_t, std::size_t> cluster_of_root;
  std::vector<DependencyCluster> clusters;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::size_t root = find(i);
    auto [it, inserted] = cluster_of_root.emplace(root, clusters.size());
    if (inserted) clusters.push_back(DependencyCluster{clusters.size(), {}});
    clusters[it->second].members.insert(names[i]);
  }
  return clusters;
}

std::string DependencyGraph::ToEdgeList() const {
  std::string out;
  for (const Edge& e : edges_) {
    out += e.from;
    out += '\t';
    out += e.to;
    out += '\t';
    out += EdgeKindName(e.kind);
    out += '\n';
  }
  return out;
}

DependencyGraph BuildDependencyGraph(const corpus::SourceProject& project) {
  DependencyGraph g;
  const std::vector<const corpus::ClassModel*> classes = project.Classes();
  for (const corpus::ClassModel* c : classes) g.AddNode(c->qualified_name);

  for (const corpus::ClassModel* c : classes) {
    auto link_type_text = [&](const std::string& type_text, EdgeKind kind) {
      for (const std::string& ident : corpus::TypeIdentifiers(type_text)) {
        if (auto target = corpus::ResolveTypeName(project, *c, ident)) {
          g.AddEdge(c->qualified_name, *target, kind);
        }
      }
    };
    auto link_uses = [&](const std::vector<corpus::TypeUse>& uses) {
      for (const corpus::TypeUse& use : uses) {
        EdgeKind kind = EdgeKind::kTypeReference;
        if (use.kind == corpus::TypeUseKind::kInstantiation) {
          kind = EdgeKind::kInstantiation;
        } else if (use.kind == corpus::TypeUseKind::kStaticAccess) {
          kind = EdgeKind::kStaticCall;
        }
        if (auto target = corpus::ResolveTypeName(project, *c, use.name)) {
          g.AddEdge(c->qualified_name, *target, kind);
        }
      }
    };
    // A nested class travels with its enclosing class.
    if (!c->enclosing_class.empty()) {
      g.AddEdge(c->qualified_name, c->enclosing_class,
                EdgeKind::kTypeReference);
    }
    for (const std::string& s : c->supertype_names) {
      link_type_text(s, EdgeKind::kInheritance);
    }
    for (const std::string& s : c->interface_names) {
      link_type_text(s, EdgeKind::kInheritance);
    }
    for (const corpus::FieldModel& f : c->fields) {
      link_type_text(f.declared_type_name, EdgeKind::kFieldType);
    }
    link_uses(c->type_uses);
    for (const auto* list : {&c->methods, &c->constructors}) {
      for (const corpus::MethodModel& m : *list) {
        for (const corpus::Parameter& p : m.parameters) {
          link_type_text(p.type_name, EdgeKind::kParameterType);
        }
        if (!m.is_constructor) {
          link_type_text(m.return_type_name, EdgeKind::kReturnType);
        }
        link_uses(m.type_uses);
      }
    }
  }
  return g;
}

}  // namespace designprobe::analysis
