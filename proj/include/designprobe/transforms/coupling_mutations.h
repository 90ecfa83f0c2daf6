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

#ifndef DESIGNPROBE_TRANSFORMS_COUPLING_MUTATIONS_H_
#define DESIGNPROBE_TRANSFORMS_COUPLING_MUTATIONS_H_

#include <string>
#include <vector>

#include "designprobe/analysis/injection_sites.h"
#include "designprobe/common/rng.h"
#include "designprobe/corpus/hierarchy.h"
#include "designprobe/corpus/project.h"
#include "designprobe/transforms/mutation_record.h"

namespace designprobe::transforms {

// Concrete classes that can stand in for `abstract_type` via `new C()`:
// top-level, non-test, zero-argument constructible, and not the consumer.
std::vector<std::string> ConstructibleImplementors(
    const corpus::SourceProject& project,
    const corpus::TypeHierarchy& hierarchy, const std::string& abstract_type,
    const std::string& consumer);

// Direct instantiation: the callable loses its parameters and each injected
// field is assigned `new C()`. Project call sites of a mutated constructor
// are rewritten to pass no arguments.
// Throws Error(kNoImplementor) or Error(kUnreachable).
MutationRecord ApplyDid(const corpus::SourceProject& project,
                        const corpus::TypeHierarchy& hierarchy,
                        const analysis::InjectionSite& site, Rng& rng);

// Unused injection: the signature is kept and only the assignments change.
MutationRecord ApplyUid(const corpus::SourceProject& project,
                        const corpus::TypeHierarchy& hierarchy,
                        const analysis::InjectionSite& site, Rng& rng);

// Indirect dependency: each chosen class gains `static C create()` and the
// consumer assigns `C.create()`. Falls back to `create$gen` when `create`
// is taken; throws Error(kNameCollision) when both are.
MutationRecord ApplyIdd(const corpus::SourceProject& project,
                        const corpus::TypeHierarchy& hierarchy,
                        const analysis::InjectionSite& site, Rng& rng);

MutationRecord ApplyCoupling(MutationKind kind,
                             const corpus::SourceProject& project,
                             const corpus::TypeHierarchy& hierarchy,
                             const analysis::InjectionSite& site, Rng& rng);

}  // namespace designprobe::transforms

#endif  // DESIGNPROBE_TRANSFORMS_COUPLING_MUTATIONS_H_
