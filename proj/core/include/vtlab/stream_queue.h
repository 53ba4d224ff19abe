// Copyright 2026 The vtlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VTLAB_STREAM_QUEUE_H_
#define VTLAB_STREAM_QUEUE_H_

// Load queue and ancestor streaming strategies.

#include <cstdint>
#include <optional>
#include <string>

#include "vtlab/heuristics.h"
#include "vtlab/page.h"
#include "vtlab/runtime.h"
#include "vtlab/vtx_file.h"

namespace vtlab {

enum class AncestorStrategy { kNone, kIntern, kExtern };

std::string AncestorStrategyName(AncestorStrategy strategy);
// "none", "intern" or "extern"; throws kConfig otherwise.
AncestorStrategy ParseAncestorStrategy(const std::string& name);

// Adds the ancestors a missing page falls back through. For every
// non-resident page in `needed`, each ancestor strictly between it and its
// resident fallback enters the result with the summed priority of its
// children on those paths; a page both needed and an ancestor gets its own
// priority plus that sum. Resident pages in `needed` are dropped.
//
// With `skip_noise`, an ancestor is left out when every child it was reached
// through has a NoiseValue below the table's mean: the child then differs
// little from it, so loading the ancestor first gains little. Its priority
// still flows on to the ancestors above it.
PriorityMap AncestorClosure(const PriorityMap& needed, const PageTable& table,
                            const NoiseTable* skip_noise = nullptr);

struct QueueEntry {
  PageId id;
  uint64_t abs = 0;
  double priority = 0.0;
};

// Ordering of pages waiting to be loaded. kNone dequeues by priority alone,
// kExtern serves lower mips first and kIntern returns a queued ancestor of
// the top page before the page itself.
class StreamQueue {
 public:
  StreamQueue(AncestorStrategy strategy, uint32_t mip_count);

  void Push(uint64_t abs, double priority);
  // Entries are replaced, not accumulated, when a page is pushed twice.
  void Assign(const PriorityMap& entries);
  std::optional<QueueEntry> Pop();

  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }
  bool Contains(uint64_t abs) const { return entries_.count(abs) != 0; }

 private:
  AncestorStrategy strategy_;
  uint32_t mip_count_;
  PriorityMap entries_;
};

}  // namespace vtlab

#endif  // VTLAB_STREAM_QUEUE_H_
