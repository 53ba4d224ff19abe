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

#include "vtlab/stream_queue.h"

#include <map>

#include "vtlab/error.h"

namespace vtlab {

std::string AncestorStrategyName(AncestorStrategy strategy) {
  switch (strategy) {
    case AncestorStrategy::kNone:
      return "none";
    case AncestorStrategy::kIntern:
      return "intern";
    case AncestorStrategy::kExtern:
      return "extern";
  }
  return "unknown";
}

AncestorStrategy ParseAncestorStrategy(const std::string& name) {
  if (name == "none") return AncestorStrategy::kNone;
  if (name == "intern") return AncestorStrategy::kIntern;
  if (name == "extern") return AncestorStrategy::kExtern;
  throw VtError(ErrorCode::kConfig, "unknown ancestor strategy '" + name + "'");
}

PriorityMap AncestorClosure(const PriorityMap& needed, const PageTable& table,
                            const NoiseTable* skip_noise) {
  const TextureMeta& meta = table.meta();
  const double threshold = skip_noise != nullptr ? skip_noise->Mean() : 0.0;

  // Accumulated priority per page, and for ancestors the largest NoiseValue
  // among the children they were reached through.
  std::map<uint64_t, double> sum;
  std::map<uint64_t, double> child_noise;
  for (const auto& [abs, priority] : needed) {
    if (!table[abs].resident) sum[abs] += priority;
  }
  // Children have larger absolute indices than their parents, so walking
  // downward in index order finishes every page before its parent.
  for (auto it = sum.end(); it != sum.begin();) {
    --it;
    const PageId id = FromAbs(it->first, meta.mip_count);
    const auto parent = Parent(id);
    if (!parent) continue;
    const uint64_t parent_abs = AbsIndex(*parent, meta.mip_count);
    if (table[parent_abs].resident) continue;
    sum[parent_abs] += it->second;
    if (skip_noise != nullptr) {
      double& n = child_noise[parent_abs];
      n = std::max(n, static_cast<double>(skip_noise->values.at(it->first)));
    }
  }

  PriorityMap out;
  for (const auto& [abs, priority] : sum) {
    const bool direct = needed.count(abs) != 0;
    if (!direct && skip_noise != nullptr && child_noise[abs] < threshold) {
      continue;
    }
    out[abs] = priority;
  }
  return out;
}

StreamQueue::StreamQueue(AncestorStrategy strategy, uint32_t mip_count)
    : strategy_(strategy), mip_count_(mip_count) {}

void StreamQueue::Push(uint64_t abs, double priority) {
  entries_[abs] = priority;
}

void StreamQueue::Assign(const PriorityMap& entries) {
  for (const auto& [abs, priority] : entries) entries_[abs] = priority;
}

std::optional<QueueEntry> StreamQueue::Pop() {
  if (entries_.empty()) return std::nullopt;
  // Strict comparisons keep the lowest absolute index among equals.
  auto best = entries_.begin();
  for (auto it = std::next(best); it != entries_.end(); ++it) {
    if (strategy_ == AncestorStrategy::kExtern) {
      const uint32_t mip = FromAbs(it->first, mip_count_).mip;
      const uint32_t best_mip = FromAbs(best->first, mip_count_).mip;
      if (mip < best_mip || (mip == best_mip && it->second > best->second)) {
        best = it;
      }
    } else if (it->second > best->second) {
      best = it;
    }
  }
  if (strategy_ == AncestorStrategy::kIntern) {
    // Ancestors are listed child to root; keep the last queued one.
    const PageId top = FromAbs(best->first, mip_count_);
    for (const PageId& ancestor : Ancestors(top)) {
      const auto found = entries_.find(AbsIndex(ancestor, mip_count_));
      if (found != entries_.end()) best = found;
    }
  }
  QueueEntry out{FromAbs(best->first, mip_count_), best->first, best->second};
  entries_.erase(best);
  return out;
}

}  // namespace vtlab
