// Copyright 2026 The mwp-attack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <limits>
#include <stdexcept>

#include "mwp/paraphrase_attack.h"

namespace mwp {

CombinationStream::CombinationStream(std::vector<size_t> set_sizes)
    : sizes_(std::move(set_sizes)),
      perturbable_from_(sizes_.size() + 1, 0),
      current_(sizes_.size(), 0) {
  for (size_t i = sizes_.size(); i-- > 0;) {
    if (sizes_[i] == 0) {
      throw std::invalid_argument("CombinationStream: empty candidate set");
    }
    perturbable_from_[i] = perturbable_from_[i + 1] + (sizes_[i] > 1 ? 1 : 0);
  }
  constexpr uint64_t kMax = std::numeric_limits<uint64_t>::max();
  for (size_t size : sizes_) {
    product_size_ = product_size_ > kMax / size ? kMax : product_size_ * size;
  }
}

// Lexicographically smallest completion of positions [from, n) with exactly
// `needed` replaced sentences. Index 0 is the best-ranked candidate and the
// original sits at the end, so replacing as early as possible is smallest.
void CombinationStream::Fill(size_t from, size_t needed) {
  for (size_t i = from; i < sizes_.size(); ++i) {
    if (needed > 0 && sizes_[i] > 1) {
      current_[i] = 0;
      --needed;
    } else {
      current_[i] = sizes_[i] - 1;
    }
  }
}

bool CombinationStream::Advance() {
  const size_t n = sizes_.size();
  std::vector<size_t> replaced_before(n + 1, 0);
  for (size_t i = 0; i < n; ++i) {
    replaced_before[i + 1] =
        replaced_before[i] + (current_[i] + 1 < sizes_[i] ? 1 : 0);
  }
  for (size_t p = n; p-- > 0;) {
    const size_t remaining = level_ - replaced_before[p];
    for (size_t v = current_[p] + 1; v < sizes_[p]; ++v) {
      const bool replaces = v + 1 < sizes_[p];
      if (replaces) {
        if (remaining == 0 || perturbable_from_[p + 1] < remaining - 1) continue;
      } else if (perturbable_from_[p + 1] < remaining) {
        continue;
      }
      current_[p] = v;
      Fill(p + 1, remaining - (replaces ? 1 : 0));
      return true;
    }
  }
  return false;
}

std::optional<std::vector<size_t>> CombinationStream::Next() {
  if (done_) return std::nullopt;
  if (started_ && Advance()) return current_;
  ++level_;
  if (level_ > perturbable_from_[0]) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  Fill(0, level_);
  return current_;
}

std::string JoinSelection(const std::vector<CandidateSet>& sets,
                          const std::vector<size_t>& selection) {
  std::string out;
  for (size_t i = 0; i < sets.size(); ++i) {
    if (i > 0) out += ' ';
    out += sets[i].candidates.at(selection.at(i));
  }
  return out;
}

std::vector<std::string> EnumerateCombinations(
    const std::vector<CandidateSet>& sets, uint64_t budget) {
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  std::vector<size_t> sizes;
  for (const CandidateSet& set : sets) sizes.push_back(set.candidates.size());
  CombinationStream stream(std::move(sizes));
  std::vector<std::string> out;
  while (out.size() < budget) {
    auto selection = stream.Next();
    if (!selection) break;
    out.push_back(JoinSelection(sets, *selection));
  }
  return out;
}

}  // namespace mwp
