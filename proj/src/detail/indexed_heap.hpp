// Copyright 2026 The MCF Suite Authors
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

#ifndef MCF_DETAIL_INDEXED_HEAP_HPP
#define MCF_DETAIL_INDEXED_HEAP_HPP

#include <utility>
#include <vector>

#include "mcf/types.hpp"

namespace mcf::detail {

// Binary min-heap over node ids with decrease-key through a position map.
// Ties break toward the lower node id, which keeps extraction order
// deterministic.
class IndexedHeap {
 public:
  explicit IndexedHeap(NodeId capacity) : pos_(capacity, -1) {}

  bool empty() const { return heap_.empty(); }

  void clear() {
    for (const Entry& e : heap_) pos_[e.id] = -1;
    heap_.clear();
  }

  void push_or_decrease(NodeId id, Value key) {
    if (pos_[id] < 0) {
      pos_[id] = static_cast<int>(heap_.size());
      heap_.push_back({key, id});
      sift_up(pos_[id]);
    } else if (key < heap_[pos_[id]].key) {
      heap_[pos_[id]].key = key;
      sift_up(pos_[id]);
    }
  }

  std::pair<Value, NodeId> pop() {
    const Entry top = heap_.front();
    pos_[top.id] = -1;
    if (heap_.size() > 1) {
      heap_.front() = heap_.back();
      pos_[heap_.front().id] = 0;
      heap_.pop_back();
      sift_down(0);
    } else {
      heap_.pop_back();
    }
    return {top.key, top.id};
  }

 private:
  struct Entry {
    Value key;
    NodeId id;
  };

  static bool less(const Entry& a, const Entry& b) {
    return a.key < b.key || (a.key == b.key && a.id < b.id);
  }

  void sift_up(int i) {
    Entry e = heap_[i];
    while (i > 0) {
      const int parent = (i - 1) / 2;
      if (!less(e, heap_[parent])) break;
      heap_[i] = heap_[parent];
      pos_[heap_[i].id] = i;
      i = parent;
    }
    heap_[i] = e;
    pos_[e.id] = i;
  }

  void sift_down(int i) {
    const int size = static_cast<int>(heap_.size());
    Entry e = heap_[i];
    while (true) {
      int child = 2 * i + 1;
      if (child >= size) break;
      if (child + 1 < size && less(heap_[child + 1], heap_[child])) ++child;
      if (!less(heap_[child], e)) break;
      heap_[i] = heap_[child];
      pos_[heap_[i].id] = i;
      i = child;
    }
    heap_[i] = e;
    pos_[e.id] = i;
  }

  std::vector<Entry> heap_;
  std::vector<int> pos_;
};

}  // namespace mcf::detail

#endif  // MCF_DETAIL_INDEXED_HEAP_HPP
