// Copyright (c) 2026 The mapscreen Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <condition_variable>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

namespace mapscreen::inference {

// Hands out backend instances to workers. A shareable backend is one instance
// used by everybody; otherwise the pool owns `capacity` instances and a lease
// blocks until one is free.
template <class Stage>
class StagePool {
 public:
  using Factory = std::function<std::unique_ptr<Stage>()>;

  class Lease {
   public:
    Lease(Lease&& other) noexcept : pool_(other.pool_), stage_(other.stage_) {
      other.pool_ = nullptr;
      other.stage_ = nullptr;
    }
    Lease(const Lease&) = delete;
    Lease& operator=(const Lease&) = delete;
    Lease& operator=(Lease&&) = delete;
    ~Lease() {
      if (pool_ != nullptr) pool_->release(stage_);
    }

    Stage& operator*() const noexcept { return *stage_; }
    Stage* operator->() const noexcept { return stage_; }

   private:
    friend class StagePool;
    Lease(StagePool* pool, Stage* stage) : pool_(pool), stage_(stage) {}

    StagePool* pool_;
    Stage* stage_;
  };

  // Wraps an existing instance. A non-shareable one is serialized.
  explicit StagePool(std::shared_ptr<Stage> instance) {
    shared_ = instance->descriptor().shareable;
    instances_.push_back(std::move(instance));
    if (!shared_) free_.push_back(instances_.front().get());
  }

  StagePool(const Factory& factory, std::size_t capacity) {
    instances_.push_back(std::shared_ptr<Stage>(factory()));
    shared_ = instances_.front()->descriptor().shareable;
    if (shared_) return;
    for (std::size_t i = 1; i < capacity; ++i) instances_.push_back(std::shared_ptr<Stage>(factory()));
    for (const auto& instance : instances_) free_.push_back(instance.get());
  }

  StagePool(const StagePool&) = delete;
  StagePool& operator=(const StagePool&) = delete;

  Lease acquire() {
    if (shared_) return Lease(nullptr, instances_.front().get());
    std::unique_lock lock(mutex_);
    available_.wait(lock, [this] { return !free_.empty(); });
    Stage* stage = free_.back();
    free_.pop_back();
    return Lease(this, stage);
  }

  bool shared() const noexcept { return shared_; }
  std::size_t size() const noexcept { return instances_.size(); }

 private:
  void release(Stage* stage) {
    {
      std::lock_guard lock(mutex_);
      free_.push_back(stage);
    }
    available_.notify_one();
  }

  bool shared_ = true;
  std::vector<std::shared_ptr<Stage>> instances_;
  std::vector<Stage*> free_;
  std::mutex mutex_;
  std::condition_variable available_;
};

}  // namespace mapscreen::inference
