// Copyright 2026 The ergo authors
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

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "ergo/core/errors.hpp"

namespace ergo {

struct AveragingOptions {
    /// Worker threads; results do not depend on this value.
    std::size_t threads = 1;
    /// Terms per block. Blocks are summed sequentially, block sums are merged
    /// by a fixed pairwise tree, so the reduction shape depends only on the
    /// number of terms and this value.
    std::size_t block_size = 4096;
    std::size_t budget = kDefaultBudget;
};

/// Sums `n` terms in fixed blocks: block(begin, end) -> Acc, then merges block
/// results pairwise (0+1, 2+3, ...) level by level.
template <class Acc, class BlockFn>
Acc reduce_blocks(std::size_t n, const AveragingOptions& opts, BlockFn block) {
    const std::size_t bs = std::max<std::size_t>(opts.block_size, 1);
    const std::size_t blocks = n == 0 ? 1 : (n + bs - 1) / bs;
    std::vector<Acc> partial(blocks);
    auto run = [&](std::size_t b) { partial[b] = block(std::min(b * bs, n), std::min((b + 1) * bs, n)); };
    const std::size_t threads = std::min(std::max<std::size_t>(opts.threads, 1), blocks);
    if (threads <= 1) {
        for (std::size_t b = 0; b < blocks; ++b) run(b);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t b = t; b < blocks; b += threads) run(b);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    while (partial.size() > 1) {
        std::vector<Acc> next;
        next.reserve((partial.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < partial.size(); i += 2) {
            partial[i].merge(partial[i + 1]);
            next.push_back(std::move(partial[i]));
        }
        if (partial.size() % 2 == 1) next.push_back(std::move(partial.back()));
        partial = std::move(next);
    }
    return std::move(partial.front());
}

}  // namespace ergo
