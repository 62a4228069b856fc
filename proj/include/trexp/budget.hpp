#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <string>

#include "trexp/types.hpp"

namespace trexp {

/// Explicit resource limits for exhaustive searches. Zero means unlimited.
struct Budget {
    std::int64_t max_nodes = 0;
    double time_limit_seconds = 0.0;
};

/// Counts search nodes against a Budget; throws ResourceError when exceeded.
/// Meters of parallel workers may share one node counter.
class BudgetMeter {
public:
    explicit BudgetMeter(Budget b, std::string what = "search", std::atomic<std::int64_t>* shared = nullptr)
        : budget_(b), what_(std::move(what)), shared_(shared), start_(std::chrono::steady_clock::now()) {}

    void tick() {
        ++nodes_;
        if (budget_.max_nodes > 0 && (!shared_ || (nodes_ & stride_mask_) == 0)) {
            std::int64_t total =
                shared_ ? shared_->fetch_add(stride_mask_ + 1, std::memory_order_relaxed) + stride_mask_ + 1 : nodes_;
            if (total > budget_.max_nodes)
                throw ResourceError(what_ + " exceeded node budget of " + std::to_string(budget_.max_nodes));
        }
        if (budget_.time_limit_seconds > 0.0 && (nodes_ & 0x3FF) == 0 && elapsed() > budget_.time_limit_seconds)
            throw ResourceError(what_ + " exceeded time budget of " +
                                std::to_string(budget_.time_limit_seconds) + "s");
    }

    std::int64_t nodes() const { return nodes_; }
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    Budget budget_;
    std::string what_;
    std::atomic<std::int64_t>* shared_;
    std::chrono::steady_clock::time_point start_;
    std::int64_t nodes_ = 0;
    // Small budgets are flushed to the shared counter on every node.
    std::int64_t stride_mask_ = budget_.max_nodes > 0 && budget_.max_nodes < (1 << 16) ? 0 : 0x3F;
};

}  // namespace trexp
