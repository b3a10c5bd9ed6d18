#include "riparian/problem.hpp"

#include <atomic>

namespace riparian {

namespace {
std::atomic<std::uint64_t> audited_count{0};
}  // namespace

namespace detail {
void note_allocation_audited() noexcept { audited_count.fetch_add(1, std::memory_order_relaxed); }
}  // namespace detail

std::uint64_t allocations_audited() noexcept { return audited_count.load(std::memory_order_relaxed); }

}  // namespace riparian
