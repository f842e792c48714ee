#ifndef LEIBNIZ_PARALLEL_HPP
#define LEIBNIZ_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include <atomic>
#include <thread>

namespace leibniz {

/// Worker count from LEIBNIZ_FORGE_THREADS, else hardware concurrency; at
/// least 1.
std::size_t worker_count();

/// Calls fn(i) for every i in [0, count) on up to worker_count() threads.
/// fn must only write to state owned by index i.
template <class Fn>
void parallel_for(std::size_t count, Fn &&fn)
{
	std::size_t workers = std::min(worker_count(), count);
	if (workers <= 1)
	{
		for (std::size_t i = 0; i < count; ++i)
			fn(i);
		return;
	}
	std::atomic<std::size_t> next{0};
	std::vector<std::thread> pool;
	pool.reserve(workers);
	for (std::size_t w = 0; w < workers; ++w)
		pool.emplace_back([&] {
			for (std::size_t i = next++; i < count; i = next++)
				fn(i);
		});
	for (auto &t : pool)
		t.join();
}

/// Evaluates fn(i) for all i and returns the result with the smallest index
/// that is engaged, so the answer does not depend on scheduling.
template <class T, class Fn>
std::optional<T> first_engaged(std::size_t count, Fn &&fn)
{
	std::vector<std::optional<T>> results(count);
	parallel_for(count, [&](std::size_t i) { results[i] = fn(i); });
	for (auto &r : results)
		if (r)
			return std::move(r);
	return std::nullopt;
}

} // namespace leibniz

#endif
