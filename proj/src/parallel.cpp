#include "leibniz/parallel.hpp"

#include <cstdlib>
#include <string>

namespace leibniz {

std::size_t worker_count()
{
	if (const char *env = std::getenv("LEIBNIZ_FORGE_THREADS"))
	{
		try
		{
			long v = std::stol(env);
			if (v >= 1)
				return static_cast<std::size_t>(v);
		}
		catch (const std::exception &)
		{
		}
		return 1;
	}
	unsigned hw = std::thread::hardware_concurrency();
	return hw == 0 ? 1 : hw;
}

} // namespace leibniz
