#ifndef LEIBNIZ_CLI_REPORT_HPP
#define LEIBNIZ_CLI_REPORT_HPP

#include "leibniz/check.hpp"
#include "leibniz/cli/parsers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace leibniz::cli {

struct Report
{
	std::string command;
	std::vector<NamedCheck> checks;
	std::optional<Json> result;
	std::vector<std::string> notices;
	/// Only serialized when timing output was requested.
	std::optional<double> timing_ms;

	bool pass() const { return all_pass(checks); }
	void add(std::string name, bool pass, std::string witness = {})
	{
		checks.push_back({std::move(name), pass, std::move(witness)});
	}
};

/// {status, checks: [{name, status, witness?}], timing_ms, result?}. Without
/// a measured time timing_ms is 0 so equal inputs give equal bytes.
std::string render_json(const Report &r);
std::string render_text(const Report &r);

} // namespace leibniz::cli

#endif
