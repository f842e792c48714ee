#include "leibniz/cli/report.hpp"

#include <sstream>

namespace leibniz::cli {

std::string render_json(const Report &r)
{
	Json checks = Json::array();
	for (const auto &c : r.checks)
	{
		Json entry = {{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
		if (!c.pass)
			entry["witness"] = c.witness.empty() ? std::string("(no detail)") : c.witness;
		checks.push_back(std::move(entry));
	}
	Json doc = {{"command", r.command}, {"status", r.pass() ? "pass" : "fail"}, {"checks", checks}};
	doc["timing_ms"] = r.timing_ms ? *r.timing_ms : 0.0;
	if (!r.notices.empty())
		doc["notices"] = r.notices;
	if (r.result)
		doc["result"] = *r.result;
	return doc.dump(2) + "\n";
}

std::string render_text(const Report &r)
{
	std::ostringstream os;
	os << r.command << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
	for (const auto &c : r.checks)
	{
		os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << "\n";
		if (!c.pass && !c.witness.empty())
			os << "         " << c.witness << "\n";
	}
	for (const auto &n : r.notices)
		os << "  note: " << n << "\n";
	if (r.result)
		os << r.result->dump(2) << "\n";
	if (r.timing_ms)
		os << "  time: " << *r.timing_ms << " ms\n";
	return os.str();
}

} // namespace leibniz::cli
