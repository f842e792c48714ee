#include "leibniz/cli/dispatch.hpp"

#include "leibniz/cli/report.hpp"
#include "leibniz/corpus.hpp"
#include "leibniz/envelope.hpp"
#include "leibniz/loops.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <ostream>

namespace leibniz::cli {

namespace {

struct Options
{
	std::string format = "text";
	bool timing = false;

	std::string file;
	std::vector<std::string> files;
	std::string ideal = "squares";
	std::string from_leibniz;

	std::string algebra;
	std::string s = "1/2";
	std::string x, y;
	bool use_float = false;
	bool use_exact = false;
	double tol = 1e-9;
	std::size_t samples = 200;
	std::uint64_t seed = 0;

	std::size_t dim = 2;
	std::size_t vars = 2;
	std::vector<std::string> sections;
	std::string bivector;
	std::string two_form;
};

std::string basis_tuple(const StructureAlgebra &a, const std::vector<std::size_t> &idx)
{
	std::string s = "(";
	for (std::size_t i = 0; i < idx.size(); ++i)
		s += (i ? "," : "") + a.basis_names().at(idx[i]);
	return s + ")";
}

std::string vec_text(std::span<const Rational> v) { return to_json(v).dump(); }

// ------------------------------------------------------------- commands

void algebra_check(const Options &o, Report &r)
{
	StructureAlgebra a = parse_algebra(read_file(o.file));
	IdentityCheck lc = check_leibniz(a);
	std::string witness;
	if (lc.failure)
		witness = "x.(y.z) = (x.y).z + y.(x.z) fails at " + basis_tuple(a, lc.failure->indices) +
		          ": lhs=" + vec_text(lc.failure->lhs) + ", rhs=" + vec_text(lc.failure->rhs);
	r.add("leibniz", lc.holds, witness);

	Json result = {{"name", a.name()},
	               {"dim", a.dim()},
	               {"leibniz", lc.holds},
	               {"lie", check_lie(a)},
	               {"skew_symmetric", check_skew(a).holds},
	               {"squares_ideal_dim", squares_ideal(a).dim()},
	               {"kernel_of_lambda_dim", kernel_of_lambda(a).dim()}};
	GraphReport g = graph_criterion(a);
	result["graph"] = {{"closed_under_leibniz", g.graph_closed_under_leibniz},
	                   {"is_lie_subalgebra", g.graph_is_lie_subalgebra},
	                   {"circle_vanishes", g.circle_vanishes_on_graph}};
	r.result = std::move(result);
}

Subspace ideal_for(const StructureAlgebra &a, const std::string &ideal)
{
	if (ideal == "squares")
		return squares_ideal(a);
	if (ideal == "kernel")
		return kernel_of_lambda(a);
	return parse_subspace(read_file(ideal), a.dim());
}

Json action_json(const ModuleAction &act)
{
	Json mats = Json::array();
	for (const auto &m : act.matrices())
		mats.push_back(to_json(m));
	return mats;
}

void envelope_cmd(const Options &o, Report &r, bool verify)
{
	StructureAlgebra a = parse_algebra(read_file(o.file));
	EnvelopeTriple t;
	try
	{
		t = canonical_envelope(a, ideal_for(a, o.ideal));
	}
	catch (const EnvelopeError &e)
	{
		r.add("envelope", false, e.what());
		return;
	}
	r.notices = t.notices;
	if (verify)
	{
		for (auto &c : verify_envelope(t))
			r.checks.push_back(std::move(c));
		return;
	}
	r.add("envelope", true);
	r.result = Json{{"h", algebra_to_json(t.h)},
	                {"g", algebra_to_json(t.g)},
	                {"f", to_json(t.f)},
	                {"action", action_json(t.action)}};
}

void ly_check(const Options &o, Report &r)
{
	LieYamaguti L;
	Json result = Json::object();
	if (!o.from_leibniz.empty())
	{
		StructureAlgebra a = parse_algebra(read_file(o.from_leibniz));
		try
		{
			L = ly_from_leibniz(a);
		}
		catch (const LYError &e)
		{
			r.add("lie_yamaguti_axioms", false, e.what());
			return;
		}
		result["lie_yamaguti"] = ly_to_json(L);
	}
	else
		L = parse_ly(read_file(o.file));

	LYCheck check = validate_ly(L);
	std::string witness;
	if (check.failure)
	{
		const auto &f = *check.failure;
		std::string tuple = "(";
		for (std::size_t i = 0; i < f.tuple.size(); ++i)
			tuple += (i ? "," : "") + std::to_string(f.tuple[i]);
		witness = f.axiom + " fails at " + tuple + "): lhs=" + vec_text(f.lhs) + ", rhs=" + vec_text(f.rhs);
	}
	r.add("lie_yamaguti_axioms", check.holds, witness);
	result["dim"] = L.n;
	if (check.holds)
	{
		try
		{
			LYEnvelope env = ly_envelope_default(L);
			LieYamaguti back = ly_from_decomposition(env.g, env.h_basis(), env.m_basis());
			r.add("envelope_round_trip", back == L, back == L ? "" : "induced structure differs from the input");
			result["inner_derivation_dim"] = env.h.dim();
		}
		catch (const LYError &e)
		{
			r.add("envelope_round_trip", false, e.what());
		}
	}
	r.result = std::move(result);
}

LoopContext loop_context(const Options &o)
{
	StructureAlgebra a = parse_algebra(read_file(o.algebra));
	return LoopContext(a, parse_rational_arg(o.s), o.use_float ? ExpMode::floating : ExpMode::exact, o.tol);
}

void loop_eval(const Options &o, Report &r)
{
	LoopContext ctx = loop_context(o);
	if (!ctx.algebra().is_leibniz())
		r.notices.push_back("the algebra is not Leibniz; the loop axioms need not hold");
	Vector x = parse_vector(o.x), y = parse_vector(o.y);
	if (x.size() != ctx.dim() || y.size() != ctx.dim())
		throw SemanticError("--x and --y need " + std::to_string(ctx.dim()) + " coordinates");
	if (ctx.mode() == ExpMode::floating)
	{
		FVector fx = to_float(x), fy = to_float(y);
		r.add("evaluated", true);
		r.result = Json{{"mode", "float"},
		                {"product", to_json(ctx.product(fx, fy))},
		                {"left_inverse_x", to_json(ctx.left_inverse(fx))},
		                {"left_divide_x_y", to_json(ctx.left_divide(fx, fy))},
		                {"left_inner_mapping_x_y", to_json(ctx.left_inner_mapping(fx, fy))}};
		return;
	}
	try
	{
		Json result = {{"mode", "exact"},
		               {"product", to_json(ctx.product(x, y))},
		               {"left_inverse_x", to_json(ctx.left_inverse(x))},
		               {"left_divide_x_y", to_json(ctx.left_divide(x, y))},
		               {"left_inner_mapping_x_y", to_json(ctx.left_inner_mapping(x, y))}};
		r.add("evaluated", true);
		r.result = std::move(result);
	}
	catch (const std::domain_error &e)
	{
		r.add("evaluated", false, e.what());
	}
}

void loop_verify(const Options &o, Report &r)
{
	LoopContext ctx = loop_context(o);
	if (ctx.mode() == ExpMode::exact && !ctx.lambda_envelope_nilpotent())
		r.notices.push_back("left multiplications are not all nilpotent; exact mode may fail");
	for (auto &c : loop_property_check(ctx, o.samples, o.seed))
		r.checks.push_back(std::move(c));
	r.result = Json{{"mode", o.use_float ? "float" : "exact"},
	                {"s", ctx.s().get_str()},
	                {"samples", o.samples},
	                {"seed", o.seed}};
}

void omni(const Options &o, Report &r)
{
	OmniAlgebras om = omni_algebras(o.dim);
	r.add("hemisemidirect_is_leibniz", om.hemisemidirect.is_leibniz());
	bool skew = skew_symmetrize(om.hemisemidirect) == om.demisemidirect;
	r.add("demisemidirect_is_skew_of_hemisemidirect", skew);
	r.result = Json{{"hemisemidirect", algebra_to_json(om.hemisemidirect)},
	                {"demisemidirect", algebra_to_json(om.demisemidirect)}};
}

void courant_bracket_cmd(const Options &o, Report &r)
{
	if (o.files.size() != 2)
		throw SemanticError("courant bracket takes exactly two section files");
	ParsedSection a = parse_section(read_file(o.files[0]));
	ParsedSection b = parse_section(read_file(o.files[1]));
	if (a.vars != b.vars)
		throw SemanticError("the two sections use different variables");
	const Section &x = a.section, &y = b.section;
	Section xy = courant_bracket(x, y), yx = courant_bracket(y, x);
	Section dxy = dorfman_product(x, y), dyx = dorfman_product(y, x);
	r.add("courant_skew", xy == -yx, xy == -yx ? "" : "[[x,y]]=" + to_string(xy) + ", [[y,x]]=" + to_string(yx));
	bool decomposes = dxy - dyx == xy.scaled(2) && dxy + dyx == D(pairing(x, y)).scaled(2);
	r.add("dorfman_decomposition", decomposes, decomposes ? "" : "x.y=" + to_string(dxy) + ", y.x=" + to_string(dyx));
	r.result = Json{{"courant_bracket", section_to_json(xy, a.vars)},
	                {"dorfman_x_y", section_to_json(dxy, a.vars)},
	                {"dorfman_y_x", section_to_json(dyx, a.vars)},
	                {"pairing", pairing(x, y).to_string(a.vars)}};
}

void courant_axioms(const Options &o, Report &r)
{
	std::vector<Section> supplied;
	for (const auto &path : o.sections)
	{
		ParsedSection p = parse_section(read_file(path));
		if (p.vars.size() != o.vars)
			throw SemanticError(path + ": section has " + std::to_string(p.vars.size()) + " variables, --vars is " +
			                    std::to_string(o.vars));
		supplied.push_back(p.section);
	}
	for (auto &c : axiom_suite(o.vars, supplied, {}, o.seed, o.samples))
		r.checks.push_back(std::move(c));
	for (auto &c : dorfman_checks(o.vars, supplied, o.seed, o.samples))
		r.checks.push_back(std::move(c));
	r.result = Json{{"vars", o.vars}, {"samples", o.samples}, {"seed", o.seed}};
}

void courant_graph(const Options &o, Report &r)
{
	GraphClosure g;
	std::string kind;
	if (!o.bivector.empty())
	{
		g = poisson_graph_closure(parse_skew<BivectorTag>(read_file(o.bivector)), {}, o.seed, o.samples);
		kind = "poisson";
	}
	else
	{
		g = twoform_graph_closure(parse_skew<TwoFormTag>(read_file(o.two_form)), {}, o.seed, o.samples);
		kind = "two_form";
	}
	r.add("graph_closed", g.closed, g.witness);
	r.result = Json{{"kind", kind}, {"samples", o.samples}, {"seed", o.seed}};
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Exact computations with Leibniz algebras, envelopes, Lie-Yamaguti structures, loops and the "
	             "Courant bracket",
	             "leibniz-forge"};
	app.require_subcommand(1);
	app.fallthrough();
	Options o;
	app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
	app.add_flag("--timing", o.timing, "Include wall-clock time in the report");

	std::string command;
	std::function<void(Report &)> action;
	auto bind = [&](CLI::App *sub, std::string name, std::function<void(Report &)> fn) {
		sub->callback([&command, &action, name = std::move(name), fn = std::move(fn)] {
			command = name;
			action = fn;
		});
	};
	auto add_seed = [&](CLI::App *sub) {
		sub->add_option("--seed", o.seed, "Seed for sampled inputs");
		sub->add_option("--samples", o.samples, "Number of sampled inputs");
	};

	auto *algebra = app.add_subcommand("algebra", "Structure-constant algebras")->require_subcommand(1);
	auto *algebra_check_cmd = algebra->add_subcommand("check", "Leibniz/Lie identities and derived data");
	algebra_check_cmd->add_option("file", o.file, "Algebra JSON")->required();
	bind(algebra_check_cmd, "algebra check", [&](Report &r) { algebra_check(o, r); });

	auto *envelope = app.add_subcommand("envelope", "Enveloping Lie algebras")->require_subcommand(1);
	for (bool verify : {false, true})
	{
		auto *sub = envelope->add_subcommand(verify ? "verify" : "build",
		                                     verify ? "Check every envelope invariant" : "Emit (g, h, f)");
		sub->add_option("file", o.file, "Algebra JSON")->required();
		sub->add_option("--ideal", o.ideal, "squares | kernel | subspace JSON file");
		bind(sub, verify ? "envelope verify" : "envelope build", [&, verify](Report &r) { envelope_cmd(o, r, verify); });
	}

	auto *ly = app.add_subcommand("ly", "Lie-Yamaguti algebras")->require_subcommand(1);
	auto *ly_check_cmd = ly->add_subcommand("check", "Axioms LY1-LY6 and the enveloping Lie algebra");
	auto *ly_file = ly_check_cmd->add_option("file", o.file, "Lie-Yamaguti JSON");
	auto *ly_from = ly_check_cmd->add_option("--from-leibniz", o.from_leibniz, "Derive the structure of a Leibniz algebra");
	ly_file->excludes(ly_from);
	ly_check_cmd->require_option(1, 1);
	bind(ly_check_cmd, "ly check", [&](Report &r) { ly_check(o, r); });

	auto *loop = app.add_subcommand("loop", "The left loops x <>_s y")->require_subcommand(1);
	for (bool verify : {false, true})
	{
		auto *sub = loop->add_subcommand(verify ? "verify" : "eval",
		                                 verify ? "Loop axioms on sampled inputs" : "Evaluate at given points");
		sub->add_option("--algebra", o.algebra, "Algebra JSON")->required();
		sub->add_option("--s", o.s, "Exact rational parameter s");
		auto *fl = sub->add_flag("--float", o.use_float, "Floating-point exponentials");
		auto *ex = sub->add_flag("--exact", o.use_exact, "Exact exponentials (default)");
		fl->excludes(ex);
		sub->add_option("--tol", o.tol, "Absolute tolerance in float mode")->needs(fl);
		if (verify)
		{
			add_seed(sub);
			bind(sub, "loop verify", [&](Report &r) { loop_verify(o, r); });
		}
		else
		{
			sub->add_option("--x", o.x, "Comma-separated coordinates")->required();
			sub->add_option("--y", o.y, "Comma-separated coordinates")->required();
			bind(sub, "loop eval", [&](Report &r) { loop_eval(o, r); });
		}
	}

	auto *omni_cmd = app.add_subcommand("omni", "gl(d) x Q^d in both flavours");
	omni_cmd->add_option("--dim", o.dim, "d")->required()->check(CLI::Range(1, 6));
	bind(omni_cmd, "omni", [&](Report &r) { omni(o, r); });

	auto *courant = app.add_subcommand("courant", "Standard Courant algebroid on Q^n")->require_subcommand(1);
	auto *bracket = courant->add_subcommand("bracket", "Courant bracket and Dorfman products of two sections");
	bracket->add_option("files", o.files, "Two section JSON files")->required()->expected(2);
	bind(bracket, "courant bracket", [&](Report &r) { courant_bracket_cmd(o, r); });
	auto *axioms = courant->add_subcommand("axioms", "Courant algebroid axioms and Dorfman identities");
	axioms->add_option("--vars", o.vars, "Number of coordinates")->check(CLI::Range(1, 3));
	axioms->add_option("--section", o.sections, "Extra section JSON files");
	add_seed(axioms);
	bind(axioms, "courant axioms", [&](Report &r) { courant_axioms(o, r); });
	auto *graph = courant->add_subcommand("graph", "Closure of a bivector or 2-form graph");
	auto *structure = graph->add_option_group("structure");
	structure->add_option("--bivector", o.bivector, "Bivector JSON");
	structure->add_option("--two-form", o.two_form, "2-form JSON");
	structure->require_option(1);
	add_seed(graph);
	bind(graph, "courant graph", [&](Report &r) { courant_graph(o, r); });

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError &e)
	{
		return app.exit(e, out, err);
	}

	Report report;
	report.command = command;
	auto start = std::chrono::steady_clock::now();
	try
	{
		action(report);
	}
	catch (const std::exception &e)
	{
		report.add("input", false, e.what());
	}
	if (report.checks.empty())
		report.add("input", false, "no checks ran");
	if (o.timing)
		report.timing_ms =
		    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

	out << (o.format == "json" ? render_json(report) : render_text(report));
	return report.pass() ? 0 : 1;
}

} // namespace leibniz::cli
