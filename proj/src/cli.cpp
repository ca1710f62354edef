#include "cohring/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "cohring/bench.hpp"
#include "cohring/cohomology.hpp"
#include "cohring/ideal.hpp"
#include "cohring/parse.hpp"

namespace cohring {

namespace {

using Json = nlohmann::ordered_json;

// Malformed flag values that CLI11 cannot see (ring names, space names, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string text;
  Json result;
};

struct Flags {
  std::string ring = "Z";
  std::string vars;
  std::string ideal;
  std::string coeff = "Z";
  bool json = false;
  std::optional<std::uint64_t> degree_bound;
};

struct Context {
  Flags flags;
  Json inputs = Json::object();

  Ring ring() {
    auto d = RingDescriptor::parse(flags.ring);
    if (!d) throw UsageError("unrecognized ring '" + flags.ring + "'");
    inputs["ring"] = d->to_string();
    return ring_make(*d);
  }

  RingDescriptor coeff() {
    auto d = RingDescriptor::parse(flags.coeff);
    if (!d) throw UsageError("unrecognized coefficient ring '" + flags.coeff + "'");
    inputs["coeff"] = d->to_string();
    return *d;
  }

  std::vector<std::string> vars(const std::vector<std::string>& texts) {
    std::vector<std::string> v = flags.vars.empty() ? infer_vars(texts) : parse_var_list(flags.vars);
    inputs["vars"] = v;
    return v;
  }

  SpaceId space(const std::string& text, const char* key) {
    auto s = SpaceId::parse(text);
    if (!s) throw UsageError("unknown space '" + text + "'");
    inputs[key] = s->to_string();
    return *s;
  }

  std::vector<MultiPoly> ideal(const Ring& ring, const std::vector<std::string>& vars) {
    if (flags.ideal.empty()) throw UsageError("--ideal is required");
    inputs["ideal"] = flags.ideal;
    return parse_ideal(flags.ideal, ring, vars);
  }
};

Output poly_output(const MultiPoly& p, const std::vector<std::string>& vars) {
  std::string s = render(p, vars);
  return {s, s};
}

UniRepr parse_repr(const std::string& text) {
  if (text == "sparse") return UniRepr::Sparse;
  if (text == "dense") return UniRepr::Dense;
  if (text == "normal") return UniRepr::Normal;
  throw UsageError("unknown representation '" + text + "'");
}

// Multiplies through a univariate representation and converts back.
MultiPoly mul_via(const MultiPoly& a, const MultiPoly& b, UniRepr repr) {
  if (repr == UniRepr::Sparse && a.monoid().arity != 1) return mul(a, b);
  UniPoly x = convert(to_uni(a), repr);
  UniPoly y = convert(to_uni(b), repr);
  UniPoly p = std::visit(
      [&](const auto& u) -> UniPoly {
        using T = std::decay_t<decltype(u)>;
        return mul(u, std::get<T>(y));
      },
      x);
  return to_multi(std::get<UniSparse>(convert(p, UniRepr::Sparse)));
}

MultiPoly add_via(const MultiPoly& a, const MultiPoly& b, UniRepr repr) {
  if (repr == UniRepr::Sparse) return dsum_add(a, b);
  UniPoly x = convert(to_uni(a), repr);
  UniPoly y = convert(to_uni(b), repr);
  UniPoly s = std::visit(
      [&](const auto& u) -> UniPoly {
        using T = std::decay_t<decltype(u)>;
        if constexpr (std::is_same_v<T, UniSparse>) return dsum_add(u, std::get<T>(y));
        else return add(u, std::get<T>(y));
      },
      x);
  return to_multi(std::get<UniSparse>(convert(s, UniRepr::Sparse)));
}

Output describe_ring(const CatalogEntry& e) {
  const auto& ring = *e.ring;
  std::ostringstream text;
  Json result = Json::object();
  result["space"] = e.space.to_string();
  result["coeff"] = e.coeff.to_string();
  result["presentation"] = e.quotient.text;
  std::string degrees;
  for (std::size_t v = 0; v < e.quotient.vars.size(); ++v) {
    if (v) degrees += ", ";
    degrees += "deg " + e.quotient.vars[v] + " = " + std::to_string(e.quotient.degrees[v]);
  }
  text << "H*(" << e.space.to_string() << "; " << e.coeff.to_string() << ") = " << e.quotient.text << ", "
       << degrees << "\n";

  Json groups = Json::array();
  for (std::uint64_t n = 0; n <= ring.top_degree(); ++n) {
    const auto& g = ring.group(n);
    if (g.is_zero()) continue;
    std::string names;
    for (std::size_t i = 0; i < g.names.size(); ++i) names += (i ? ", " : "") + g.names[i];
    text << "H^" << n << " = " << g.to_string() << "  <" << names << ">\n";
    groups.push_back({{"degree", n}, {"group", g.to_string()}, {"generators", g.names}});
  }
  result["groups"] = groups;

  Json products = Json::array();
  for (std::uint64_t n = 1; n <= ring.top_degree(); ++n) {
    for (std::uint64_t m = 1; n + m <= ring.top_degree(); ++m) {
      for (std::size_t i = 0; i < ring.group(n).rank(); ++i) {
        for (std::size_t j = 0; j < ring.group(m).rank(); ++j) {
          GradedElem p = cup(graded_gen(e.ring, n, i), graded_gen(e.ring, m, j));
          if (p.is_zero()) continue;
          std::string line = ring.group(n).names[i] + " * " + ring.group(m).names[j] + " = " + render(p);
          text << line << "\n";
          products.push_back(line);
        }
      }
    }
  }
  result["products"] = products;

  IsoReport report = verify_iso(e);
  result["psi_verified"] = report.passed;
  if (report.passed) {
    text << "psi verified: " << report.elements_checked << " elements, " << report.products_checked << " products"
         << (report.exhaustive ? " (exhaustive)" : "") << "\n";
  } else {
    for (const auto& f : report.failures) text << "psi check failed: " << f << "\n";
  }
  std::string s = text.str();
  s.pop_back();
  return {s, result};
}

Output run_groebner(Context& ctx, bool complete) {
  Ring ring = ctx.ring();
  auto vars = ctx.vars({ctx.flags.ideal});
  auto gens = ctx.ideal(ring, vars);
  RewriteBasis basis(std::move(gens), ReductionMode::Field);
  Json result = Json::object();
  std::string text;
  auto witness = find_nonreducing_spair(basis);
  result["groebner"] = !witness.has_value();
  if (witness) {
    std::string r = render(witness->remainder, vars);
    result["witness"] = {{"pair", {witness->i + 1, witness->j + 1}}, {"remainder", r}};
    text = "false\nS(g" + std::to_string(witness->i + 1) + ", g" + std::to_string(witness->j + 1) + ") reduces to " + r;
  } else {
    result["witness"] = nullptr;
    text = "true";
  }
  if (complete) {
    std::uint64_t bound = ctx.flags.degree_bound.value_or(kDefaultDegreeBound);
    ctx.inputs["degree_bound"] = bound;
    RewriteBasis done = groebner_complete(basis, bound);
    Json list = Json::array();
    std::string joined;
    for (const auto& g : done.generators()) {
      list.push_back(render(g, vars));
      joined += (joined.empty() ? "" : ", ") + render(g, vars);
    }
    result["completed"] = list;
    text += "\ncompleted: (" + joined + ")";
  }
  return {text, result};
}

std::vector<std::uint64_t> parse_sizes(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto v = Integer::parse(item);
    if (!v || v->sign() < 0 || !v->fits_int64()) throw UsageError("bad size '" + item + "'");
    out.push_back(static_cast<std::uint64_t>(v->to_int64()));
  }
  return out;
}

Json bench_json(const BenchReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"workload", to_string(r.workload)},
                    {"size", r.size},
                    {"repr", to_string(r.repr)},
                    {"median_seconds", r.median_seconds},
                    {"multiplications", r.multiplications},
                    {"positions", r.positions},
                    {"result_terms", r.result_terms}});
  }
  return rows;
}

std::string first_word(const std::vector<std::string>& args) {
  for (const auto& a : args) {
    if (!a.empty() && a[0] != '-') return a;
  }
  return "";
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  Context ctx;
  Flags& f = ctx.flags;
  std::string command;
  bool json_requested = std::find(args.begin(), args.end(), "--json") != args.end();

  CLI::App app{"Polynomial and cohomology ring calculator", "cohring"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--ring", f.ring, "coefficient ring: Z, Z2, Z/<n>");
  app.add_option("--vars", f.vars, "comma-separated variable names, in order");
  app.add_option("--ideal", f.ideal, "ideal generators, e.g. \"(X^3, Y^2)\"");
  app.add_option("--coeff", f.coeff, "cohomology coefficients: Z or Z2");
  app.add_flag("--json", f.json, "emit one JSON object");
  app.add_option("--degree-bound", f.degree_bound, "degree bound for Groebner completion");

  std::string e1, e2, at, repr_text = "sparse", space1, space2;
  std::uint64_t n = 0, m = 0;
  bool complete = false;
  std::string sizes_text, reprs_text, workload_text;
  BenchConfig bench;

  auto* normalize = app.add_subcommand("normalize", "print the canonical form of a polynomial");
  normalize->add_option("expr", e1)->required();
  auto* add_cmd = app.add_subcommand("add", "add two polynomials");
  auto* mul_cmd = app.add_subcommand("mul", "multiply two polynomials");
  for (auto* c : {add_cmd, mul_cmd}) {
    c->add_option("lhs", e1)->required();
    c->add_option("rhs", e2)->required();
    c->add_option("--repr", repr_text, "univariate representation: sparse, dense, normal");
  }
  auto* eval = app.add_subcommand("eval", "evaluate a polynomial");
  eval->add_option("expr", e1)->required();
  eval->add_option("--at", at, "comma-separated values, one per variable")->required();
  auto* reduce_cmd = app.add_subcommand("reduce", "normal form modulo an ideal");
  reduce_cmd->add_option("expr", e1)->required();
  auto* groebner = app.add_subcommand("groebner-check", "Buchberger's criterion for the --ideal generators");
  groebner->add_flag("--complete", complete, "also run Buchberger completion");
  auto* coh_ring = app.add_subcommand("cohomology-ring", "describe a cohomology ring");
  coh_ring->add_option("space", space1)->required();
  auto* coh_group = app.add_subcommand("cohomology-group", "one cohomology group");
  coh_group->add_option("space", space1)->required();
  coh_group->add_option("n", n)->required();
  auto* coh_cup = app.add_subcommand("cohomology-cup-trivial", "whether H^n x H^m -> H^(n+m) vanishes");
  coh_cup->add_option("space", space1)->required();
  coh_cup->add_option("n", n)->required();
  coh_cup->add_option("m", m)->required();
  auto* coh_dist = app.add_subcommand("cohomology-distinguish", "try to tell two spaces apart");
  coh_dist->add_option("first", space1)->required();
  coh_dist->add_option("second", space2)->required();
  auto* bench_cmd = app.add_subcommand("bench", "time multiplication across representations");
  bench_cmd->add_option("--sizes", sizes_text, "comma-separated degrees");
  bench_cmd->add_option("--terms", bench.terms, "terms per operand in the sparse workload");
  bench_cmd->add_option("--trials", bench.trials, "timed runs per case");
  bench_cmd->add_option("--reprs", reprs_text, "comma-separated representations");
  bench_cmd->add_option("--workload", workload_text, "sparse, dense or both");
  bench_cmd->add_option("--seed", bench.seed, "random seed");

  CommandResult res;
  Output output;
  std::string diagnostic;
  auto finish = [&](int code) {
    res.exit_code = code;
    if (json_requested) {
      Json doc;
      doc["command"] = command.empty() ? Json(nullptr) : Json(command);
      doc["inputs"] = ctx.inputs;
      doc["result"] = code == 0 ? output.result : Json(nullptr);
      doc["diagnostics"] = diagnostic.empty() ? Json::array() : Json::array({diagnostic});
      res.out = doc.dump() + "\n";
    } else if (code == 0) {
      res.out = output.text + "\n";
    } else {
      res.err = "error: " + diagnostic + "\n";
    }
    return res;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    command = first_word(args);
    diagnostic = e.what();
    return finish(2);
  }

  try {
    const CLI::App* sub = app.get_subcommands().front();
    command = sub->get_name();
    if (sub == normalize) {
      Ring ring = ctx.ring();
      auto vars = ctx.vars({e1});
      ctx.inputs["expr"] = e1;
      output = poly_output(parse_poly(e1, ring, vars), vars);
    } else if (sub == add_cmd || sub == mul_cmd) {
      Ring ring = ctx.ring();
      auto vars = ctx.vars({e1, e2});
      UniRepr repr = parse_repr(repr_text);
      ctx.inputs["lhs"] = e1;
      ctx.inputs["rhs"] = e2;
      ctx.inputs["repr"] = repr_text;
      MultiPoly a = parse_poly(e1, ring, vars);
      MultiPoly b = parse_poly(e2, ring, vars);
      output = poly_output(sub == add_cmd ? add_via(a, b, repr) : mul_via(a, b, repr), vars);
    } else if (sub == eval) {
      Ring ring = ctx.ring();
      auto vars = ctx.vars({e1});
      ctx.inputs["expr"] = e1;
      ctx.inputs["at"] = at;
      std::vector<RingElem> values;
      std::stringstream ss(at);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::string_view v = item;
        bool negative = !v.empty() && v.front() == '-';
        if (negative) v.remove_prefix(1);
        auto x = Integer::parse(v);
        if (!x) throw UsageError("bad value '" + item + "'");
        values.push_back(negative ? -*x : *x);
      }
      RingElem r = multi_eval(parse_poly(e1, ring, vars), values);
      output = {r.to_string(), r.to_string()};
    } else if (sub == reduce_cmd) {
      Ring ring = ctx.ring();
      auto vars = ctx.vars({e1, f.ideal});
      ctx.inputs["expr"] = e1;
      auto gens = ctx.ideal(ring, vars);
      MultiPoly p = parse_poly(e1, ring, vars);
      output = poly_output(reduce(p, RewriteBasis::make(std::move(gens))), vars);
    } else if (sub == groebner) {
      output = run_groebner(ctx, complete);
    } else if (sub == coh_ring) {
      SpaceId s = ctx.space(space1, "space");
      output = describe_ring(catalog_get(s, ctx.coeff()));
    } else if (sub == coh_group) {
      SpaceId s = ctx.space(space1, "space");
      ctx.inputs["n"] = n;
      std::string g = h_group(s, ctx.coeff(), n).to_string();
      output = {g, g};
    } else if (sub == coh_cup) {
      SpaceId s = ctx.space(space1, "space");
      ctx.inputs["n"] = n;
      ctx.inputs["m"] = m;
      bool t = cup_trivial(catalog_get(s, ctx.coeff()), n, m);
      output = {t ? "true" : "false", t};
    } else if (sub == coh_dist) {
      SpaceId a = ctx.space(space1, "first");
      SpaceId b = ctx.space(space2, "second");
      Verdict v = distinguish(a, b, ctx.coeff());
      output = {v.to_string(), v.to_string()};
    } else if (sub == bench_cmd) {
      if (!sizes_text.empty()) bench.sizes = parse_sizes(sizes_text);
      if (!reprs_text.empty()) {
        bench.reprs.clear();
        std::stringstream ss(reprs_text);
        std::string item;
        while (std::getline(ss, item, ',')) bench.reprs.push_back(parse_repr(item));
      }
      if (workload_text == "sparse") bench.workloads = {Workload::Sparse};
      else if (workload_text == "dense") bench.workloads = {Workload::Dense};
      else if (!workload_text.empty() && workload_text != "both") throw UsageError("unknown workload '" + workload_text + "'");
      ctx.inputs["sizes"] = bench.sizes;
      ctx.inputs["trials"] = bench.trials;
      ctx.inputs["terms"] = bench.terms;
      BenchReport report = run_bench(bench);
      std::string table = render(report);
      table.pop_back();
      output = {table, bench_json(report)};
    }
    return finish(0);
  } catch (const UsageError& e) {
    diagnostic = e.what();
    return finish(2);
  } catch (const Error& e) {
    diagnostic = e.what();
    return finish(1);
  } catch (const std::exception& e) {
    diagnostic = std::string("internal error: ") + e.what();
    return finish(1);
  }
}

}  // namespace cohring
