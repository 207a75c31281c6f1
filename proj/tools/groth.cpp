// Command-line front end: enum, poly, expand, biject, verify.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "groth/bijections.hpp"
#include "groth/enumerate.hpp"
#include "groth/json_io.hpp"
#include "groth/series.hpp"
#include "groth/symfunc.hpp"
#include "groth/verify.hpp"

using namespace groth;

namespace {

struct Globals {
  std::string format = "text";
  int jobs = 0;
  unsigned seed = 20240601;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw StructuralError("invalid JSON in " + path + ": " + e.what());
  }
}

json trace_json(const Trace& trace) {
  json a = json::array();
  for (const auto& s : trace) {
    json step{{"note", s.note}, {"diagram", diagram(s.tableau, s.mark_row, s.mark_col)}, {"tableau", to_json(s.tableau)}};
    if (s.mark_row) step["mark"] = json::array({s.mark_row, s.mark_col});
    a.push_back(step);
  }
  return a;
}

void print_trace_text(const Trace& trace) {
  for (const auto& s : trace) std::cout << diagram(s.tableau, s.mark_row, s.mark_col) << "    " << s.note << "\n";
}

SkewShape shape_from(const std::string& shape, const std::string& outer, const std::string& inner) {
  if (!shape.empty()) return SkewShape(parse_partition(shape));
  if (outer.empty()) throw StructuralError("give --shape or --outer");
  return SkewShape(parse_partition(outer), inner.empty() ? Partition{} : parse_partition(inner));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Refined Grothendieck polynomials: tableau enumeration, series, Schur expansion, bijections, "
               "identity verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--jobs", g.jobs, "worker threads (default: GROTHLIB_JOBS or all cores)");
  app.add_option("--seed", g.seed, "seed for randomized sweeps (all bundled sweeps are exhaustive)");

  // enum
  auto* en = app.add_subcommand("enum", "enumerate a tableau family");
  std::string family, shape, outer, inner;
  int max_value = 1, extra = 0;
  en->add_option("--family", family, "OT, UT, PT, OFT, UFT or PFT")->required();
  en->add_option("--shape", shape, "straight shape, e.g. 3,2 (- for empty)");
  en->add_option("--outer", outer, "outer shape");
  en->add_option("--inner", inner, "inner shape");
  en->add_option("--max", max_value, "largest letter value N");
  en->add_option("--extra", extra, "extra entry budget B (OT)");

  // poly
  auto* po = app.add_subcommand("poly", "generating series");
  std::string variant, kind = "refined", pshape;
  int nvars = 1, nx = -1, ny = -1;
  std::optional<int> degree;
  bool nonrefined = false;
  po->add_option("--variant", variant, "1A, 1B, 2A or 2B");
  po->add_option("--kind", kind, "refined, groth, dual or pt")->check(CLI::IsMember({"refined", "groth", "dual", "pt"}));
  po->add_option("--shape", pshape, "partition")->required();
  po->add_option("--nvars", nvars, "variables per alphabet");
  po->add_option("--nx", nx, "x variables (groth/dual)");
  po->add_option("--ny", ny, "y variables (groth/dual)");
  po->add_option("--degree", degree, "x,y degree bound");
  po->add_flag("--nonrefined", nonrefined, "substitute z=1");

  // expand
  auto* ex = app.add_subcommand("expand", "Schur expansion");
  std::string evariant, eshape, flags;
  int envars = 0, cap = -1;
  std::optional<int> edegree;
  bool conjugated = false;
  ex->add_option("--variant", evariant, "1A, 1B, 2A or 2B");
  ex->add_option("--shape", eshape, "partition")->required();
  ex->add_option("--nvars", envars, "variables (default: the degree bound, or |shape| for 2A/2B)");
  ex->add_option("--degree", edegree, "degree bound for 1A/1B (default |shape|+2)");
  ex->add_option("--flags", flags, "expand via flagged tableaux: G or Gdual")->check(CLI::IsMember({"G", "Gdual"}));
  ex->add_flag("--conjugated", conjugated, "reindex rho -> rho' (flag expansion)");
  ex->add_option("--cap", cap, "size cap for the G flag expansion (default |shape|+2)");

  // biject
  auto* bi = app.add_subcommand("biject", "apply a bijection to a tableau read from JSON");
  std::string map_name, input, from_order, to_order;
  bool want_trace = false;
  bi->add_option("map", map_name, "rsk, rsk-inverse, jdt, jdt-inverse, swap, reorder, iota, split, superimpose")
      ->required()
      ->check(CLI::IsMember(
          {"rsk", "rsk-inverse", "jdt", "jdt-inverse", "swap", "reorder", "iota", "split", "superimpose"}));
  bi->add_option("--input", input, "JSON file: a tableau, a {\"p\",\"q\"} pair, or an object with an \"input\" or \"image\" member")->required();
  bi->add_option("--from", from_order, "source order, e.g. 1'<1<2'<2");
  bi->add_option("--to", to_order, "target order");
  bi->add_flag("--trace", want_trace, "emit intermediate tableaux");

  // verify
  auto* ve = app.add_subcommand("verify", "exhaustively check an identity");
  std::string identity;
  VerifyParams vp;
  ve->add_option("identity", identity, "identity name")->required()->check(CLI::IsMember(identity_names()));
  ve->add_option("--size", vp.size, "only shapes of this size");
  ve->add_option("--max-size", vp.max_size, "all shapes up to this size");
  ve->add_option("--max", vp.max_value, "largest letter value");
  ve->add_option("--extra", vp.extra, "extra entry budget");
  ve->add_option("--swaps", vp.max_swaps, "order distance bound (lemma-ordering)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool as_json = g.format == "json";
  try {
    if (*en) {
      SkewShape sh = shape_from(shape, outer, inner);
      long long count = 0;
      for_each_tableau(parse_family(family), sh, EnumBounds{max_value, extra}, [&](const Tableau& t) {
        ++count;
        if (as_json)
          std::cout << to_json(t).dump() << "\n";
        else
          std::cout << diagram(t) << "\n";
      });
      if (as_json)
        std::cout << json{{"count", count}}.dump() << "\n";
      else
        std::cout << "count: " << count << "\n";
      return 0;
    }

    if (*po) {
      Partition lambda = parse_partition(pshape);
      Series s;
      if (kind == "refined") {
        if (variant.empty()) throw StructuralError("--variant is required for refined series");
        Variant v = parse_variant(variant);
        if ((v == Variant::V1A || v == Variant::V1B) && !degree) throw StructuralError("--degree is required for 1A/1B");
        s = refined(v, lambda, nvars, degree, nonrefined);
      } else if (kind == "pt") {
        s = pt_generating(lambda, nvars);
      } else {
        Truncation t{nx < 0 ? nvars : nx, ny < 0 ? nvars : ny, 0, degree};
        if (kind == "groth" && !degree) throw StructuralError("--degree is required for groth");
        s = kind == "groth" ? groth::groth(lambda, t) : groth::groth_dual(lambda, t);
        if (nonrefined) s = s.set_z_one();
      }
      if (as_json)
        std::cout << s.to_json().dump() << "\n";
      else
        std::cout << (g.format == "latex" ? s.to_latex() : s.to_text()) << "\n";
      return 0;
    }

    if (*ex) {
      Partition lambda = parse_partition(eshape);
      SchurExpansion e;
      if (!flags.empty()) {
        e = schur_expansion_via_flags(lambda, flags == "G" ? FlagSide::G : FlagSide::Gdual, conjugated,
                                      cap < 0 ? lambda.size() + 2 : cap);
      } else {
        if (evariant.empty()) throw StructuralError("give --variant or --flags");
        Variant v = parse_variant(evariant);
        std::optional<int> d = edegree;
        if (!d && (v == Variant::V1A || v == Variant::V1B)) d = lambda.size() + 2;
        int n = envars > 0 ? envars : std::max(1, d ? *d : lambda.size());
        e = expand_schur(refined(v, lambda, n, d));
      }
      if (as_json)
        std::cout << e.to_json().dump() << "\n";
      else
        std::cout << e.to_text() << "\n";
      return 0;
    }

    if (*bi) {
      json in = read_json_file(input);
      if (in.is_object() && in.contains("input"))
        in = in["input"];
      else if (in.is_object() && in.contains("image"))
        in = in["image"];
      json out;
      Trace trace;
      Trace* tp = want_trace ? &trace : nullptr;
      if (map_name == "rsk") {
        auto pr = rsk_forward(tableau_from_json(in), tp);
        out = json{{"p", to_json(pr.p)}, {"q", to_json(pr.q)}};
      } else if (map_name == "rsk-inverse") {
        RskPair pr{tableau_from_json(in.at("p")), tableau_from_json(in.at("q"))};
        out = json{{"image", to_json(rsk_backward(pr, pr.q.shape().inner(), tp))}};
      } else if (map_name == "jdt") {
        auto pr = jdt_forward(tableau_from_json(in), tp);
        out = json{{"p", to_json(pr.p)}, {"q", to_json(pr.q)}};
      } else if (map_name == "jdt-inverse") {
        JdtPair pr{tableau_from_json(in.at("p")), tableau_from_json(in.at("q"))};
        out = json{{"image", to_json(jdt_backward(pr, pr.q.shape().outer(), tp))}};
      } else if (map_name == "swap" || map_name == "reorder") {
        if (from_order.empty() || to_order.empty()) throw StructuralError("--from and --to orders are required");
        Tableau t = tableau_from_json(in);
        TotalOrder a = parse_order(from_order), b = parse_order(to_order);
        Tableau img = t;
        if (map_name == "reorder") {
          img = reorder(t, a, b);
        } else {
          auto path = bubble_path(a, b);
          if (path.size() != 1) throw DomainError("swap: orders must differ by one adjacent exchange");
          img = a.sequence()[static_cast<std::size_t>(path[0])].primed ? order_swap_down(t, a, b)
                                                                       : order_swap_up(t, a, b);
        }
        if (tp) {
          tp->push_back(TraceStep{"input", t});
          tp->push_back(TraceStep{"result", img});
        }
        out = json{{"image", to_json(img)}};
      } else if (map_name == "iota") {
        out = json{{"image", to_json(iota(tableau_from_json(in), tp))}};
      } else if (map_name == "split") {
        auto [p, q] = split(tableau_from_json(in));
        out = json{{"p", to_json(p)}, {"q", to_json(q)}};
      } else {
        out = json{{"image", to_json(superimpose(tableau_from_json(in.at("p")), tableau_from_json(in.at("q"))))}};
      }
      if (as_json) {
        if (want_trace) out["trace"] = trace_json(trace);
        std::cout << out.dump() << "\n";
      } else {
        if (want_trace) print_trace_text(trace);
        for (auto it = out.begin(); it != out.end(); ++it)
          std::cout << it.key() << ": " << diagram(tableau_from_json(it.value())) << "\n";
      }
      return 0;
    }

    if (*ve) {
      vp.jobs = g.jobs;
      VerifyReport r = verify(identity, vp);
      if (as_json) {
        json j = r.to_json();
        j["seed"] = g.seed;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << r.to_text() << "\n";
      }
      return r.passed() ? 0 : 1;
    }
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
