#include "isg/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "isg/algebra.hpp"
#include "isg/axioms.hpp"
#include "isg/bridge.hpp"
#include "isg/tables.hpp"
#include "isg/zoo.hpp"

namespace isg {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(std::string const& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  std::ifstream file(path);
  if (!file) {
    throw UsageError("cannot open '" + path + "'");
  }
  std::ostringstream os;
  os << file.rdbuf();
  return os.str();
}

char const* flag_text(Flag f) {
  switch (f) {
    case Flag::True:
      return "true";
    case Flag::False:
      return "false";
    default:
      return "n/a";
  }
}

json flag_json(Flag f) {
  switch (f) {
    case Flag::True:
      return true;
    case Flag::False:
      return false;
    default:
      return nullptr;
  }
}

json witness_json(std::vector<std::string> const& names, Witness const& w) {
  json arr = json::array();
  for (ElementId e : w.elements) {
    arr.push_back(names[e]);
  }
  return arr;
}

// one "key=value[ witness=a,b,c]" line, or a json field pair
struct Report {
  bool          as_json;
  bool          quiet;
  std::ostream& out;
  json          j = json::object();
  std::string   text;

  void flag(std::string const& key, FlagResult const& f,
            std::vector<std::string> const& names) {
    if (as_json) {
      j[key] = flag_json(f.value);
      if (f.witness) {
        j[key + "_witness"] = witness_json(names, *f.witness);
      }
    } else {
      text += key;
      text += '=';
      text += flag_text(f.value);
      if (f.witness) {
        text += " witness=" + witness_names(names, *f.witness);
      }
      text += '\n';
    }
  }

  void value(std::string const& key, json const& v) {
    if (as_json) {
      j[key] = v;
    } else if (v.is_null()) {
      text += key + "=none\n";
    } else if (v.is_boolean()) {
      text += key + "=" + (v.get<bool>() ? "true" : "false") + "\n";
    } else if (v.is_string()) {
      text += key + "=" + v.get<std::string>() + "\n";
    } else {
      text += key + "=" + v.dump() + "\n";
    }
  }

  void emit() {
    if (quiet) {
      return;
    }
    if (as_json) {
      out << j.dump() << '\n';
    } else {
      out << text;
    }
  }
};

int do_check(std::string const& text, bool as_json, bool quiet,
             std::ostream& out) {
  Structure parsed = parse_structure(text);
  Report    report{as_json, quiet, out};

  if (auto const* m = std::get_if<FiniteMagma>(&parsed)) {
    auto cls = classify(*m);
    report.flag("associative", cls.is_associative, m->names);
    report.flag("regular", cls.is_regular, m->names);
    report.flag("unique_inverses", cls.has_unique_inverses, m->names);
    report.flag("idempotents_commute", cls.idempotents_commute, m->names);
    report.value("zero",
                 cls.zero ? json(m->names[*cls.zero]) : json(nullptr));
    report.value("unit",
                 cls.unit ? json(m->names[*cls.unit]) : json(nullptr));
    report.flag("nonzero_idempotents_orthogonal",
                cls.nonzero_idempotents_orthogonal, m->names);
    bool ok = cls.is_associative.value == Flag::True
              && cls.has_unique_inverses.value == Flag::True;
    if (cls.declared_zero_valid) {
      report.value("declared_zero_valid", json(*cls.declared_zero_valid));
      ok = ok && *cls.declared_zero_valid;
    }
    if (cls.declared_unit_valid) {
      report.value("declared_unit_valid", json(*cls.declared_unit_valid));
      ok = ok && *cls.declared_unit_valid;
    }
    report.emit();
    return ok ? 0 : 1;
  }

  auto const& g = std::get<FinitePartialMagma>(parsed);
  auto        rep = check_groupoid_axioms(g);
  report.flag("axiom_associativity", rep.associativity, g.names);
  report.flag("axiom_inverses_composable", rep.inverses_composable, g.names);
  report.flag("axiom_cancellation", rep.cancellation, g.names);
  report.flag("composability_criterion", rep.composability_criterion,
              g.names);
  if (rep.ok()) {
    auto        valid = FiniteGroupoid::validated(g);
    json        units = json::array();
    std::string names;
    for (ElementId u : valid.units()) {
      units.push_back(g.names[u]);
      if (!names.empty()) {
        names += ' ';
      }
      names += g.names[u];
    }
    if (as_json) {
      report.value("units", units);
    } else {
      report.value("units", names);
    }
  }
  report.emit();
  return rep.ok() ? 0 : 1;
}

int do_to_semigroup(std::string const& text, std::ostream& out) {
  Structure parsed = parse_structure(text);
  auto const* g = std::get_if<FinitePartialMagma>(&parsed);
  if (g == nullptr) {
    throw UsageError(
        "to-semigroup expects a partial structure (inverse: header)");
  }
  auto s = to_semigroup(FiniteGroupoid::validated(*g));
  out << serialize_structure(s.carrier());
  return 0;
}

int do_to_groupoid(std::string const& text, std::ostream& out) {
  Structure parsed = parse_structure(text);
  auto const* m = std::get_if<FiniteMagma>(&parsed);
  if (m == nullptr) {
    throw UsageError("to-groupoid expects a total structure");
  }
  auto g = to_groupoid(FiniteInverseSemigroup::validated(*m));
  out << serialize_structure(g.carrier());
  return 0;
}

int do_roundtrip(std::string const& text, bool as_json, bool quiet,
                 std::ostream& out) {
  Structure parsed = parse_structure(text);
  Report    report{as_json, quiet, out};

  RoundtripReport rt;
  if (auto const* g = std::get_if<FinitePartialMagma>(&parsed)) {
    rt = roundtrip_groupoid(FiniteGroupoid::validated(*g));
    report.value("input", "groupoid");
    report.value("roundtrip", rt.identical ? "identity" : "mismatch");
  } else {
    auto const& m = std::get<FiniteMagma>(parsed);
    rt = roundtrip_semigroup(FiniteInverseSemigroup::validated(m));
    report.value("input", "semigroup");
    report.value("roundtrip",
                 rt.identical ? "identity_up_to_zero" : "mismatch");
  }
  if (!rt.identical) {
    report.value("detail", rt.detail);
  }
  report.emit();
  return rt.identical ? 0 : 1;
}

int do_vagner(unsigned order, std::string const& mode_name, unsigned workers,
              bool as_json, bool quiet, std::ostream& out) {
  EnumerationMode mode;
  if (mode_name == "exhaustive") {
    mode = EnumerationMode::Exhaustive;
  } else if (mode_name == "backtracking") {
    mode = EnumerationMode::Backtracking;
  } else {
    throw UsageError("unknown mode '" + mode_name + "'");
  }

  unsigned long total = 0, regular = 0, inverse = 0;
  bool          consistent = true;
  enumerate_semigroups(order, SemigroupFilter::All, mode, workers,
                       [&](FiniteMagma const& m) {
                         ++total;
                         if (!is_regular(m).ok) {
                           return;
                         }
                         ++regular;
                         auto v = check_vagner(m);
                         if (v.unique_inverses) {
                           ++inverse;
                         }
                         consistent = consistent && v.consistent();
                       });

  Report report{as_json, quiet, out};
  report.value("order", json(order));
  report.value("mode", mode_name);
  report.value("semigroups", json(total));
  report.value("regular", json(regular));
  report.value("inverse", json(inverse));
  report.value("vagner_consistent", json(consistent));
  report.emit();
  return consistent ? 0 : 1;
}

int do_gen(std::string const& kind, std::vector<std::string> const& params,
           std::istream& in, std::ostream& out) {
  auto numeric = [&](char const* what) -> unsigned {
    if (params.size() != 1) {
      throw UsageError(std::string("gen ") + what
                       + " expects exactly one numeric argument");
    }
    try {
      std::size_t pos = 0;
      unsigned long v = std::stoul(params[0], &pos);
      if (pos != params[0].size()) {
        throw std::invalid_argument(params[0]);
      }
      return static_cast<unsigned>(v);
    } catch (std::exception const&) {
      throw UsageError("invalid numeric argument '" + params[0] + "'");
    }
  };

  if (kind == "cyclic") {
    out << serialize_structure(cyclic_group(numeric("cyclic")).carrier());
  } else if (kind == "pair") {
    out << serialize_structure(pair_groupoid(numeric("pair")).carrier());
  } else if (kind == "sim") {
    out << serialize_structure(
        symmetric_inverse_monoid(numeric("sim")).carrier());
  } else if (kind == "union") {
    if (params.empty()) {
      throw UsageError("gen union expects at least one file");
    }
    std::vector<FiniteGroupoid> parts;
    for (auto const& path : params) {
      Structure parsed = parse_structure(read_input(path, in));
      auto const* g = std::get_if<FinitePartialMagma>(&parsed);
      if (g == nullptr) {
        throw UsageError("'" + path + "' is not a partial structure");
      }
      parts.push_back(FiniteGroupoid::validated(*g));
    }
    out << serialize_structure(disjoint_union(parts).carrier());
  } else {
    throw UsageError("unknown generator '" + kind
                     + "' (expected cyclic, pair, sim or union)");
  }
  return 0;
}

int do_algebra_check(std::string const& text, bool as_json, bool quiet,
                     std::ostream& out) {
  Structure parsed = parse_structure(text);
  auto const* pm = std::get_if<FinitePartialMagma>(&parsed);
  if (pm == nullptr) {
    throw UsageError("algebra-check expects a groupoid file");
  }
  auto g = FiniteGroupoid::validated(*pm);
  auto s = to_semigroup(g);

  std::vector<ElementId> identity(g.order());
  for (ElementId i = 0; i < g.order(); ++i) {
    identity[i] = i;
  }
  auto cmp = algebras_identical(groupoid_algebra(g),
                                contracted_semigroup_algebra(s), identity);

  auto pi = regular_representation(g);
  pi.push_back(ZeroOneMatrix::zeros(g.order(), g.order()));  // pi(0) = 0
  auto rep = check_star_representation(s, pi);

  Report report{as_json, quiet, out};
  report.value("constants_identical", json(cmp.identical));
  report.value("star_representation", rep.ok() ? "pass" : "fail");
  report.emit();
  return (cmp.identical && rep.ok()) ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"finite groupoid / inverse semigroup toolkit"};
  app.name("isg");
  app.require_subcommand(1);

  bool json_out = false;
  bool quiet    = false;
  app.add_flag("--json", json_out, "single-line JSON report");
  app.add_flag("--quiet", quiet, "suppress report output");

  std::string check_path = "-";
  auto* c_check = app.add_subcommand(
      "check", "classify a structure and verify its axioms");
  c_check->add_option("file", check_path, "structure file or -");
  c_check->add_flag("--json", json_out);
  c_check->add_flag("--quiet", quiet);

  std::string tos_path = "-";
  auto* c_tos = app.add_subcommand(
      "to-semigroup", "adjoin a zero to a groupoid (inverse semigroup out)");
  c_tos->add_option("file", tos_path, "groupoid file or -");

  std::string tog_path = "-";
  auto* c_tog = app.add_subcommand(
      "to-groupoid", "strip the zero of an inverse semigroup (groupoid out)");
  c_tog->add_option("file", tog_path, "semigroup file or -");

  std::string rt_path = "-";
  auto* c_rt = app.add_subcommand("roundtrip",
                                  "verify the construction round trip");
  c_rt->add_option("file", rt_path, "structure file or -");
  c_rt->add_flag("--json", json_out);
  c_rt->add_flag("--quiet", quiet);

  unsigned    vagner_order = 0;
  std::string vagner_mode  = "exhaustive";
  unsigned    workers      = 1;
  auto* c_vagner = app.add_subcommand(
      "vagner", "enumerate semigroups of a given order and test that unique "
                "inverses coincide with commuting idempotents");
  c_vagner->add_option("--order", vagner_order, "table order (1..4)")
      ->required();
  c_vagner->add_option("--mode", vagner_mode,
                       "exhaustive (order <= 3) or backtracking");
  c_vagner->add_option("--workers", workers, "worker thread count");
  c_vagner->add_flag("--json", json_out);
  c_vagner->add_flag("--quiet", quiet);

  std::string              gen_kind;
  std::vector<std::string> gen_params;
  auto* c_gen = app.add_subcommand("gen", "generate a structure");
  c_gen->add_option("kind", gen_kind, "cyclic | pair | sim | union")
      ->required();
  c_gen->add_option("params", gen_params, "size, or files for union");

  std::string alg_path = "-";
  auto* c_alg = app.add_subcommand(
      "algebra-check", "compare groupoid and contracted semigroup algebras "
                       "and verify the regular *-representation");
  c_alg->add_option("file", alg_path, "groupoid file or -");
  c_alg->add_flag("--json", json_out);
  c_alg->add_flag("--quiet", quiet);

  std::vector<std::string> argv_storage;
  argv_storage.push_back("isg");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char const*> argv;
  for (auto const& a : argv_storage) {
    argv.push_back(a.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return 0;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*c_check) {
      return do_check(read_input(check_path, in), json_out, quiet, out);
    }
    if (*c_tos) {
      return do_to_semigroup(read_input(tos_path, in), out);
    }
    if (*c_tog) {
      return do_to_groupoid(read_input(tog_path, in), out);
    }
    if (*c_rt) {
      return do_roundtrip(read_input(rt_path, in), json_out, quiet, out);
    }
    if (*c_vagner) {
      return do_vagner(vagner_order, vagner_mode, workers, json_out, quiet,
                       out);
    }
    if (*c_gen) {
      return do_gen(gen_kind, gen_params, in, out);
    }
    if (*c_alg) {
      return do_algebra_check(read_input(alg_path, in), json_out, quiet, out);
    }
  } catch (ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (UsageError const& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (InvalidStructure const& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace isg
