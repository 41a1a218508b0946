#include "hopfind/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "hopfind/document.hpp"
#include "hopfind/error.hpp"
#include "hopfind/oracle.hpp"

namespace hopfind {

namespace {

LoadedAlgebra load_valid(const std::string& path) {
  LoadedAlgebra a = load_algebra(path);
  require_valid(a.algebra, a.name);
  return a;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string truth(bool b) { return b ? "true" : "false"; }

int cmd_validate(const std::string& path, std::ostream& out) {
  const LoadedAlgebra a = load_algebra(path);
  check_structure(a.algebra);
  const ValidationReport r = validate(a.algebra);
  if (r.valid()) {
    out << "valid: " << a.name << " (dim " << a.algebra.dim << " over GF(" << a.algebra.field.modulus() << "))\n";
    return kExitOk;
  }
  for (const auto& f : r.failures) {
    out << "FAIL " << f.axiom << " at (";
    for (std::size_t i = 0; i < f.indices.size(); ++i) out << (i ? ", " : "") << f.indices[i];
    out << ")";
    if (!f.detail.empty()) out << ": " << f.detail;
    out << "\n";
  }
  return kExitMath;
}

struct IndicatorArgs {
  std::string input;
  std::optional<std::int64_t> from, to;
  bool json = false;
  unsigned threads = 1;
};

int cmd_indicators(const IndicatorArgs& args, std::ostream& out) {
  const LoadedAlgebra a = load_valid(args.input);
  const std::uint64_t p = a.algebra.field.modulus();
  const std::int64_t radius = default_window_radius(p);
  const std::int64_t lo = args.from.value_or(-radius), hi = args.to.value_or(radius);
  if (lo > hi) throw ParseError("--from must not exceed --to");
  const IndicatorReport r = make_indicator_report(a.algebra, a.name, lo, hi, args.threads);
  if (args.json) {
    out << format_document(report_to_json(r));
    return kExitOk;
  }
  out << "algebra: " << r.algebra << " (dim " << a.algebra.dim << " over GF(" << p << "))\n";
  const auto width = static_cast<int>(std::max(std::to_string(lo).size(), std::to_string(hi).size()));
  out << std::setw(width) << "n" << "  nu_n\n";
  for (std::int64_t n = lo; n <= hi; ++n) out << std::setw(width) << n << "  " << r.sequence.at(n) << "\n";
  out << "min poly: " << r.min_poly.to_string() << "\n";
  out << "period: " << r.period << "\n";
  out << "p-pertinent: " << yes_no(r.p_pertinent) << "\n";
  return kExitOk;
}

int cmd_filtration(const std::string& path, const std::string& kind, std::ostream& out) {
  const LoadedAlgebra a = load_valid(path);
  const Filtration f = kind == "coradical" ? coradical_filtration(a.algebra) : jadic_filtration(a.algebra);
  out << format_document(filtration_to_json(f));
  return kExitOk;
}

int cmd_gr(const std::string& path, const std::string& kind, std::ostream& out) {
  const LoadedAlgebra a = load_valid(path);
  const GradedHopfAlgebra g = kind == "c" ? graded_from_coradical(a.algebra) : graded_from_jadic(a.algebra);
  out << format_document(algebra_to_json(g.base, &g.degrees));
  return kExitOk;
}

int cmd_check(const std::string& path, bool json, std::ostream& out) {
  const LoadedAlgebra a = load_valid(path);
  const StructureProfile s = structure_profile(a.algebra);
  const std::uint64_t p = a.algebra.field.modulus();
  const bool power = is_power_of(s.dim, p);
  std::size_t exponent = 0;
  for (std::size_t n = s.dim; power && n > 1; n /= p) ++exponent;
  const bool claim_ok = !s.local_dual_chevalley || power;
  if (json) {
    Json doc;
    doc["algebra"] = a.name;
    doc["p"] = p;
    doc["dim"] = s.dim;
    doc["dim_is_power_of_p"] = power;
    doc["radical_dim"] = s.radical_dim;
    doc["coradical_dim"] = s.coradical_dim;
    doc["local"] = s.local;
    doc["connected"] = s.connected;
    doc["dual_chevalley"] = s.dual_chevalley;
    doc["chevalley"] = s.chevalley;
    doc["local_dual_chevalley"] = s.local_dual_chevalley;
    doc["connected_chevalley"] = s.connected_chevalley;
    doc["dimension_claim"] = claim_ok;
    out << format_document(doc);
  } else {
    out << "algebra: " << a.name << "\n";
    if (power)
      out << "dim: " << s.dim << " = " << p << "^" << exponent << "\n";
    else
      out << "dim: " << s.dim << " (not a power of " << p << ")\n";
    out << "radical dim: " << s.radical_dim << "\n";
    out << "coradical dim: " << s.coradical_dim << "\n";
    out << "local: " << truth(s.local) << "\n";
    out << "connected: " << truth(s.connected) << "\n";
    out << "dual-Chevalley: " << truth(s.dual_chevalley) << "\n";
    out << "Chevalley: " << truth(s.chevalley) << "\n";
    out << "local-dual-Chevalley: " << truth(s.local_dual_chevalley) << "\n";
    out << "connected-Chevalley: " << truth(s.connected_chevalley) << "\n";
    out << "dimension claim: " << (claim_ok ? "ok" : "VIOLATED") << "\n";
  }
  return claim_ok ? kExitOk : kExitMath;
}

// Dual, op and cop of a graded algebra are graded by the same degrees.
int emit(const HopfAlgebraData& h, std::ostream& out, const std::optional<std::vector<std::size_t>>& degrees = {}) {
  out << format_document(algebra_to_json(h, degrees ? &*degrees : nullptr));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Indicators and filtrations of finite-dimensional Hopf algebras over GF(p)", "hopfind"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string input, second, kind;
  bool json = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check every Hopf algebra axiom");
  validate_cmd->add_option("input", input, "Algebra or constructor document")->required();
  validate_cmd->callback([&] { action = [&] { return cmd_validate(input, out); }; });

  IndicatorArgs ind;
  auto* ind_cmd = app.add_subcommand("indicators", "Indicator sequence, minimal polynomial and period");
  ind_cmd->add_option("input", ind.input, "Algebra or constructor document")->required();
  ind_cmd->add_option("--from", ind.from, "First index (default -2p^2)");
  ind_cmd->add_option("--to", ind.to, "Last index (default 2p^2)");
  ind_cmd->add_flag("--json", ind.json, "Emit a JSON report");
  ind_cmd->add_option("--threads", ind.threads, "Worker threads for the window (0 = all cores)");
  ind_cmd->callback([&] { action = [&] { return cmd_indicators(ind, out); }; });

  auto* filt_cmd = app.add_subcommand("filtration", "Coradical or J-adic filtration");
  filt_cmd->add_option("input", input)->required();
  filt_cmd->add_option("--kind", kind)->required()->check(CLI::IsMember({"coradical", "jadic"}));
  filt_cmd->callback([&] { action = [&] { return cmd_filtration(input, kind, out); }; });

  auto* gr_cmd = app.add_subcommand("gr", "Associated graded Hopf algebra (c: coradical, j: J-adic)");
  gr_cmd->add_option("input", input)->required();
  gr_cmd->add_option("--kind", kind)->required()->check(CLI::IsMember({"c", "j"}));
  gr_cmd->callback([&] { action = [&] { return cmd_gr(input, kind, out); }; });

  auto* rad_cmd = app.add_subcommand("radical", "Jacobson radical");
  rad_cmd->add_option("input", input)->required();
  rad_cmd->callback([&] {
    action = [&] {
      out << format_document(radical_to_json(jacobson_radical(load_valid(input).algebra)));
      return kExitOk;
    };
  });

  for (const char* name : {"dual", "op", "cop", "build"}) {
    auto* cmd = app.add_subcommand(name, std::string("Emit ") + (std::string(name) == "build" ? "the constructed" : name) +
                                             " algebra as a document");
    cmd->add_option("input", input)->required();
    const std::string which = name;
    cmd->callback([&, which] {
      action = [&, which] {
        const LoadedAlgebra a = load_valid(input);
        const HopfAlgebraData& h = a.algebra;
        if (which == "dual") return emit(dual(h), out, a.degrees);
        if (which == "op") return emit(opposite(h), out, a.degrees);
        if (which == "cop") return emit(co_opposite(h), out, a.degrees);
        return emit(h, out, a.degrees);
      };
    });
  }

  auto* tensor_cmd = app.add_subcommand("tensor", "Emit the tensor product of two algebras");
  tensor_cmd->add_option("left", input)->required();
  tensor_cmd->add_option("right", second)->required();
  tensor_cmd->callback([&] {
    action = [&] { return emit(tensor(load_valid(input).algebra, load_valid(second).algebra), out); };
  });

  auto* check_cmd = app.add_subcommand("check", "Chevalley-type predicates and the dimension claim");
  check_cmd->add_option("input", input)->required();
  check_cmd->add_flag("--json", json);
  check_cmd->callback([&] { action = [&] { return cmd_check(input, json, out); }; });

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference computations");
  oracle_cmd->require_subcommand(1);
  std::int64_t m = 1, n = 1;
  std::uint64_t p = 2;
  auto* sw_cmd = oracle_cmd->add_subcommand("sweedler", "h_(1)...h_(m) for every basis vector h");
  sw_cmd->add_option("input", input)->required();
  sw_cmd->add_option("--m", m)->required();
  sw_cmd->callback([&] {
    action = [&] {
      const HopfAlgebraData h = load_valid(input).algebra;
      Json images = Json::array();
      for (std::size_t i = 0; i < h.dim; ++i) images.push_back(sweedler_bruteforce(h, basis_vector(h, i), m));
      Json doc;
      doc["m"] = m;
      doc["images"] = std::move(images);
      out << format_document(doc);
      return kExitOk;
    };
  });
  auto* orad_cmd = oracle_cmd->add_subcommand("radical", "Radical by enumerating every element");
  orad_cmd->add_option("input", input)->required();
  orad_cmd->callback([&] {
    action = [&] {
      out << format_document(radical_to_json(radical_enumeration(load_valid(input).algebra)));
      return kExitOk;
    };
  });
  auto* gl_cmd = oracle_cmd->add_subcommand("grouplikes", "Grouplike elements by enumeration");
  gl_cmd->add_option("input", input)->required();
  gl_cmd->callback([&] {
    action = [&] {
      const GrouplikeSet g = grouplike_enumeration(load_valid(input).algebra);
      Json doc;
      doc["count"] = g.elements.size();
      doc["elements"] = g.elements;
      doc["group"] = group_to_json(g.table);
      out << format_document(doc);
      return kExitOk;
    };
  });
  auto* gc_cmd = oracle_cmd->add_subcommand("group-count", "#{g : g^n = 1} mod p from a Cayley table");
  gc_cmd->add_option("group", input, "Group table document")->required();
  gc_cmd->add_option("--n", n)->required();
  gc_cmd->add_option("--p", p)->required();
  gc_cmd->callback([&] {
    action = [&] {
      GroupTable g = group_from_json(read_json_file(input));
      validate_group(g);
      out << group_indicator_count(g, n, p) << "\n";
      return kExitOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMath;
  }
}

}  // namespace hopfind
