#include "extcorr/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "extcorr/report.hpp"

namespace extcorr::cli {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LimitExceeded:
    case ErrorKind::Overflow:
      return kLimitExceeded;
    default:
      return kInvalidInput;
  }
}

struct Options {
  bool json = false;
  std::size_t max_table = kDefaultMaxTable;
  Int a = 0, b = 0, c = 0;
  std::vector<Int> left;
  bool fixed_det = false;
  std::string symmetry;
};

struct Outcome {
  Report report;
  int code = kOk;
  std::string text;
};

std::string show(const RankDegree& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string show(const Slope& s) {
  std::ostringstream os;
  os << s.reduced();
  return os.str();
}

Json pair_input(Int r, Int d, const Normalized& n) {
  return {{"rank", r}, {"deg", d}, {"normalized", to_json(n.pair)}, {"twist", n.twist}};
}

Outcome do_normalize(const Options& o) {
  const Normalized n = normalize(o.a, o.b);
  Outcome out{{"normalize", {{"rank", o.a}, {"deg", o.b}}, to_json(n), provenance_for(n)}, kOk, {}};
  out.text = "(" + std::to_string(o.a) + "," + std::to_string(o.b) + ") -> " +
             show(n.pair) + " twist " + std::to_string(n.twist) + "\n";
  return out;
}

Outcome do_split(const Options& o) {
  const Normalized n = normalize(o.a, o.b);
  const FareySplit s = farey_split(n.pair);
  Outcome out{{"split", pair_input(o.a, o.b, n), to_json(s), provenance_for(s)}, kOk, {}};
  out.text = show(s.parent) + " = " + show(s.left) + " + " + show(s.right) + "\n" +
             "slopes " + show(slope(s.left)) + " < " + show(slope(s.parent)) +
             " < " + show(slope(s.right)) + "\n";
  return out;
}

Outcome do_tree(const Options& o) {
  const Normalized n = normalize(o.a, o.b);
  const DecompositionTree tree(n.pair);
  Outcome out{{"tree", pair_input(o.a, o.b, n), to_json(tree), provenance_for(tree)}, kOk, {}};
  // Indented preorder.
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    const auto& node = tree.node(i);
    out.text += std::string(2 * node.depth, ' ') + show(node.value) + "\n";
    if (node.children) {
      walk(node.children->first);
      walk(node.children->second);
    }
  };
  walk(0);
  out.text += std::to_string(tree.size()) + " nodes, " +
              std::to_string(tree.leaves().size()) + " leaves\n";
  return out;
}

Outcome do_certify(const Options& o) {
  const Normalized n = normalize(o.a, o.b);
  Json inputs = pair_input(o.a, o.b, n);
  std::optional<AdmissibleSplit> split;
  if (o.left.empty()) {
    split = to_admissible(farey_split(n.pair));
    inputs["left"] = nullptr;
  } else {
    // Twisting the parent by -twist twists the left part by -twist * s.
    const Int s = o.left[0];
    const RankDegree left(s, checked::sub(o.left[1], checked::mul(n.twist, s)));
    split = admissible_split(n.pair, left);
    inputs["left"] = {{"rank", o.left[0]}, {"deg", o.left[1]}, {"normalized", to_json(left)}};
  }
  const StabilityCertificate cert = certify_stability(*split);
  Outcome out{{"certify", inputs, to_json(cert), provenance_for(cert)}, kOk, {}};
  out.code = cert.verdict == Verdict::Pass ? kOk : kCertifiedFail;

  const auto& cc = cert.cases_checked;
  out.text = show(split->parent()) + " = " + show(split->left()) + " + " +
             show(split->right()) + (cert.is_farey ? " (Farey)" : " (non-Farey)") + "\n";
  out.text += "case I checked; case II ranks " + std::to_string(cc.case_ii.count()) +
              "; case III ranks " + std::to_string(cc.case_iii.count()) + "\n";
  for (const auto& d : cert.destabilizers) {
    out.text += "destabilizer case " + std::string(to_string(d.case_tag)) + " (" +
                std::to_string(d.rank) + "," + std::to_string(d.deg) + ") slope " +
                show(d.derived_slope) + " >= " + show(slope(split->parent())) + "\n";
  }
  out.text += std::string("verdict ") + (out.code == kOk ? "PASS" : "FAIL") + "\n";
  return out;
}

Outcome do_dims(const Options& o) {
  const CurveData curve(o.a);
  const Normalized n = normalize(o.b, o.c);
  const CorrespondenceProfile p = correspondence_profile(curve, n.pair, o.fixed_det);
  Json inputs = pair_input(o.b, o.c, n);
  inputs["genus"] = o.a;
  inputs["fixed_det"] = o.fixed_det;
  Outcome out{{"dims", inputs, to_json(p), provenance_for(p)}, kOk, {}};
  const char* z = o.fixed_det ? "Z^det" : "Z";
  out.text = "genus " + std::to_string(p.genus) + " (" + to_string(p.regime) +
             "), split " + show(p.split.left) + " + " + show(p.split.right) + "\n" +
             "euler_char " + std::to_string(p.euler_char) + ", ext1 " +
             std::to_string(p.ext1_dim) + ", fiber " + std::to_string(p.fiber_dim) + "\n" +
             "dim left " + std::to_string(p.dim_left) + ", right " +
             std::to_string(p.dim_right) + ", " + z + " " + std::to_string(p.dim_z) +
             ", target " + std::to_string(p.dim_target) + ", gap " +
             std::to_string(p.dim_gap) + "\n";
  return out;
}

CurveSymmetry symmetry_from(const std::string& choice, Int g, Int r) {
  if (choice.empty()) {
    return g == 2 ? CurveSymmetry::genus2_hyperelliptic(r) : CurveSymmetry::trivial(g, r);
  }
  if (choice == "trivial") return CurveSymmetry::trivial(g, r);
  if (choice == "genus2-hyperelliptic") {
    if (g != 2) {
      throw Error(ErrorKind::InvalidInput, "genus2-hyperelliptic needs genus 2");
    }
    return CurveSymmetry::genus2_hyperelliptic(r);
  }
  std::ifstream in(choice);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read symmetry file " + choice);
  return parse_symmetry(in, g, r);
}

Outcome do_autoeq(const Options& o) {
  const CurveSymmetry sym = symmetry_from(o.symmetry, o.a, o.b);
  const AutoeqDescription a = autoeq_group(o.a, o.b, o.c, sym, o.max_table);
  Json inputs{{"genus", o.a}, {"rank", o.b}, {"deg", o.c},
              {"symmetry", to_string(sym.mode())}, {"max_table", o.max_table}};
  if (sym.mode() == SymmetryMode::Supplied) inputs["symmetry_file"] = o.symmetry;
  Outcome out{{"autoeq", inputs, to_json(a), provenance_for(a)}, kOk, {}};
  out.code = a.known ? kOk : kRegimeUnknown;
  out.text = std::string("regime ") + to_string(a.regime) + "\n";
  out.text += "Aut D^b(N) = " + (a.known ? a.iso_string : a.shape + " (unknown)") + "\n";
  if (a.torsion) {
    out.text += a.group_name.empty() ? "" : a.group_name + ": ";
    out.text += "order " + std::to_string(a.torsion->order) + ", " + a.torsion->render();
    if (!a.torsion->note.empty()) out.text += " (" + a.torsion->note + ")";
    out.text += "\n";
  }
  for (const auto& c : a.caveats) out.text += "note: " + c + "\n";
  return out;
}

void report_error(std::ostream& err, bool json, std::string_view kind,
                  const std::string& message, int code) {
  if (json) {
    err << canonical_dump(Json{{"error", kind}, {"message", message}, {"exit_code", code}})
        << "\n";
  } else {
    err << "error: " << message << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Farey splits, stability certificates, correspondence dimensions and "
               "autoequivalence groups for moduli of bundles on curves",
               "extcorr"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit canonical JSON");
  app.add_option("--max-table", o.max_table,
                 "Largest Cayley table (cells) built for group computations")
      ->check(CLI::PositiveNumber);

  std::function<Outcome(const Options&)> action;
  auto pair_command = [&](const char* name, const char* help,
                          Outcome (*fn)(const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("R", o.a, "rank")->required();
    sub->add_option("D", o.b, "degree")->required();
    sub->callback([&, fn] { action = fn; });
    return sub;
  };
  pair_command("normalize", "Reduce the degree into [0, r)", do_normalize);
  pair_command("split", "Farey split (s,e) + (t,f) with ds - re = 1", do_split);
  pair_command("tree", "Recursive decomposition tree", do_tree);
  auto* certify = pair_command("certify", "Numerical stability certificate", do_certify);
  certify->add_option("--left", o.left, "Left part S E (default: Farey split)")
      ->expected(2);

  auto* dims = app.add_subcommand("dims", "Dimensions of the correspondence");
  dims->fallthrough();
  dims->add_option("G", o.a, "genus")->required();
  dims->add_option("R", o.b, "rank")->required();
  dims->add_option("D", o.c, "degree")->required();
  dims->add_flag("--fixed-det", o.fixed_det, "Fixed-determinant moduli");
  dims->callback([&] { action = do_dims; });

  auto* autoeq = app.add_subcommand("autoeq", "Autoequivalence group of D^b(N(r,L))");
  autoeq->fallthrough();
  autoeq->add_option("G", o.a, "genus")->required();
  autoeq->add_option("R", o.b, "rank")->required();
  autoeq->add_option("D", o.c, "degree")->required();
  autoeq->add_option("--symmetry", o.symmetry,
                     "trivial | genus2-hyperelliptic | FILE (default: "
                     "genus2-hyperelliptic for g = 2, else trivial)");
  autoeq->callback([&] { action = do_autoeq; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    report_error(err, o.json || std::find(args.begin(), args.end(), "--json") != args.end(),
                 "UsageError", e.what(), kInvalidInput);
    return kInvalidInput;
  }

  try {
    Outcome result = action(o);
    if (o.json) {
      out << canonical_dump(result.report.to_json()) << "\n";
    } else {
      out << result.text;
    }
    return result.code;
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    report_error(err, o.json, to_string(e.kind()), e.what(), code);
    return code;
  }
}

}  // namespace extcorr::cli
