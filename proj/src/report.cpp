#include "extcorr/report.hpp"

namespace extcorr {

namespace {

constexpr const char* kPaper = "paper-formula";
constexpr const char* kDerived = "derived-identity";
constexpr const char* kEmpirical = "empirical";

Json sweep_json(const RankSweep& s) {
  return {{"first", s.first}, {"last", s.last}, {"count", s.count()}};
}

}  // namespace

Json to_json(const RankDegree& x) { return {{"rank", x.rank()}, {"deg", x.deg()}}; }

Json to_json(const Slope& s) {
  const Slope r = s.reduced();
  return {{"num", r.num()}, {"den", r.den()}};
}

Json to_json(const Normalized& n) {
  return {{"pair", to_json(n.pair)}, {"twist", n.twist}};
}

Json to_json(const FareySplit& split) {
  using checked::mul;
  using checked::sub;
  const Int r = split.parent.rank(), d = split.parent.deg();
  const Int s = split.left.rank(), e = split.left.deg();
  const Int t = split.right.rank(), f = split.right.deg();
  return {{"parent", to_json(split.parent)},
          {"left", to_json(split.left)},
          {"right", to_json(split.right)},
          {"slopes",
           {{"left", to_json(slope(split.left))},
            {"parent", to_json(slope(split.parent))},
            {"right", to_json(slope(split.right))}}},
          {"identities",
           {{"ds_minus_re", sub(mul(d, s), mul(r, e))},
            {"rf_minus_td", sub(mul(r, f), mul(t, d))},
            {"sf_minus_te", sub(mul(s, f), mul(t, e))}}}};
}

Json to_json(const DecompositionTree& tree) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const auto& n = tree.node(i);
    Json children = nullptr;
    if (n.children) children = {n.children->first, n.children->second};
    nodes.push_back({{"index", i},
                     {"rank", n.value.rank()},
                     {"deg", n.value.deg()},
                     {"depth", n.depth},
                     {"children", children}});
  }
  Json leaves = Json::array();
  for (const auto& l : tree.leaves()) leaves.push_back(to_json(l));
  return {{"root", to_json(tree.root().value)},
          {"node_count", tree.size()},
          {"leaf_count", leaves.size()},
          {"height", tree.height()},
          {"nodes", std::move(nodes)},
          {"leaves", std::move(leaves)}};
}

Json to_json(const SubbundleNumerics& s) {
  return {{"case", to_string(s.case_tag)},
          {"rank", s.rank},
          {"deg", s.deg},
          {"tested", to_json(s.tested)},
          {"slope", to_json(s.derived_slope)}};
}

Json to_json(const StabilityCertificate& cert) {
  Json destab = Json::array();
  for (const auto& d : cert.destabilizers) destab.push_back(to_json(d));
  return {{"parent", to_json(cert.split.parent())},
          {"left", to_json(cert.split.left())},
          {"right", to_json(cert.split.right())},
          {"parent_slope", to_json(slope(cert.split.parent()))},
          {"is_farey", cert.is_farey},
          {"defect", cert.split.defect()},
          {"cases_checked",
           {{"case_i", {{"checked", cert.cases_checked.case_i}}},
            {"case_ii", sweep_json(cert.cases_checked.case_ii)},
            {"case_iii", sweep_json(cert.cases_checked.case_iii)}}},
          {"destabilizers", std::move(destab)},
          {"verdict", cert.verdict == Verdict::Pass ? "PASS" : "FAIL"}};
}

Json to_json(const CorrespondenceProfile& p) {
  return {{"genus", p.genus},
          {"split", to_json(p.split)},
          {"fixed_det", p.fixed_det},
          {"regime", to_string(p.regime)},
          {"euler_char", p.euler_char},
          {"ext1_dim", p.ext1_dim},
          {"fiber_dim", p.fiber_dim},
          {"dim_left", p.dim_left},
          {"dim_right", p.dim_right},
          {"dim_z", p.dim_z},
          {"dim_target", p.dim_target},
          {"dim_gap", p.dim_gap}};
}

Json to_json(const GroupDescription& g) {
  Json out{{"order", g.order},
           {"is_abelian", nullptr},
           {"invariants", nullptr},
           {"method", g.method},
           {"note", g.note},
           {"structure", g.render()}};
  if (g.is_abelian) out["is_abelian"] = *g.is_abelian;
  if (g.invariants) out["invariants"] = *g.invariants;
  return out;
}

Json to_json(const AutoeqDescription& a) {
  return {{"regime", to_string(a.regime)},
          {"status", a.known ? "known" : "unknown"},
          {"shift_rank", a.shift_rank},
          {"torsion", a.torsion ? to_json(*a.torsion) : Json(nullptr)},
          {"group_name", a.group_name},
          {"shape", a.shape},
          {"iso_string", a.iso_string},
          {"caveats", a.caveats}};
}

Json provenance_for(const FareySplit&) {
  return {{"left", kPaper}, {"right", kPaper}, {"identities", kPaper},
          {"slopes", kDerived}};
}

Json provenance_for(const DecompositionTree&) {
  return {{"nodes", kDerived}, {"leaves", kDerived}, {"node_count", kDerived}};
}

Json provenance_for(const Normalized&) {
  return {{"pair", kPaper}, {"twist", kDerived}};
}

Json provenance_for(const StabilityCertificate& cert) {
  return {{"cases_checked", kPaper},
          {"destabilizers", cert.is_farey ? kPaper : kEmpirical},
          {"verdict", cert.is_farey ? kPaper : kEmpirical}};
}

Json provenance_for(const CorrespondenceProfile&) {
  return {{"euler_char", kPaper}, {"ext1_dim", kPaper},
          {"fiber_dim", kPaper},  {"dim_left", kDerived},
          {"dim_right", kDerived}, {"dim_target", kDerived},
          {"dim_z", kDerived},    {"dim_gap", kDerived}};
}

Json provenance_for(const AutoeqDescription& a) {
  const bool cited = a.regime != Regime::Genus0 && a.regime != Regime::Genus1;
  return {{"shape", cited ? kPaper : kDerived},
          {"torsion", kDerived},
          {"iso_string", kDerived},
          {"status", kPaper}};
}

Json Report::to_json() const {
  return {{"schema", kSchemaId},
          {"tool_version", kToolVersion},
          {"command", command},
          {"inputs", inputs},
          {"result", result},
          {"provenance", provenance}};
}

std::string canonical_dump(const Json& j) { return j.dump(); }

}  // namespace extcorr
