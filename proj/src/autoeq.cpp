#include "extcorr/autoeq.hpp"

namespace extcorr {

namespace {

std::size_t checked_count(Int base, Int exponent) {
  Int out = 1;
  for (Int i = 0; i < exponent; ++i) out = checked::mul(out, base);
  return static_cast<std::size_t>(out);
}

bool fits_table(std::size_t order, std::size_t max_table) {
  return order <= max_table / std::max<std::size_t>(order, 1);
}

ResolvedSymmetry resolve_trivial(Int genus, Int modulus) {
  const auto dim = static_cast<std::size_t>(checked::mul(2, genus));
  EnumeratedGroup group = enumerate_cosets(Presentation{});
  CayleyTable table = group.cayley_table();
  return {std::move(group), {ModMatrix::identity(dim, modulus)}, std::move(table)};
}

std::string describe_quotient(const CayleyTable& aut, bool with_dual) {
  if (aut.is_abelian()) {
    const auto orders = aut.element_orders();
    std::vector<Int> cyclic = abelian_invariants(orders);
    if (with_dual) cyclic.push_back(2);
    return render_abelian(invariant_factors(cyclic));
  }
  std::string out = "a non-abelian group of order " + std::to_string(aut.size());
  if (with_dual) out += " × ℤ/2";
  return out;
}

std::string group_name(GroupVariant v, Int r) {
  return std::string(v == GroupVariant::Restricted ? "𝔊°_[" : "𝔊_[") +
         std::to_string(r) + "]";
}

}  // namespace

ElementModel::ElementModel(const ResolvedSymmetry& sym, Int genus, Int modulus,
                           bool with_dual)
    : sym_(&sym),
      modulus_(modulus),
      dim_(static_cast<std::size_t>(checked::mul(2, genus))),
      with_dual_(with_dual),
      torsion_count_(checked_count(modulus, checked::mul(2, genus))) {
  order_ = static_cast<std::size_t>(checked::mul(
      checked::mul(static_cast<Int>(sym.group.order()), with_dual ? 2 : 1),
      static_cast<Int>(torsion_count_)));
}

std::size_t ElementModel::encode(const AutoeqElement& x) const {
  std::size_t tau = 0;
  for (Int v : x.torsion) tau = tau * static_cast<std::size_t>(modulus_) + static_cast<std::size_t>(v);
  const std::size_t branch = with_dual_ ? 2 : 1;
  return (x.sigma * branch + static_cast<std::size_t>(x.l_power)) * torsion_count_ + tau;
}

AutoeqElement ElementModel::decode(std::size_t index) const {
  AutoeqElement x{0, 1, 0, std::vector<Int>(dim_, 0)};
  std::size_t tau = index % torsion_count_;
  for (std::size_t i = dim_; i-- > 0;) {
    x.torsion[i] = static_cast<Int>(tau % static_cast<std::size_t>(modulus_));
    tau /= static_cast<std::size_t>(modulus_);
  }
  std::size_t rest = index / torsion_count_;
  if (with_dual_) {
    x.l_power = static_cast<int>(rest % 2);
    x.eps = x.l_power == 1 ? -1 : 1;
    rest /= 2;
  }
  x.sigma = rest;
  return x;
}

AutoeqElement ElementModel::multiply(const AutoeqElement& x,
                                     const AutoeqElement& y) const {
  AutoeqElement out;
  out.sigma = sym_->table(x.sigma, y.sigma);
  out.eps = x.eps * y.eps;
  // Lambda_x^{eps_y}, pulled back along sigma_y, then twisted by Lambda_y.
  out.l_power = x.l_power * y.eps + y.l_power;
  std::vector<Int> tau = x.torsion;
  for (Int& v : tau) v = checked::mod_floor(v * y.eps, modulus_);
  tau = sym_->action[y.sigma].apply(tau);
  for (std::size_t i = 0; i < dim_; ++i) {
    tau[i] = (tau[i] + y.torsion[i]) % modulus_;
  }
  out.torsion = std::move(tau);
  return out;
}

bool ElementModel::satisfies_condition(const AutoeqElement& x) const {
  return checked::mul(modulus_, x.l_power) == 1 - x.eps;
}

std::vector<std::size_t> ElementModel::generators() const {
  std::vector<std::size_t> out;
  const AutoeqElement one{0, 1, 0, std::vector<Int>(dim_, 0)};
  for (std::size_t i = 0; i < dim_; ++i) {
    AutoeqElement x = one;
    x.torsion[i] = 1 % modulus_;
    out.push_back(encode(x));
  }
  for (std::size_t j = 0; j < sym_->group.generator_count(); ++j) {
    AutoeqElement x = one;
    x.sigma = sym_->group.element_of({{j, false}});
    out.push_back(encode(x));
  }
  if (with_dual_) {
    AutoeqElement x = one;
    x.eps = -1;
    x.l_power = 1;
    out.push_back(encode(x));
  }
  if (out.empty()) out.push_back(encode(one));
  return out;
}

CayleyTable ElementModel::cayley_table() const {
  std::vector<AutoeqElement> elems;
  elems.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) elems.push_back(decode(i));
  std::vector<std::uint32_t> prod(order_ * order_);
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      prod[a * order_ + b] =
          static_cast<std::uint32_t>(encode(multiply(elems[a], elems[b])));
    }
  }
  return CayleyTable(order_, std::move(prod));
}

GroupLawReport group_law_check(const CurveSymmetry& sym, std::size_t max_table) {
  GroupLawReport report;
  if (sym.mode() == SymmetryMode::Trivial) return report;

  const ResolvedSymmetry resolved = resolve(sym);
  report.aut_order = resolved.group.order();
  const ElementModel model(resolved, sym.genus(), sym.modulus(),
                           sym.modulus() <= 2);
  report.model_order = model.order();
  if (!fits_table(model.order(), max_table)) return report;

  const CayleyTable table = model.cayley_table();
  auto fail = [](const std::string& why) {
    throw Error(ErrorKind::BadSymmetry, "composition law: " + why);
  };
  if (table.identity() != std::optional<std::size_t>(0)) {
    fail("(id, O) is not a two-sided identity");
  }
  if (!table.is_latin_square()) fail("some element has no inverse");
  const auto gens = model.generators();
  if (table.generated_size(gens) != table.size()) {
    fail("generators do not reach every element");
  }
  if (!table.associative_on(gens)) fail("not associative");
  report.table_checked = true;
  return report;
}

std::string GroupDescription::render() const {
  if (invariants) return render_abelian(*invariants);
  return "group of order " + std::to_string(order);
}

GroupDescription torsion_group(Int genus, Int modulus) {
  if (genus < 0 || modulus < 1) {
    throw Error(ErrorKind::InvalidInput, "need genus >= 0 and modulus >= 1");
  }
  const Int dim = checked::mul(2, genus);
  GroupDescription out;
  out.order = static_cast<Int>(checked_count(modulus, dim));
  out.is_abelian = true;
  out.invariants = modulus >= 2 ? std::vector<Int>(static_cast<std::size_t>(dim), modulus)
                                : std::vector<Int>{};
  out.method = "closed-form";
  return out;
}

GroupDescription g_group(GroupVariant variant, Int genus, Int modulus, Int deg,
                         const CurveSymmetry& sym, std::size_t max_table) {
  if (genus < 0 || modulus < 1) {
    throw Error(ErrorKind::InvalidInput, "need genus >= 0 and modulus >= 1");
  }
  if (checked::gcd(modulus, deg) != 1) {
    throw Error(ErrorKind::NotCoprime, "g_group needs gcd(r, d) = 1");
  }
  if (sym.genus() != genus || sym.modulus() != modulus) {
    throw Error(ErrorKind::InvalidInput,
                "symmetry data is for a different genus or modulus");
  }

  // Lambda^r = L^2 (x) (degree 0) needs r | 2d.
  const bool with_dual = variant == GroupVariant::Full &&
                         checked::mod_floor(checked::mul(2, deg), modulus) == 0;

  ResolvedSymmetry resolved = sym.mode() == SymmetryMode::Trivial
                                  ? resolve_trivial(genus, modulus)
                                  : (group_law_check(sym, max_table), resolve(sym));
  const ElementModel model(resolved, genus, modulus, with_dual);

  GroupDescription out;
  out.order = static_cast<Int>(model.order());
  const Int dim = checked::mul(2, genus);

  if (resolved.group.order() == 1) {
    out.is_abelian = true;
    if (fits_table(model.order(), max_table)) {
      const CayleyTable table = model.cayley_table();
      out.is_abelian = table.is_abelian();
      if (*out.is_abelian) out.invariants = abelian_invariants(table.element_orders());
      out.method = "cayley-table";
    } else {
      std::vector<Int> cyclic(static_cast<std::size_t>(dim), modulus);
      if (with_dual) cyclic.push_back(2);
      out.invariants = invariant_factors(cyclic);
      out.method = "closed-form";
    }
  } else {
    out.method = "torsor-count";
    out.note = "extension of " + describe_quotient(resolved.table, with_dual) +
               " by " + torsion_group(genus, modulus).render() +
               "; cocycle data not supplied";
  }
  if (variant == GroupVariant::Full && !with_dual) {
    if (!out.note.empty()) out.note += "; ";
    out.note += group_name(GroupVariant::Full, modulus) + " = " +
                group_name(GroupVariant::Restricted, modulus) +
                " (degree obstruction)";
  }
  return out;
}

const char* to_string(Regime r) noexcept {
  switch (r) {
    case Regime::GenusAtLeast3RankNot2: return "g>=3,r!=2";
    case Regime::GenusAtLeast3Rank2: return "g>=3,r=2";
    case Regime::Genus2Rank2: return "g=2,r=2";
    case Regime::Genus2RankAbove2: return "g=2,r>2";
    case Regime::Genus1: return "g=1";
    case Regime::Genus0: return "g=0";
  }
  return "?";
}

AutoeqDescription autoeq_group(Int genus, Int rank, Int deg,
                               const CurveSymmetry& sym, std::size_t max_table) {
  if (genus < 0 || rank < 1) {
    throw Error(ErrorKind::InvalidInput, "need genus >= 0 and rank >= 1");
  }
  if (checked::gcd(rank, deg) != 1) {
    throw Error(ErrorKind::NotCoprime, "autoeq needs gcd(r, d) = 1");
  }
  if (sym.genus() != genus || sym.modulus() != rank) {
    throw Error(ErrorKind::InvalidInput,
                "symmetry data is for a different genus or modulus");
  }

  const std::string point_caveat =
      "Aut D^b of a point reduces to shifts (implementer-derived)";

  if (genus == 0) {
    if (rank >= 2) {
      throw Error(ErrorKind::NoStableBundles,
                  "no stable vector bundles of rank greater than 1 on P^1");
    }
    return {Regime::Genus0, true, 1, torsion_group(0, 1), "", "ℤ", "ℤ",
            {"N(1,L) on P^1 is the single point {L}", point_caveat}};
  }
  if (genus == 1) {
    const Int h = checked::gcd(rank, deg);
    return {Regime::Genus1, true, 1, torsion_group(0, 1), "", "ℤ", "ℤ",
            {"N(r,L) is isomorphic to P^{h-1} with h = gcd(r,d) = " +
                 std::to_string(h) + ": a single point",
             point_caveat}};
  }
  if (rank == 1) {
    throw Error(ErrorKind::InvalidInput,
                "rank must be >= 2 for genus >= 2 (N(1,L) is a point)");
  }

  AutoeqDescription out{Regime::Genus2Rank2, true, 2, std::nullopt, "", "", "", {}};
  GroupVariant variant = GroupVariant::Restricted;
  if (genus == 2) {
    if (rank > 2) {
      out.regime = Regime::Genus2RankAbove2;
      out.known = false;
      out.shape = "ℤ² × Aut(N(" + std::to_string(rank) + ",L))";
      out.iso_string = "unknown";
      out.caveats.push_back("Aut(N(r,L)) is unknown for g = 2 and r > 2");
      return out;
    }
    out.caveats.push_back("no dualization factor (Newstead)");
    if (sym.mode() == SymmetryMode::Trivial) {
      out.caveats.push_back(
          "trivial symmetry model omits the hyperelliptic involution of a genus-2 curve");
    }
  } else {
    out.regime = rank == 2 ? Regime::GenusAtLeast3Rank2 : Regime::GenusAtLeast3RankNot2;
    if (rank == 2) variant = GroupVariant::Full;
  }
  out.torsion = g_group(variant, genus, rank, deg, sym, max_table);
  out.group_name = group_name(variant, rank);
  out.shape = "ℤ² × " + out.group_name;
  out.iso_string = out.torsion->invariants ? "ℤ² × " + out.torsion->render()
                                           : out.shape;
  return out;
}

}  // namespace extcorr
