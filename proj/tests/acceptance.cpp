// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Usage: acceptance <path-to-extcorr>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "extcorr/autoeq.hpp"
#include "extcorr/dims.hpp"
#include "extcorr/error.hpp"
#include "extcorr/farey.hpp"
#include "extcorr/stability.hpp"
#include "oracles.hpp"

using namespace extcorr;

namespace {

// Time budgets, in seconds.
constexpr double kBudgetFareyOracle = 30.0;
constexpr double kBudgetFareyStable = 10.0;
constexpr double kBudgetWitness = 1e-3;
constexpr double kBudgetRiemannRoch = 5.0;
constexpr double kBudgetGroups = 20.0;

constexpr Int kFareyMaxRank = 500;
constexpr Int kStableMaxRank = 80;
constexpr Int kFullRangeMaxRank = 20;
constexpr Int kRRMaxRank = 80;
constexpr Int kRRMaxGenus = 10;
constexpr Int kGroupMaxGenus = 3;

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string pair_str(Int a, Int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

int failures = 0;

void report(const std::string& id, const std::string& title, Check c,
            double seconds, double budget) {
  std::ostringstream line;
  const bool in_time = budget <= 0 || seconds < budget;
  if (!in_time && c.ok) {
    c.ok = false;
    c.detail = "over time budget";
  }
  line << (c.ok ? "[PASS] " : "[FAIL] ") << id << " " << title;
  line << " (" << seconds << " s";
  if (budget > 0) line << ", budget " << budget << " s";
  line << ")";
  if (!c.ok) line << ": " << c.detail;
  std::cout << line.str() << std::endl;
  if (!c.ok) ++failures;
}

void run_timed(const std::string& id, const std::string& title, double budget,
               const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const auto t1 = std::chrono::steady_clock::now();
  report(id, title, c, std::chrono::duration<double>(t1 - t0).count(), budget);
}

bool coprime(Int a, Int b) { return std::gcd(a, b) == 1; }

// ---------------------------------------------------------------------------

void farey_oracle(Check& c) {
  for (Int r = 2; r <= kFareyMaxRank; ++r) {
    for (Int d = 1; d < r; ++d) {
      if (!coprime(r, d)) continue;
      const auto hits = oracle::unimodular_points_in_xi(r, d);
      const std::string at = pair_str(r, d);
      c.require(hits.size() == 1, at + ": " + std::to_string(hits.size()) + " points in region");
      if (hits.size() != 1) return;
      const FareySplit sp = farey_split(RankDegree(r, d));
      const Int s = sp.left.rank(), e = sp.left.deg();
      const Int t = sp.right.rank(), f = sp.right.deg();
      c.require(s == hits[0].first && e == hits[0].second, at + ": split differs from scan");
      c.require(d * s - r * e == 1, at + ": ds-re");
      c.require(r * f - t * d == 1, at + ": rf-td");
      c.require(s * f - t * e == 1, at + ": sf-te");
      c.require(s + t == r && e + f == d, at + ": mediant");
      // e/s < d/r < f/t
      c.require(e * r < d * s && d * t < f * r, at + ": interlacing");
      if (!c.ok) return;
    }
  }
}

void farey_stable(Check& c) {
  for (Int r = 2; r <= kStableMaxRank; ++r) {
    for (Int d = 1; d < r; ++d) {
      if (!coprime(r, d)) continue;
      const std::string at = pair_str(r, d);
      const FareySplit sp = farey_split(RankDegree(r, d));
      const auto cert = certify_stability(to_admissible(sp));
      c.require(cert.verdict == Verdict::Pass, at + ": verdict FAIL");
      c.require(cert.destabilizers.empty(), at + ": destabilizers listed");
      c.require(cert.cases_checked.case_ii.count() == sp.right.rank() - 1 &&
                    cert.cases_checked.case_iii.count() == sp.left.rank() - 1,
                at + ": sweep ranges");
      if (r <= kFullRangeMaxRank) {
        const auto full = oracle::full_range_destabilizers(
            r, d, sp.left.rank(), sp.left.deg());
        c.require(full.empty(), at + ": full-range enumeration finds a destabilizer");
      }
      if (!c.ok) return;
    }
  }
  // The maximal-degree reduction must agree with full-range enumeration on
  // non-Farey splits too, where destabilizers do occur.
  int splits = 0, failing = 0;
  for (Int r = 3; r <= kFullRangeMaxRank; ++r) {
    for (Int d = 1; d < r; ++d) {
      if (!coprime(r, d)) continue;
      for (Int s = 1; s < r; ++s) {
        for (Int e = 0; e * r < d * s; ++e) {
          const Int t = r - s, f = d - e;
          if (!coprime(s, e) || !coprime(t, f)) continue;
          const auto cert = certify_stability(
              admissible_split(RankDegree(r, d), RankDegree(s, e)));
          const bool oracle_fail = !oracle::full_range_destabilizers(r, d, s, e).empty();
          ++splits;
          failing += oracle_fail;
          c.require((cert.verdict == Verdict::Fail) == oracle_fail,
                    pair_str(r, d) + " left " + pair_str(s, e) + ": reduction disagrees");
          if (!c.ok) return;
        }
      }
    }
  }
  c.require(splits > 1000 && failing > 0 && failing < splits,
            "non-Farey sweep too small: " + std::to_string(splits) + " splits, " +
                std::to_string(failing) + " failing");
}

void witness(Check& c) {
  const auto split = admissible_split(RankDegree(7, 3), RankDegree(4, 1));
  const auto hit = find_destabilizer(split);
  c.require(hit.has_value(), "no destabilizer");
  if (!hit) return;
  c.require(hit->case_tag == SubbundleCase::II, "first destabilizer not case II");
  c.require(hit->rank == 2 && hit->deg == 1, "first destabilizer not (2,1)");
  // slope 1/2 >= 3/7
  c.require(hit->deg * 7 >= 3 * hit->rank, "destabilizer slope below 3/7");
}

void riemann_roch(Check& c) {
  for (Int r = 2; r <= kRRMaxRank; ++r) {
    for (Int d = 1; d < r; ++d) {
      if (!coprime(r, d)) continue;
      const FareySplit sp = farey_split(RankDegree(r, d));
      const Int s = sp.left.rank(), t = sp.right.rank();
      const AdmissibleSplit adm = to_admissible(sp);
      for (Int g = 0; g <= kRRMaxGenus; ++g) {
        const std::string at = pair_str(r, d) + " g=" + std::to_string(g);
        const CurveData curve(g);
        const Int chi = euler_char(curve, adm);
        const Int closed = 1 + s * t * (g - 1);
        c.require(chi == -closed, at + ": euler_char");
        if (closed >= 0) {
          c.require(ext1_dim(curve, adm) == -chi, at + ": ext1_dim != -euler_char");
        }
        const auto open = correspondence_profile(curve, RankDegree(r, d), false);
        const auto fixed = correspondence_profile(curve, RankDegree(r, d), true);
        c.require(open.ext1_dim == -open.euler_char && open.ext1_dim == closed,
                  at + ": profile ext1");
        c.require(open.dim_gap == s * t * (g - 1) - 1, at + ": unfixed gap");
        c.require(fixed.dim_gap == (s * t + 1) * (g - 1), at + ": fixed gap");
        c.require(open.dim_target == r * r * (g - 1) + 1, at + ": dim M");
        c.require(fixed.dim_target == (r * r - 1) * (g - 1), at + ": dim N");
        if (!c.ok) return;
      }
    }
  }
}

void anchor(Check& c) {
  const CurveData curve(2);
  const auto open = correspondence_profile(curve, RankDegree(2, 1), false);
  const auto fixed = correspondence_profile(curve, RankDegree(2, 1), true);
  c.require(open.regime == DimRegime::Stable, "regime");
  c.require(open.dim_z == 5, "dim Z = " + std::to_string(open.dim_z));
  c.require(open.dim_target == 5, "dim M = " + std::to_string(open.dim_target));
  c.require(open.dim_gap == 0, "unfixed gap");
  c.require(fixed.dim_z == 1, "dim Z^det = " + std::to_string(fixed.dim_z));
  c.require(fixed.dim_target == 3, "dim N = " + std::to_string(fixed.dim_target));
  c.require(fixed.dim_gap == 2, "fixed gap");
}

// An abelian group of prime exponent p and order p^k is (Z/p)^k.
void check_elementary_abelian(Check& c, const CayleyTable& table, Int p,
                              Int expected_order, const std::string& at) {
  c.require(static_cast<Int>(table.size()) == expected_order,
            at + ": order " + std::to_string(table.size()));
  c.require(table.is_latin_square(), at + ": not a latin square");
  c.require(table.associative(), at + ": not associative");
  c.require(table.is_abelian(), at + ": not abelian");
  const auto identity = table.identity();
  c.require(identity.has_value(), at + ": no identity");
  if (!identity) return;
  const std::size_t id = *identity;
  for (std::size_t x = 0; x < table.size(); ++x) {
    std::size_t pw = id;
    for (Int k = 0; k < p; ++k) pw = table(pw, x);
    c.require(pw == id, at + ": x^" + std::to_string(p) + " != 1");
  }
}

void groups(Check& c) {
  for (Int r : {2, 3}) {
    for (Int g = 0; g <= kGroupMaxGenus; ++g) {
      const std::string at = "r=" + std::to_string(r) + " g=" + std::to_string(g);
      const auto sym = CurveSymmetry::trivial(g, r);
      const ResolvedSymmetry resolved = resolve(sym);
      const ElementModel restricted(resolved, g, r, false);
      check_elementary_abelian(c, restricted.cayley_table(), r,
                               oracle::ipow(r, 2 * g), at + " restricted");
      const auto desc = g_group(GroupVariant::Restricted, g, r, 1, sym);
      c.require(desc.method == "cayley-table" &&
                    desc.invariants == std::vector<Int>(static_cast<std::size_t>(2 * g), r),
                at + ": restricted description");
      if (r == 2) {
        const ElementModel full(resolved, g, 2, true);
        check_elementary_abelian(c, full.cayley_table(), 2,
                                 oracle::ipow(2, 2 * g + 1), at + " full");
        const auto fdesc = g_group(GroupVariant::Full, g, 2, 1, sym);
        c.require(fdesc.order == oracle::ipow(2, 2 * g + 1) && fdesc.is_abelian == true &&
                      fdesc.invariants == std::vector<Int>(static_cast<std::size_t>(2 * g + 1), 2),
                  at + ": full description");
      }
      if (!c.ok) return;
    }
  }
  // Degree obstruction: no dual branch unless r | 2d.
  for (Int r = 3; r <= 10; ++r) {
    for (Int d = 1; d < r; ++d) {
      if (!coprime(r, d)) continue;
      const std::string at = pair_str(r, d);
      c.require((2 * d) % r != 0, at + ": r divides 2d");
      const auto sym = CurveSymmetry::trivial(3, r);
      const auto full = g_group(GroupVariant::Full, 3, r, d, sym);
      const auto restricted = g_group(GroupVariant::Restricted, 3, r, d, sym);
      c.require(full.order == restricted.order && full.order == oracle::ipow(r, 6),
                at + ": full and restricted orders differ");
      c.require(full.note.find("degree obstruction") != std::string::npos,
                at + ": obstruction not reported");
      if (!c.ok) return;
    }
  }
}

void regimes(Check& c) {
  std::set<Regime> seen;
  auto trivial = [](Int g, Int r) { return CurveSymmetry::trivial(g, r); };

  for (Int g = 3; g <= 5; ++g) {
    for (Int r : {3, 4, 5}) {
      const auto a = autoeq_group(g, r, 1, trivial(g, r));
      seen.insert(a.regime);
      const std::string name = "𝔊°_[" + std::to_string(r) + "]";
      c.require(a.known && a.regime == Regime::GenusAtLeast3RankNot2 &&
                    a.shape == "ℤ² × " + name && a.shift_rank == 2,
                "g>=3 r!=2 shape at g=" + std::to_string(g));
    }
    const auto a = autoeq_group(g, 2, 1, trivial(g, 2));
    seen.insert(a.regime);
    c.require(a.known && a.regime == Regime::GenusAtLeast3Rank2 && a.shape == "ℤ² × 𝔊_[2]",
              "g>=3 r=2 shape");
  }

  const auto hyper = autoeq_group(2, 2, 1, CurveSymmetry::genus2_hyperelliptic(2));
  seen.insert(hyper.regime);
  bool newstead = false;
  for (const auto& cav : hyper.caveats) newstead |= cav.find("Newstead") != std::string::npos;
  c.require(hyper.known && hyper.regime == Regime::Genus2Rank2 &&
                hyper.shape == "ℤ² × 𝔊°_[2]" && newstead,
            "g=2 r=2 shape or caveat");

  const auto unknown = autoeq_group(2, 5, 1, trivial(2, 5));
  seen.insert(unknown.regime);
  c.require(!unknown.known && unknown.regime == Regime::Genus2RankAbove2, "g=2 r=5 not unknown");

  for (Int r = 2; r <= 6; ++r) {
    for (Int d = 1; d < r; ++d) {
      if (!coprime(r, d)) continue;
      const auto pt = autoeq_group(1, r, d, trivial(1, r));
      seen.insert(pt.regime);
      bool point = false;
      for (const auto& cav : pt.caveats) point |= cav.find("single point") != std::string::npos;
      c.require(pt.known && pt.regime == Regime::Genus1 && point,
                "g=1 point report at " + pair_str(r, d));
    }
  }

  try {
    (void)autoeq_group(0, 2, 1, trivial(0, 2));
    c.require(false, "g=0 r=2 did not throw");
  } catch (const Error& e) {
    c.require(e.kind() == ErrorKind::NoStableBundles, "g=0 r=2 wrong error kind");
  }
  seen.insert(autoeq_group(0, 1, 0, trivial(0, 1)).regime);
  c.require(seen.size() == 6, "regimes covered: " + std::to_string(seen.size()));
}

struct ProcessResult {
  int code;
  std::string out;
};

ProcessResult run_process(const std::string& cli, const std::string& args) {
  const std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void cli_contract(Check& c, const std::string& cli) {
  const char* commands[] = {
      "split 5 2",         "tree 13 5",     "certify 13 5", "certify 7 3 --left 4 1",
      "dims 2 2 1",        "dims 4 7 3 --fixed-det",       "autoeq 3 3 1",
      "autoeq 2 2 1",      "autoeq 2 3 1",  "normalize 7 -4"};
  for (const char* args : commands) {
    const std::string a = std::string(args) + " --json";
    const auto first = run_process(cli, a);
    const auto second = run_process(cli, a);
    c.require(!first.out.empty(), std::string(args) + ": no output");
    c.require(first.out == second.out && first.code == second.code,
              std::string(args) + ": runs differ");
  }
  const std::pair<const char*, int> codes[] = {
      {"split 5 2 --json", 0},
      {"certify 7 3 --left 4 1 --json", 1},
      {"split 4 2 --json", 2},
      {"autoeq 2 3 1 --json", 3}};
  for (const auto& [args, expected] : codes) {
    const int got = run_process(cli, args).code;
    c.require(got == expected, std::string(args) + ": exit " + std::to_string(got) +
                                   ", expected " + std::to_string(expected));
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-extcorr>\n";
    return 2;
  }
  const std::string cli = argv[1];

  run_timed("AC1", "Farey uniqueness oracle, 2 <= r <= 500", kBudgetFareyOracle, farey_oracle);
  run_timed("AC2", "Farey split certifies PASS, r <= 80", kBudgetFareyStable, farey_stable);
  run_timed("AC3", "necessity witness (7,3) = (4,1) + (3,2)", kBudgetWitness, witness);
  run_timed("AC4", "Riemann-Roch identities, r <= 80, g <= 10", kBudgetRiemannRoch, riemann_roch);
  run_timed("AC5", "genus 2 rank 2 dimension anchor", 0, anchor);
  run_timed("AC6", "group classification by Cayley tables", kBudgetGroups, groups);
  run_timed("AC7", "autoequivalence regimes", 0, regimes);
  run_timed("AC8", "CLI determinism and exit codes", 0,
            [&](Check& c) { cli_contract(c, cli); });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
