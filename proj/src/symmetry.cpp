#include "extcorr/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>

namespace extcorr {

namespace {

[[noreturn]] void bad_symmetry(const std::string& why) {
  throw Error(ErrorKind::BadSymmetry, why);
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Int pow_mod(Int b, Int e, Int p) {
  Int result = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) result = checked::mul(result, b) % p;
    b = checked::mul(b, b) % p;
    e >>= 1;
  }
  return result;
}

// Rank-deficiency test over the prime field F_p.
bool full_rank_mod_prime(std::vector<Int> a, std::size_t n, Int p) {
  for (auto& v : a) v = checked::mod_floor(v, p);
  for (std::size_t col = 0, row = 0; col < n; ++col, ++row) {
    std::size_t pivot = row;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return false;
    for (std::size_t j = 0; j < n; ++j) std::swap(a[row * n + j], a[pivot * n + j]);
    const Int inv = pow_mod(a[row * n + col], p - 2, p);
    for (std::size_t i = row + 1; i < n; ++i) {
      const Int factor = checked::mul(a[i * n + col], inv) % p;
      if (factor == 0) continue;
      for (std::size_t j = col; j < n; ++j) {
        a[i * n + j] = checked::mod_floor(
            a[i * n + j] - checked::mul(factor, a[row * n + j]) % p, p);
      }
    }
  }
  return true;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

Int parse_int(const std::string& s, std::size_t line) {
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::InvalidInput, "symmetry line " + std::to_string(line) +
                                             ": bad integer '" + s + "'");
  }
  return v;
}

bool valid_name(const std::string& name) {
  if (name.empty() || name == "rel" || name == "1") return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

}  // namespace

ModMatrix::ModMatrix(std::size_t n, Int modulus)
    : n_(n), modulus_(modulus), a_(n * n, 0) {
  if (modulus < 1) throw Error(ErrorKind::InvalidInput, "modulus must be >= 1");
}

ModMatrix::ModMatrix(const std::vector<std::vector<Int>>& rows, Int modulus)
    : ModMatrix(rows.size(), modulus) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) {
      throw Error(ErrorKind::BadSymmetry, "matrix is not square");
    }
    for (std::size_t j = 0; j < n_; ++j) {
      a_[i * n_ + j] = checked::mod_floor(rows[i][j], modulus_);
    }
  }
}

ModMatrix ModMatrix::identity(std::size_t n, Int modulus) {
  ModMatrix m(n, modulus);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1 % modulus;
  return m;
}

ModMatrix ModMatrix::operator*(const ModMatrix& rhs) const {
  ModMatrix out(n_, modulus_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Int aik = a_[i * n_ + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        Int& cell = out.a_[i * n_ + j];
        cell = (cell + checked::mul(aik, rhs.a_[k * n_ + j])) % modulus_;
      }
    }
  }
  return out;
}

std::vector<Int> ModMatrix::apply(const std::vector<Int>& v) const {
  std::vector<Int> out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      acc = (acc + checked::mul(a_[i * n_ + j], v[j])) % modulus_;
    }
    out[i] = acc;
  }
  return out;
}

ModMatrix ModMatrix::pow(Int k) const {
  ModMatrix result = identity(n_, modulus_);
  ModMatrix base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

bool ModMatrix::invertible() const {
  for (Int p : prime_factors(modulus_)) {
    if (!full_rank_mod_prime(a_, n_, p)) return false;
  }
  return true;
}

const char* to_string(SymmetryMode m) noexcept {
  switch (m) {
    case SymmetryMode::Trivial: return "trivial";
    case SymmetryMode::Genus2Hyperelliptic: return "genus2-hyperelliptic";
    case SymmetryMode::Supplied: return "supplied";
  }
  return "?";
}

CurveSymmetry CurveSymmetry::trivial(Int genus, Int modulus) {
  if (genus < 0 || modulus < 1) {
    throw Error(ErrorKind::InvalidInput, "need genus >= 0 and modulus >= 1");
  }
  return CurveSymmetry(genus, modulus, SymmetryMode::Trivial);
}

CurveSymmetry CurveSymmetry::genus2_hyperelliptic(Int modulus) {
  if (modulus < 1) throw Error(ErrorKind::InvalidInput, "modulus must be >= 1");
  CurveSymmetry sym(2, modulus, SymmetryMode::Genus2Hyperelliptic);
  std::vector<std::vector<Int>> minus_one(4, std::vector<Int>(4, 0));
  for (std::size_t i = 0; i < 4; ++i) minus_one[i][i] = -1;
  sym.generators_.push_back({"iota", minus_one});
  sym.relations_.push_back("iota^2");
  return sym;
}

CurveSymmetry CurveSymmetry::supplied(Int genus, Int modulus,
                                      std::vector<SymmetryGenerator> generators,
                                      std::vector<std::string> relations) {
  if (genus < 0 || modulus < 1) {
    throw Error(ErrorKind::InvalidInput, "need genus >= 0 and modulus >= 1");
  }
  CurveSymmetry sym(genus, modulus, SymmetryMode::Supplied);
  sym.generators_ = std::move(generators);
  sym.relations_ = std::move(relations);
  return sym;
}

CurveSymmetry parse_symmetry(std::istream& in, Int genus, Int modulus) {
  std::vector<SymmetryGenerator> gens;
  std::vector<std::string> rels;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::InvalidInput,
                  "symmetry line " + std::to_string(lineno) + ": missing ':'");
    }
    const std::string key = trim(line.substr(0, colon));
    const std::string body = trim(line.substr(colon + 1));
    if (key == "rel") {
      const auto eq = body.find('=');
      if (eq == std::string::npos || trim(body.substr(eq + 1)) != "1") {
        throw Error(ErrorKind::InvalidInput, "symmetry line " +
                                                 std::to_string(lineno) +
                                                 ": relation must read '<word> = 1'");
      }
      rels.push_back(trim(body.substr(0, eq)));
      continue;
    }
    if (!valid_name(key)) {
      throw Error(ErrorKind::InvalidInput, "symmetry line " +
                                               std::to_string(lineno) +
                                               ": bad generator name '" + key + "'");
    }
    if (std::any_of(gens.begin(), gens.end(),
                    [&](const auto& g) { return g.name == key; })) {
      throw Error(ErrorKind::InvalidInput, "duplicate generator '" + key + "'");
    }
    SymmetryGenerator gen{key, {}};
    for (const std::string& row : split(body, ';')) {
      if (row.empty()) continue;
      std::vector<Int> values;
      for (const std::string& cell : split(row, ',')) {
        values.push_back(parse_int(cell, lineno));
      }
      gen.torsion_action.push_back(std::move(values));
    }
    gens.push_back(std::move(gen));
  }
  return CurveSymmetry::supplied(genus, modulus, std::move(gens), std::move(rels));
}

ResolvedSymmetry resolve(const CurveSymmetry& sym, std::size_t max_cosets) {
  const auto dim = static_cast<std::size_t>(checked::mul(2, sym.genus()));
  const Int r = sym.modulus();

  Presentation pres;
  std::vector<ModMatrix> gen_matrix;
  for (const auto& g : sym.generators()) {
    if (g.torsion_action.size() != dim) {
      bad_symmetry("generator '" + g.name + "' matrix must be " +
                   std::to_string(dim) + "x" + std::to_string(dim));
    }
    for (const auto& row : g.torsion_action) {
      if (row.size() != dim) {
        bad_symmetry("generator '" + g.name + "' matrix is not square");
      }
    }
    ModMatrix m(g.torsion_action, r);
    if (!m.invertible()) {
      bad_symmetry("generator '" + g.name + "' matrix is not invertible mod " +
                   std::to_string(r));
    }
    pres.generators.push_back(g.name);
    gen_matrix.push_back(std::move(m));
  }
  for (const auto& rel : sym.relations()) {
    pres.relators.push_back(parse_word(rel, pres.generators));
  }

  EnumeratedGroup group = enumerate_cosets(pres, max_cosets);
  CayleyTable table = group.cayley_table();

  // The group forces g^o = 1 with o the order of g; the matrices must agree,
  // after which T(g)^(o-1) serves as the inverse.
  const auto orders = table.element_orders();
  std::vector<ModMatrix> gen_inverse;
  for (std::size_t j = 0; j < gen_matrix.size(); ++j) {
    const std::uint64_t o = orders[group.element_of({{j, false}})];
    if (!(gen_matrix[j].pow(static_cast<Int>(o)) == ModMatrix::identity(dim, r))) {
      bad_symmetry("generator '" + pres.generators[j] +
                   "' matrix does not have order dividing " + std::to_string(o));
    }
    gen_inverse.push_back(gen_matrix[j].pow(static_cast<Int>(o) - 1));
  }

  auto word_action = [&](const Word& w) {
    ModMatrix acc = ModMatrix::identity(dim, r);
    for (const Letter& l : w) {
      acc = (l.inverse ? gen_inverse[l.gen] : gen_matrix[l.gen]) * acc;
    }
    return acc;
  };

  for (std::size_t k = 0; k < pres.relators.size(); ++k) {
    if (!(word_action(pres.relators[k]) == ModMatrix::identity(dim, r))) {
      bad_symmetry("relation '" + sym.relations()[k] + " = 1' fails on the matrices");
    }
  }

  std::vector<ModMatrix> action;
  action.reserve(group.order());
  for (std::size_t x = 0; x < group.order(); ++x) {
    action.push_back(word_action(group.word(x)));
  }
  for (std::size_t x = 0; x < group.order(); ++x) {
    for (std::size_t j = 0; j < gen_matrix.size(); ++j) {
      if (!(action[group.right_mul(x, j)] == gen_matrix[j] * action[x])) {
        bad_symmetry("matrices do not define an action of the presented group");
      }
    }
  }
  return {std::move(group), std::move(action), std::move(table)};
}

}  // namespace extcorr
