#include "extcorr/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace extcorr {

namespace {

constexpr std::ptrdiff_t kUndef = -1;

std::size_t column(const Letter& l) { return 2 * l.gen + (l.inverse ? 1 : 0); }
std::size_t inverse_column(std::size_t c) { return c ^ 1U; }

// HLT enumeration with coincidence processing as in Holt, Eick and O'Brien,
// Handbook of Computational Group Theory, section 5.1.
class CosetTable {
 public:
  CosetTable(std::size_t columns, std::size_t limit)
      : cols_(columns), limit_(limit) {
    add_row();
  }

  std::size_t size() const { return parent_.size(); }
  bool live(std::size_t c) const { return parent_[c] == c; }
  std::ptrdiff_t get(std::size_t c, std::size_t x) const {
    return table_[c * cols_ + x];
  }
  void set(std::size_t c, std::size_t x, std::ptrdiff_t v) {
    table_[c * cols_ + x] = v;
  }

  void define(std::size_t c, std::size_t x) {
    const std::size_t n = add_row();
    set(c, x, static_cast<std::ptrdiff_t>(n));
    set(n, inverse_column(x), static_cast<std::ptrdiff_t>(c));
  }

  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::size_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && get(f, w[i]) != kUndef) {
        f = static_cast<std::size_t>(get(f, w[i]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && get(b, inverse_column(w[j])) != kUndef) {
        b = static_cast<std::size_t>(get(b, inverse_column(w[j])));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[i], static_cast<std::ptrdiff_t>(b));
        set(b, inverse_column(w[i]), static_cast<std::ptrdiff_t>(f));
        return;
      }
      define(f, w[i]);
    }
  }

 private:
  std::size_t add_row() {
    if (parent_.size() >= limit_) {
      throw Error(ErrorKind::LimitExceeded,
                  "coset enumeration exceeded " + std::to_string(limit_) +
                      " cosets (group infinite or too large)");
    }
    const std::size_t n = parent_.size();
    parent_.push_back(n);
    table_.resize(table_.size() + cols_, kUndef);
    return n;
  }

  std::size_t rep(std::size_t c) {
    std::size_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const std::size_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t g = queue[qi];
      for (std::size_t x = 0; x < cols_; ++x) {
        if (get(g, x) == kUndef) continue;
        const auto d = static_cast<std::size_t>(get(g, x));
        set(d, inverse_column(x), kUndef);
        const std::size_t mu = rep(g);
        const std::size_t nu = rep(d);
        if (get(mu, x) != kUndef) {
          merge(nu, static_cast<std::size_t>(get(mu, x)), queue);
        } else if (get(nu, inverse_column(x)) != kUndef) {
          merge(mu, static_cast<std::size_t>(get(nu, inverse_column(x))), queue);
        } else {
          set(mu, x, static_cast<std::ptrdiff_t>(nu));
          set(nu, inverse_column(x), static_cast<std::ptrdiff_t>(mu));
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t limit_;
  std::vector<std::ptrdiff_t> table_;
  std::vector<std::size_t> parent_;
};

}  // namespace

namespace {

Word inverse_of(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l.inverse = !l.inverse;
  return out;
}

// word   := factor*
// factor := (name | "1" | "(" word ")") ["^" integer]
class WordParser {
 public:
  WordParser(const std::string& text, const std::vector<std::string>& gens)
      : text_(text), gens_(gens) {}

  Word parse() {
    Word w = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::InvalidInput, "bad word '" + text_ + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '*')) {
      ++pos_;
    }
  }

  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  Word sequence() {
    Word out;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return out;
      Word f = factor();
      out.insert(out.end(), f.begin(), f.end());
    }
  }

  Word factor() {
    Word base;
    if (text_[pos_] == '(') {
      ++pos_;
      base = sequence();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      if (name.empty()) fail("expected a generator");
      if (name != "1") {
        const auto it = std::find(gens_.begin(), gens_.end(), name);
        if (it == gens_.end()) fail("unknown generator '" + name + "'");
        base.push_back({static_cast<std::size_t>(it - gens_.begin()), false});
      }
    }
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const std::size_t start = pos_;
      if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      long long k = 0;
      const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, k);
      if (ec != std::errc() || ptr != text_.data() + pos_) fail("bad exponent");
      if (k > 10'000 || k < -10'000) fail("exponent too large");
      const Word unit = k < 0 ? inverse_of(base) : base;
      base.clear();
      for (long long i = 0; i < (k < 0 ? -k : k); ++i) base.insert(base.end(), unit.begin(), unit.end());
    }
    return base;
  }

  const std::string& text_;
  const std::vector<std::string>& gens_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text,
                const std::vector<std::string>& generators) {
  return WordParser(text, generators).parse();
}

std::size_t EnumeratedGroup::apply(std::size_t x, const Word& w) const {
  for (const Letter& l : w) x = act_[x * 2 * gens_ + column(l)];
  return x;
}

CayleyTable EnumeratedGroup::cayley_table() const {
  const std::size_t n = order();
  std::vector<std::uint32_t> prod(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      prod[x * n + y] = static_cast<std::uint32_t>(apply(x, words_[y]));
    }
  }
  return CayleyTable(n, std::move(prod));
}

EnumeratedGroup enumerate_cosets(const Presentation& pres,
                                 std::size_t max_cosets) {
  const std::size_t k = pres.generators.size();
  EnumeratedGroup out;
  out.gens_ = k;
  if (k == 0) {
    out.words_.push_back({});
    return out;
  }
  const std::size_t cols = 2 * k;

  std::vector<std::vector<std::size_t>> relators;
  for (const Word& w : pres.relators) {
    std::vector<std::size_t> cw;
    for (const Letter& l : w) cw.push_back(column(l));
    relators.push_back(std::move(cw));
  }

  CosetTable table(cols, max_cosets);
  for (std::size_t c = 0; c < table.size(); ++c) {
    for (const auto& rel : relators) {
      if (!table.live(c)) break;
      table.scan_and_fill(c, rel);
    }
    for (std::size_t x = 0; x < cols; ++x) {
      if (!table.live(c)) break;
      if (table.get(c, x) == kUndef) table.define(c, x);
    }
  }

  // Renumber live cosets in breadth-first order from the identity coset so
  // that element numbering and words are canonical.
  std::vector<std::ptrdiff_t> index(table.size(), kUndef);
  std::vector<std::size_t> order{0};
  index[0] = 0;
  out.words_.push_back({});
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    const std::size_t c = order[qi];
    for (std::size_t x = 0; x < cols; ++x) {
      const auto d = static_cast<std::size_t>(table.get(c, x));
      if (index[d] == kUndef) {
        index[d] = static_cast<std::ptrdiff_t>(order.size());
        order.push_back(d);
        Word w = out.words_[qi];
        w.push_back({x / 2, (x & 1U) != 0});
        out.words_.push_back(std::move(w));
      }
    }
  }
  out.act_.resize(order.size() * cols);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t x = 0; x < cols; ++x) {
      out.act_[i * cols + x] = static_cast<std::size_t>(
          index[static_cast<std::size_t>(table.get(order[i], x))]);
    }
  }
  return out;
}

}  // namespace extcorr
