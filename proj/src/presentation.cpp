#include "cdlat/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <sstream>

namespace cdlat {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void parse_fail(std::size_t lineno, const std::string& msg) {
  throw std::invalid_argument("presentation line " + std::to_string(lineno) +
                              ": " + msg);
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    std::string line{raw};
    if (std::size_t h = line.find('#'); h != std::string::npos)
      line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream is(line);
    std::string verb;
    is >> verb;
    if (verb == "gens") {
      if (have_gens) parse_fail(lineno, "duplicate gens directive");
      long long k = -1;
      if (!(is >> k) || k < 0 || k > 26)
        parse_fail(lineno, "gens needs a count between 0 and 26");
      std::string rest;
      if (is >> rest) parse_fail(lineno, "trailing tokens after gens");
      p.ngens = static_cast<std::uint32_t>(k);
      have_gens = true;
    } else if (verb == "rel") {
      if (!have_gens) parse_fail(lineno, "rel before gens");
      std::string word;
      std::getline(is, word);
      std::vector<std::int32_t> rel;
      std::size_t wpos = 0;
      while (wpos < word.size()) {
        std::size_t comma = word.find(',', wpos);
        std::string tok = trim(std::string_view(word).substr(
            wpos, comma == std::string::npos ? word.size() - wpos
                                             : comma - wpos));
        wpos = comma == std::string::npos ? word.size() : comma + 1;
        if (tok.empty()) parse_fail(lineno, "empty entry in relator");
        char* end = nullptr;
        long v = std::strtol(tok.c_str(), &end, 10);
        if (end == tok.c_str() || *end != '\0')
          parse_fail(lineno, "bad relator entry '" + tok + "'");
        if (v == 0 || std::llabs(v) > p.ngens)
          parse_fail(lineno, "generator number out of range: " + tok);
        rel.push_back(static_cast<std::int32_t>(v));
      }
      if (rel.empty()) parse_fail(lineno, "empty relator");
      p.relators.push_back(std::move(rel));
    } else {
      parse_fail(lineno, "unknown directive '" + verb + "'");
    }
  }
  if (!have_gens)
    throw std::invalid_argument("presentation: missing gens directive");
  return p;
}

Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open presentation: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

namespace {

constexpr std::uint32_t UNDEF = UINT32_MAX;

// HLT coset enumeration over the trivial subgroup with in-place coincidence
// handling (union-find keyed to the minimal live coset).
class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& pres, std::uint64_t max_rows)
      : nlet_(2 * pres.ngens), max_rows_(max_rows) {
    for (const auto& rel : pres.relators) {
      std::vector<std::uint32_t> w;
      w.reserve(rel.size());
      for (std::int32_t v : rel) w.push_back(letter_of(v));
      relators_.push_back(std::move(w));
    }
    new_coset();
  }

  void run() {
    for (std::uint32_t alpha = 0; alpha < nrows(); ++alpha) {
      if (!alive(alpha)) continue;
      for (const auto& w : relators_) {
        scan_and_fill(alpha, w);
        if (!alive(alpha)) break;
      }
      if (!alive(alpha)) continue;
      for (std::uint32_t x = 0; x < nlet_; ++x)
        if (tab(alpha, x) == UNDEF) define(alpha, x);
    }
  }

  // live cosets in ascending order, re-indexed from 0, as a letter-action
  // table act[c * nlet + x]
  std::vector<std::uint32_t> compact(std::uint32_t& ncosets) const {
    std::vector<std::uint32_t> newid(nrows(), UNDEF);
    std::uint32_t n = 0;
    for (std::uint32_t c = 0; c < nrows(); ++c)
      if (alive(c)) newid[c] = n++;
    std::vector<std::uint32_t> act(std::size_t{n} * nlet_, UNDEF);
    for (std::uint32_t c = 0; c < nrows(); ++c) {
      if (!alive(c)) continue;
      for (std::uint32_t x = 0; x < nlet_; ++x) {
        std::uint32_t d = tab(c, x);
        internal_check(d != UNDEF && alive(d),
                       "coset table incomplete after enumeration");
        act[std::size_t{newid[c]} * nlet_ + x] = newid[d];
      }
    }
    ncosets = n;
    return act;
  }

  std::uint32_t nlive() const { return nlive_; }
  std::uint32_t nletters() const { return nlet_; }

  static std::uint32_t letter_of(std::int32_t v) {
    return v > 0 ? 2 * (static_cast<std::uint32_t>(v) - 1)
                 : 2 * (static_cast<std::uint32_t>(-v) - 1) + 1;
  }
  static std::uint32_t inv_letter(std::uint32_t x) { return x ^ 1u; }

 private:
  std::uint32_t nrows() const {
    return static_cast<std::uint32_t>(parent_.size());
  }
  bool alive(std::uint32_t c) const { return parent_[c] == c; }
  std::uint32_t& tab(std::uint32_t c, std::uint32_t x) {
    return table_[std::size_t{c} * nlet_ + x];
  }
  std::uint32_t tab(std::uint32_t c, std::uint32_t x) const {
    return table_[std::size_t{c} * nlet_ + x];
  }

  std::uint32_t new_coset() {
    if (parent_.size() >= max_rows_)
      throw resource_error("bound exceeded: coset table row budget (" +
                           std::to_string(max_rows_) + " rows)");
    std::uint32_t c = nrows();
    parent_.push_back(c);
    table_.resize(table_.size() + nlet_, UNDEF);
    ++nlive_;
    return c;
  }

  void define(std::uint32_t alpha, std::uint32_t x) {
    std::uint32_t beta = new_coset();
    tab(alpha, x) = beta;
    tab(beta, inv_letter(x)) = alpha;
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::uint32_t nx = parent_[c];
      parent_[c] = r;
      c = nx;
    }
    return r;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    std::uint32_t x = rep(a), y = rep(b);
    if (x == y) return;
    if (x > y) std::swap(x, y);
    parent_[y] = x;
    --nlive_;
    queue_.push_back(y);
  }

  void coincidence(std::uint32_t alpha, std::uint32_t beta) {
    merge(alpha, beta);
    while (!queue_.empty()) {
      std::uint32_t gamma = queue_.front();
      queue_.pop_front();
      for (std::uint32_t x = 0; x < nlet_; ++x) {
        std::uint32_t delta = tab(gamma, x);
        if (delta == UNDEF) continue;
        tab(delta, inv_letter(x)) = UNDEF;
        std::uint32_t mu = rep(gamma), nu = rep(delta);
        if (tab(mu, x) != UNDEF) {
          merge(nu, tab(mu, x));
        } else if (tab(nu, inv_letter(x)) != UNDEF) {
          merge(mu, tab(nu, inv_letter(x)));
        } else {
          tab(mu, x) = nu;
          tab(nu, inv_letter(x)) = mu;
        }
      }
    }
  }

  void scan_and_fill(std::uint32_t alpha, const std::vector<std::uint32_t>& w) {
    std::uint32_t f = alpha, b = alpha;
    std::int64_t i = 0, j = static_cast<std::int64_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && tab(f, w[i]) != UNDEF) f = tab(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tab(b, inv_letter(w[j])) != UNDEF)
        b = tab(b, inv_letter(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        tab(f, w[i]) = b;
        tab(b, inv_letter(w[i])) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  std::uint32_t nlet_;
  std::uint64_t max_rows_;
  std::vector<std::vector<std::uint32_t>> relators_;
  std::vector<std::uint32_t> table_;   // nrows x nlet
  std::vector<std::uint32_t> parent_;  // union-find, rep = minimal index
  std::deque<std::uint32_t> queue_;
  std::uint32_t nlive_ = 0;
};

std::string word_name(const std::vector<std::uint32_t>& letters) {
  if (letters.empty()) return "1";
  std::string s;
  for (std::uint32_t l : letters)
    s += static_cast<char>((l & 1 ? 'A' : 'a') + (l >> 1));
  return s;
}

}  // namespace

GroupTable realize_presentation(const Presentation& p,
                                std::uint32_t order_bound,
                                const TcOptions& opts) {
  if (order_bound == 0 || order_bound > GroupTable::max_order)
    throw std::invalid_argument("order bound out of range");
  if (p.ngens == 0) {
    return GroupTable::from_table(1, {0}, {"1"});
  }
  std::uint64_t max_rows =
      opts.max_cosets ? opts.max_cosets
                      : std::max<std::uint64_t>(65536, 50ull * order_bound);

  CosetEnumerator enumer(p, max_rows);
  enumer.run();

  std::uint32_t n = 0;
  std::vector<std::uint32_t> act = enumer.compact(n);
  internal_check(n == enumer.nlive(), "live coset count mismatch");
  if (n > order_bound)
    throw resource_error("bound exceeded: presented group has order " +
                         std::to_string(n) + " > bound " +
                         std::to_string(order_bound));
  const std::uint32_t nlet = enumer.nletters();
  auto act_at = [&](std::uint32_t c, std::uint32_t x) {
    return act[std::size_t{c} * nlet + x];
  };

  // sanity: involutive consistency and relator closure at every coset
  for (std::uint32_t c = 0; c < n; ++c)
    for (std::uint32_t x = 0; x < nlet; ++x)
      internal_check(
          act_at(act_at(c, x), CosetEnumerator::inv_letter(x)) == c,
          "coset table is not involutive");
  for (const auto& rel : p.relators)
    for (std::uint32_t c = 0; c < n; ++c) {
      std::uint32_t d = c;
      for (std::int32_t v : rel) d = act_at(d, CosetEnumerator::letter_of(v));
      internal_check(d == c, "relator does not close on the coset table");
    }

  // BFS over the regular representation: representative word per element,
  // breadth first, letters in ascending order
  std::vector<std::uint32_t> parent(n, UNDEF), via(n, UNDEF), order_bfs;
  order_bfs.reserve(n);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  order_bfs.push_back(0);
  for (std::size_t qi = 0; qi < order_bfs.size(); ++qi) {
    std::uint32_t c = order_bfs[qi];
    for (std::uint32_t x = 0; x < nlet; ++x) {
      std::uint32_t d = act_at(c, x);
      if (!seen[d]) {
        seen[d] = 1;
        parent[d] = c;
        via[d] = x;
        order_bfs.push_back(d);
      }
    }
  }
  internal_check(order_bfs.size() == n, "regular representation not connected");

  std::vector<std::vector<std::uint32_t>> words(n);
  for (std::uint32_t c : order_bfs) {
    if (c == 0) continue;
    words[c] = words[parent[c]];
    words[c].push_back(via[c]);
  }

  // columns of the multiplication table, each derived from its BFS parent by
  // one letter application; built transposed for contiguous writes
  std::vector<std::uint16_t> colmaj(std::size_t{n} * n);
  for (std::uint32_t i = 0; i < n; ++i)
    colmaj[std::size_t{0} * n + i] = static_cast<std::uint16_t>(i);
  for (std::uint32_t c : order_bfs) {
    if (c == 0) continue;
    const std::uint16_t* prow = colmaj.data() + std::size_t{parent[c]} * n;
    std::uint16_t* crow = colmaj.data() + std::size_t{c} * n;
    std::uint32_t x = via[c];
    for (std::uint32_t i = 0; i < n; ++i)
      crow[i] = static_cast<std::uint16_t>(act_at(prow[i], x));
  }
  std::vector<std::uint16_t> mul(std::size_t{n} * n);
  constexpr std::uint32_t tile = 64;
  for (std::uint32_t ib = 0; ib < n; ib += tile)
    for (std::uint32_t jb = 0; jb < n; jb += tile)
      for (std::uint32_t i = ib; i < std::min(ib + tile, n); ++i)
        for (std::uint32_t j = jb; j < std::min(jb + tile, n); ++j)
          mul[std::size_t{i} * n + j] = colmaj[std::size_t{j} * n + i];
  colmaj.clear();
  colmaj.shrink_to_fit();

  std::vector<std::string> names;
  if (opts.build_names && p.ngens <= 26) {
    names.resize(n);
    for (std::uint32_t c = 0; c < n; ++c) names[c] = word_name(words[c]);
  }
  GroupTable g = GroupTable::from_table(n, std::move(mul), std::move(names));

  // relators must evaluate to the identity as group elements
  for (const auto& rel : p.relators) {
    Elem e = GroupTable::identity;
    for (std::int32_t v : rel)
      e = g.mul(e, static_cast<Elem>(
                       act_at(0, CosetEnumerator::letter_of(v))));
    internal_check(e == GroupTable::identity,
                   "relator is not the identity element");
  }
  return g;
}

}  // namespace cdlat
