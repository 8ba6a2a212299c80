#include "cdlat/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace cdlat {

std::uint64_t AbelianSpec::order() const {
  std::uint64_t n = 1;
  for (std::uint32_t f : factors) n *= f;
  return n;
}

std::vector<std::uint32_t> AbelianSpec::elementary_divisors() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t f : factors) {
    std::uint32_t rest = f;
    for (std::uint32_t p = 2; rest > 1; ++p) {
      if (rest % p) continue;
      std::uint32_t q = 1;
      while (rest % p == 0) {
        rest /= p;
        q *= p;
      }
      out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> AbelianSpec::invariant_factors() const {
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_prime;
  for (std::uint32_t q : elementary_divisors())
    by_prime[static_cast<std::uint32_t>(smallest_prime_divisor(q))].push_back(
        q);
  for (auto& [p, qs] : by_prime) std::sort(qs.rbegin(), qs.rend());
  std::vector<std::uint32_t> rev;
  for (std::size_t i = 0;; ++i) {
    std::uint64_t d = 1;
    for (auto& [p, qs] : by_prime)
      if (i < qs.size()) d *= qs[i];
    if (d == 1) break;
    rev.push_back(static_cast<std::uint32_t>(d));
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::uint64_t AbelianSpec::exponent() const {
  std::uint64_t e = 1;
  for (std::uint32_t f : factors) e = std::lcm(e, std::uint64_t{f});
  return e;
}

bool AbelianSpec::is_elementary_abelian_2() const {
  auto ed = elementary_divisors();
  return !ed.empty() &&
         std::all_of(ed.begin(), ed.end(), [](auto q) { return q == 2; });
}

bool AbelianSpec::is_z2m_z4_type() const {
  auto ed = elementary_divisors();
  std::size_t fours = std::count(ed.begin(), ed.end(), 4u);
  std::size_t twos = std::count(ed.begin(), ed.end(), 2u);
  return fours == 1 && twos + fours == ed.size();
}

namespace {

void validate_factors(const AbelianSpec& a) {
  for (std::uint32_t f : a.factors)
    if (f < 2) throw std::invalid_argument("cyclic factor must be >= 2");
  if (a.order() > GroupTable::max_order)
    throw std::invalid_argument("abelian group order exceeds the table cap");
}

struct MixedRadix {
  std::vector<std::uint32_t> factors;
  std::vector<std::uint32_t> strides;  // strides[r] = prod_{j<r} factors[j]
  std::uint32_t order;

  explicit MixedRadix(const AbelianSpec& a)
      : factors(a.factors), order(static_cast<std::uint32_t>(a.order())) {
    strides.resize(factors.size());
    std::uint32_t s = 1;
    for (std::size_t r = 0; r < factors.size(); ++r) {
      strides[r] = s;
      s *= factors[r];
    }
  }

  void decode(std::uint32_t x, std::vector<std::uint32_t>& d) const {
    d.resize(factors.size());
    for (std::size_t r = 0; r < factors.size(); ++r) {
      d[r] = x % factors[r];
      x /= factors[r];
    }
  }

  std::string name(std::uint32_t x) const {
    std::string s = "(";
    for (std::size_t r = 0; r < factors.size(); ++r) {
      if (r) s += ',';
      s += std::to_string(x % factors[r]);
      x /= factors[r];
    }
    return s + ")";
  }
};

}  // namespace

GroupTable abelian(const AbelianSpec& a) {
  validate_factors(a);
  MixedRadix mr(a);
  std::uint32_t n = mr.order;
  // fold the factors: extend the table of the product built so far by one
  // cyclic factor at a time
  std::vector<std::uint16_t> mul{0};
  std::uint32_t cur = 1;
  for (std::uint32_t f : mr.factors) {
    std::uint32_t next_n = cur * f;
    std::vector<std::uint16_t> next(std::size_t{next_n} * next_n);
    for (std::uint32_t y1 = 0; y1 < f; ++y1)
      for (std::uint32_t x1 = 0; x1 < cur; ++x1) {
        std::size_t rowbase = std::size_t{x1 + cur * y1} * next_n;
        const std::uint16_t* oldrow = mul.data() + std::size_t{x1} * cur;
        for (std::uint32_t y2 = 0; y2 < f; ++y2) {
          std::uint32_t ysum = cur * ((y1 + y2) % f);
          for (std::uint32_t x2 = 0; x2 < cur; ++x2)
            next[rowbase + (x2 + cur * y2)] =
                static_cast<std::uint16_t>(oldrow[x2] + ysum);
        }
      }
    mul = std::move(next);
    cur = next_n;
  }
  std::vector<std::string> names(n);
  for (std::uint32_t i = 0; i < n; ++i) names[i] = mr.name(i);
  return GroupTable::from_table(n, std::move(mul), std::move(names));
}

GroupTable dicyclic(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("dicyclic parameter must be >= 1");
  std::uint64_t order = 4ull * n;
  if (order > GroupTable::max_order)
    throw std::invalid_argument("dicyclic order exceeds the table cap");
  std::uint32_t m = 2 * n;  // |<a>|
  std::uint32_t N = static_cast<std::uint32_t>(order);
  std::vector<std::uint16_t> mul(std::size_t{N} * N);
  auto idx = [&](std::uint32_t i, std::uint32_t e) { return i + m * e; };
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t e = 0; e < 2; ++e)
      for (std::uint32_t j = 0; j < m; ++j)
        for (std::uint32_t f = 0; f < 2; ++f) {
          std::uint32_t r;
          if (e == 0) {
            r = idx((i + j) % m, f);
          } else if (f == 0) {
            r = idx((i + m - j) % m, 1);
          } else {
            r = idx((i + m - j + n) % m, 0);
          }
          mul[std::size_t{idx(i, e)} * N + idx(j, f)] =
              static_cast<std::uint16_t>(r);
        }
  std::vector<std::string> names(N);
  for (std::uint32_t i = 0; i < m; ++i) {
    std::string ai = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
    names[idx(i, 0)] = i == 0 ? "1" : ai;
    names[idx(i, 1)] = i == 0 ? "x" : ai + "*x";
  }
  return GroupTable::from_table(N, std::move(mul), std::move(names));
}

GroupTable generalized_dicyclic(const AbelianSpec& a, Elem t) {
  validate_factors(a);
  std::uint64_t na = a.order();
  if (na % 2 != 0)
    throw std::invalid_argument("generalized dicyclic needs |A| even");
  if (2 * na > GroupTable::max_order)
    throw std::invalid_argument("generalized dicyclic order exceeds the cap");
  GroupTable A = abelian(a);
  std::uint32_t m = A.order();
  if (t == 0 || t >= m || A.mul(t, t) != GroupTable::identity)
    throw std::invalid_argument("t must be an involution of A");
  std::uint32_t N = 2 * m;
  std::vector<std::uint16_t> mul(std::size_t{N} * N);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t e = 0; e < 2; ++e)
      for (std::uint32_t j = 0; j < m; ++j)
        for (std::uint32_t f = 0; f < 2; ++f) {
          std::uint32_t r;
          if (e == 0) {
            r = A.mul(i, j) + m * f;
          } else if (f == 0) {
            r = A.mul(i, A.inv(j)) + m;
          } else {
            r = A.mul(A.mul(i, A.inv(j)), t);
          }
          mul[std::size_t{i + m * e} * N + (j + m * f)] =
              static_cast<std::uint16_t>(r);
        }
  std::vector<std::string> names(N);
  for (std::uint32_t i = 0; i < m; ++i) {
    names[i] = A.name(i);
    names[i + m] = A.name(i) + "*x";
  }
  return GroupTable::from_table(N, std::move(mul), std::move(names));
}

std::vector<Elem> involutions(const GroupTable& g) {
  std::vector<Elem> out;
  for (Elem x = 1; x < g.order(); ++x)
    if (g.mul(x, x) == GroupTable::identity) out.push_back(x);
  return out;
}

GroupTable semidirect_by_automorphism(const AbelianSpec& a,
                                      std::span<const Elem> images,
                                      std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("cyclic factor order must be >= 1");
  if (k == 1) {
    GroupTable A = abelian(a);
    MixedRadix mr(a);
    for (std::size_t r = 0; r < a.factors.size(); ++r)
      if (r >= images.size() || images[r] != mr.strides[r])
        throw std::invalid_argument("sigma^1 = id forces the identity map");
    return A;
  }
  return semidirect_abelian(a, AbelianSpec{{k}},
                            {std::vector<Elem>(images.begin(), images.end())});
}

GroupTable semidirect_abelian(const AbelianSpec& a, const AbelianSpec& b,
                              const std::vector<std::vector<Elem>>& actions) {
  validate_factors(a);
  validate_factors(b);
  if (a.order() * b.order() > GroupTable::max_order)
    throw std::invalid_argument("semidirect product exceeds the table cap");
  GroupTable A = abelian(a);
  GroupTable B = abelian(b);
  MixedRadix mra(a), mrb(b);
  std::uint32_t na = A.order(), nb = B.order();
  if (actions.size() != b.factors.size())
    throw std::invalid_argument("one action list needed per factor of B");

  // full automorphism map for each generator of B
  std::vector<std::vector<std::uint16_t>> sigma(actions.size());
  for (std::size_t r = 0; r < actions.size(); ++r) {
    const auto& imgs = actions[r];
    if (imgs.size() != a.factors.size())
      throw std::invalid_argument("action must list one image per factor of A");
    for (std::size_t j = 0; j < imgs.size(); ++j) {
      if (imgs[j] >= na)
        throw std::invalid_argument("automorphism image out of range");
      if (a.factors[j] % element_order(A, imgs[j]) != 0)
        throw std::invalid_argument(
            "image order must divide the generator order");
    }
    // powers of each image, then assemble the homomorphism digit-wise
    std::vector<std::vector<Elem>> pows(imgs.size());
    for (std::size_t j = 0; j < imgs.size(); ++j) {
      pows[j].resize(a.factors[j]);
      Elem p = GroupTable::identity;
      for (std::uint32_t d = 0; d < a.factors[j]; ++d) {
        pows[j][d] = p;
        p = A.mul(p, imgs[j]);
      }
    }
    auto& map = sigma[r];
    map.resize(na);
    std::vector<std::uint32_t> dig;
    std::vector<char> seen(na, 0);
    for (std::uint32_t x = 0; x < na; ++x) {
      mra.decode(x, dig);
      Elem y = GroupTable::identity;
      for (std::size_t j = 0; j < dig.size(); ++j)
        y = A.mul(y, pows[j][dig[j]]);
      map[x] = static_cast<std::uint16_t>(y);
      if (seen[y]) throw std::invalid_argument("action is not a bijection");
      seen[y] = 1;
    }
    // sigma_r^{f_r} must be the identity
    for (std::size_t j = 0; j < a.factors.size(); ++j) {
      Elem y = static_cast<Elem>(mra.strides[j]);
      for (std::uint32_t s = 0; s < b.factors[r]; ++s) y = map[y];
      if (y != mra.strides[j])
        throw std::invalid_argument("automorphism order must divide |<b_r>|");
    }
  }
  for (std::size_t r = 0; r < sigma.size(); ++r)
    for (std::size_t s = r + 1; s < sigma.size(); ++s)
      for (std::size_t j = 0; j < a.factors.size(); ++j) {
        Elem g = static_cast<Elem>(mra.strides[j]);
        if (sigma[r][sigma[s][g]] != sigma[s][sigma[r][g]])
          throw std::invalid_argument("actions must commute pairwise");
      }

  // compose the per-generator maps into one map per element of B; each map
  // extends the one at the previous index in its lowest nonzero digit
  std::vector<std::vector<std::uint16_t>> maps(nb);
  std::vector<std::uint32_t> digb;
  for (std::uint32_t bidx = 0; bidx < nb; ++bidx) {
    auto& map = maps[bidx];
    map.resize(na);
    if (bidx == 0) {
      for (std::uint32_t x = 0; x < na; ++x)
        map[x] = static_cast<std::uint16_t>(x);
      continue;
    }
    mrb.decode(bidx, digb);
    std::size_t r = 0;
    while (digb[r] == 0) ++r;
    const auto& prev = maps[bidx - mrb.strides[r]];
    for (std::uint32_t x = 0; x < na; ++x) map[x] = sigma[r][prev[x]];
  }

  std::uint32_t N = na * nb;
  std::vector<std::uint16_t> mul(std::size_t{N} * N);
  for (std::uint32_t b1 = 0; b1 < nb; ++b1)
    for (std::uint32_t a1 = 0; a1 < na; ++a1) {
      std::size_t rowbase = std::size_t{a1 + na * b1} * N;
      const auto& map = maps[b1];
      for (std::uint32_t b2 = 0; b2 < nb; ++b2)
        for (std::uint32_t a2 = 0; a2 < na; ++a2)
          mul[rowbase + (a2 + na * b2)] = static_cast<std::uint16_t>(
              A.mul(a1, map[a2]) + na * B.mul(b1, b2));
    }
  std::vector<std::string> names(N);
  for (std::uint32_t b1 = 0; b1 < nb; ++b1)
    for (std::uint32_t a1 = 0; a1 < na; ++a1)
      names[a1 + na * b1] = "(" + A.name(a1) + ";" + B.name(b1) + ")";
  return GroupTable::from_table(N, std::move(mul), std::move(names));
}

ExtraspecialKind parse_extraspecial_kind(const std::string& token,
                                         std::uint32_t p) {
  if (p == 2) {
    if (token == "d") return ExtraspecialKind::d8;
    if (token == "q") return ExtraspecialKind::q8;
    throw std::invalid_argument("extraspecial kind for p = 2 must be d or q");
  }
  if (token == "p") return ExtraspecialKind::exp_p;
  if (token == "p2") return ExtraspecialKind::exp_p2;
  throw std::invalid_argument("extraspecial kind for odd p must be p or p2");
}

std::string extraspecial_kind_token(ExtraspecialKind kind) {
  switch (kind) {
    case ExtraspecialKind::d8: return "d";
    case ExtraspecialKind::q8: return "q";
    case ExtraspecialKind::exp_p: return "p";
    case ExtraspecialKind::exp_p2: return "p2";
  }
  internal_fail("unknown extraspecial kind");
}

namespace {

GroupTable dihedral8() {
  // Z_4 x| <x>, x acting by inversion
  return semidirect_by_automorphism(AbelianSpec{{4}}, std::vector<Elem>{3}, 2);
}

GroupTable heisenberg(std::uint32_t p) {
  std::uint32_t n = p * p * p;
  std::vector<std::uint16_t> mul(std::size_t{n} * n);
  auto idx = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return a + p * b + p * p * c;
  };
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::uint32_t a2 = 0; a2 < p; ++a2)
          for (std::uint32_t b2 = 0; b2 < p; ++b2)
            for (std::uint32_t c2 = 0; c2 < p; ++c2)
              mul[std::size_t{idx(a, b, c)} * n + idx(a2, b2, c2)] =
                  static_cast<std::uint16_t>(idx(
                      (a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p));
  return GroupTable::from_table(n, std::move(mul));
}

GroupTable modular_p3(std::uint32_t p) {
  // <x, y | x^{p^2} = y^p = 1, y^-1 x y = x^{1+p}>
  std::uint32_t p2 = p * p, n = p2 * p;
  std::vector<std::uint16_t> mul(std::size_t{n} * n);
  std::vector<std::uint32_t> tw(p);  // (1+p)^j mod p^2
  tw[0] = 1;
  for (std::uint32_t j = 1; j < p; ++j) tw[j] = tw[j - 1] * (1 + p) % p2;
  for (std::uint32_t i = 0; i < p2; ++i)
    for (std::uint32_t j = 0; j < p; ++j)
      for (std::uint32_t i2 = 0; i2 < p2; ++i2)
        for (std::uint32_t j2 = 0; j2 < p; ++j2)
          mul[std::size_t{i + p2 * j} * n + (i2 + p2 * j2)] =
              static_cast<std::uint16_t>((i + i2 * tw[j]) % p2 +
                                         p2 * ((j + j2) % p));
  return GroupTable::from_table(n, std::move(mul));
}

// central generator of order p in each block, by construction
Elem block_central(const GroupTable&, std::uint32_t p, bool heis_block) {
  return heis_block ? p * p : p;
}

GroupTable central_product(const GroupTable& x, Elem zx, const GroupTable& y,
                           Elem zy, std::uint32_t p) {
  GroupTable prod = direct_product(x, y);
  Elem diag = zx + x.order() * y.inv(zy);
  Subgroup n = generated_subgroup(prod, std::vector<Elem>{diag});
  internal_check(n.order == p, "central product glue subgroup has order p");
  return quotient_by_central(prod, n);
}

}  // namespace

GroupTable extraspecial(std::uint32_t p, std::uint32_t n,
                        ExtraspecialKind kind) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n != 3 && n != 5)
    throw std::invalid_argument("extraspecial order must be p^3 or p^5");
  bool two_kind = kind == ExtraspecialKind::d8 || kind == ExtraspecialKind::q8;
  if ((p == 2) != two_kind)
    throw std::invalid_argument("extraspecial kind does not match p");

  GroupTable g = [&] {
    if (p == 2) {
      if (n == 3)
        return kind == ExtraspecialKind::d8 ? dihedral8() : dicyclic(2);
      GroupTable d8 = dihedral8();
      GroupTable second =
          kind == ExtraspecialKind::d8 ? dihedral8() : dicyclic(2);
      return central_product(d8, 2, second, 2, 2);
    }
    if (n == 3)
      return kind == ExtraspecialKind::exp_p ? heisenberg(p) : modular_p3(p);
    GroupTable h = heisenberg(p);
    Elem zh = block_central(h, p, true);
    GroupTable second = kind == ExtraspecialKind::exp_p
                            ? heisenberg(p)
                            : modular_p3(p);
    Elem zs = block_central(second, p,
                            kind == ExtraspecialKind::exp_p);
    return central_product(h, zh, second, zs, p);
  }();

  // type invariants: |Z| = p, G' = Z, G/Z elementary abelian
  Subgroup z = center(g);
  internal_check(z.order == p, "extraspecial center has order p");
  internal_check(derived_subgroup(g).bits == z.bits,
                 "extraspecial derived subgroup equals the center");
  for (Elem e = 0; e < g.order(); ++e) {
    Elem q = GroupTable::identity;
    for (std::uint32_t i = 0; i < p; ++i) q = g.mul(q, e);
    internal_check(z.bits.test(q), "G/Z must be elementary abelian");
  }
  return g;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  std::uint64_t order = std::uint64_t{a.order()} * b.order();
  if (order > GroupTable::max_order)
    throw std::invalid_argument("direct product exceeds the table cap");
  std::uint32_t na = a.order(), N = static_cast<std::uint32_t>(order);
  std::vector<std::uint16_t> mul(std::size_t{N} * N);
  for (std::uint32_t y1 = 0; y1 < b.order(); ++y1)
    for (std::uint32_t x1 = 0; x1 < na; ++x1) {
      std::size_t rowbase = std::size_t{x1 + na * y1} * N;
      const std::uint16_t* arow = a.row(x1);
      const std::uint16_t* brow = b.row(y1);
      for (std::uint32_t y2 = 0; y2 < b.order(); ++y2)
        for (std::uint32_t x2 = 0; x2 < na; ++x2)
          mul[rowbase + (x2 + na * y2)] =
              static_cast<std::uint16_t>(arow[x2] + na * brow[y2]);
    }
  std::vector<std::string> names;
  if (a.has_names() && b.has_names()) {
    names.resize(N);
    for (std::uint32_t y = 0; y < b.order(); ++y)
      for (std::uint32_t x = 0; x < na; ++x)
        names[x + na * y] = "(" + a.name(x) + "," + b.name(y) + ")";
  }
  return GroupTable::from_table(N, std::move(mul), std::move(names));
}

GroupTable quotient_by_central(const GroupTable& g, const Subgroup& n) {
  if (!center(g).bits.contains(n.bits))
    throw std::invalid_argument("quotient subgroup must be central");
  std::uint32_t order = g.order() / n.order;
  std::vector<Elem> reps;
  reps.reserve(order);
  std::vector<std::uint32_t> coset(g.order(), UINT32_MAX);
  std::vector<Elem> nelems = n.bits.indices();
  for (Elem e = 0; e < g.order(); ++e) {
    if (coset[e] != UINT32_MAX) continue;
    std::uint32_t id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(e);
    for (Elem z : nelems) coset[g.mul(z, e)] = id;
  }
  internal_check(reps.size() == order, "coset count mismatch");
  std::vector<std::uint16_t> mul(std::size_t{order} * order);
  for (std::uint32_t i = 0; i < order; ++i)
    for (std::uint32_t j = 0; j < order; ++j)
      mul[std::size_t{i} * order + j] =
          static_cast<std::uint16_t>(coset[g.mul(reps[i], reps[j])]);
  std::vector<std::string> names;
  if (g.has_names()) {
    names.resize(order);
    for (std::uint32_t i = 0; i < order; ++i)
      names[i] = "[" + g.name(reps[i]) + "]";
  }
  return GroupTable::from_table(order, std::move(mul), std::move(names));
}

namespace {

void partitions_of(std::uint32_t e, std::uint32_t maxpart,
                   std::vector<std::uint32_t>& cur,
                   std::vector<std::vector<std::uint32_t>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t part = std::min(e, maxpart); part >= 1; --part) {
    cur.push_back(part);
    partitions_of(e - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<AbelianSpec> abelian_types_of_order(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("order must be positive");
  if (n == 1) return {AbelianSpec{}};
  // factor n, primes ascending
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pe;
  std::uint32_t rest = n;
  for (std::uint32_t p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    std::uint32_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    pe.emplace_back(p, e);
  }
  std::vector<std::vector<std::vector<std::uint32_t>>> parts(pe.size());
  for (std::size_t i = 0; i < pe.size(); ++i) {
    std::vector<std::uint32_t> cur;
    partitions_of(pe[i].second, pe[i].second, cur, parts[i]);
  }
  std::vector<AbelianSpec> out;
  std::vector<std::size_t> pick(pe.size(), 0);
  for (;;) {
    AbelianSpec spec;
    for (std::size_t i = 0; i < pe.size(); ++i)
      for (std::uint32_t part : parts[i][pick[i]]) {
        std::uint32_t q = 1;
        for (std::uint32_t k = 0; k < part; ++k) q *= pe[i].first;
        spec.factors.push_back(q);
      }
    std::sort(spec.factors.begin(), spec.factors.end());
    out.push_back(std::move(spec));
    std::size_t i = 0;
    while (i < pe.size() && ++pick[i] == parts[i].size()) pick[i++] = 0;
    if (i == pe.size()) break;
  }
  return out;
}

}  // namespace cdlat
