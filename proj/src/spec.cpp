#include "cdlat/spec.hpp"

#include <charconv>
#include <stdexcept>

namespace cdlat {
namespace {

[[noreturn]] void bad(std::string_view text, std::size_t pos,
                      const std::string& what) {
  throw std::invalid_argument("spec \"" + std::string(text) + "\": " + what +
                              " at position " + std::to_string(pos));
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  bool eat(char c) {
    if (done() || text[pos] != c) return false;
    ++pos;
    return true;
  }
  std::uint64_t number() {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos,
                                     text.data() + text.size(), v);
    if (ec != std::errc{} || ptr == text.data() + pos)
      bad(text, pos, "expected a number");
    pos = static_cast<std::size_t>(ptr - text.data());
    return v;
  }
  std::vector<std::uint32_t> number_list() {
    std::vector<std::uint32_t> out;
    out.push_back(static_cast<std::uint32_t>(number()));
    while (eat(',')) {
      // a trailing ",t=..." belongs to the caller
      if (!done() && !(peek() >= '0' && peek() <= '9')) {
        --pos;
        break;
      }
      out.push_back(static_cast<std::uint32_t>(number()));
    }
    return out;
  }
};

GroupSpec parse_at(Cursor& c);

GroupSpec parse_prod(Cursor& c) {
  GroupSpec s;
  s.family = GroupSpec::Family::prod;
  std::size_t star = c.text.find('*', c.pos);
  if (star == std::string_view::npos)
    bad(c.text, c.pos, "product needs '*'");
  Cursor left{c.text.substr(0, star), c.pos};
  s.operands.push_back(parse_at(left));
  if (left.pos != star) bad(c.text, left.pos, "trailing input before '*'");
  c.pos = star + 1;
  s.operands.push_back(parse_at(c));
  return s;
}

GroupSpec parse_at(Cursor& c) {
  auto tag_is = [&](std::string_view tag) {
    if (c.text.substr(c.pos, tag.size()) != tag) return false;
    c.pos += tag.size();
    return true;
  };
  GroupSpec s;
  if (tag_is("dic:")) {
    s.family = GroupSpec::Family::dic;
    s.n = static_cast<std::uint32_t>(c.number());
    if (s.n == 0) bad(c.text, c.pos, "dic parameter must be positive");
    return s;
  }
  if (tag_is("gdic:")) {
    s.family = GroupSpec::Family::gdic;
    s.a.factors = c.number_list();
    if (c.eat(',')) {
      if (!tag_is("t=")) bad(c.text, c.pos, "expected t=<index>");
      s.t = static_cast<Elem>(c.number());
    }
    return s;
  }
  if (tag_is("ab:")) {
    s.family = GroupSpec::Family::ab;
    s.a.factors = c.number_list();
    return s;
  }
  if (tag_is("sdp:")) {
    s.family = GroupSpec::Family::sdp;
    s.a.factors = c.number_list();
    if (!c.eat(';')) bad(c.text, c.pos, "expected ';' before images");
    for (std::uint32_t v : c.number_list())
      s.images.push_back(static_cast<Elem>(v));
    if (!c.eat(';')) bad(c.text, c.pos, "expected ';' before k");
    s.k = static_cast<std::uint32_t>(c.number());
    if (s.k == 0) bad(c.text, c.pos, "k must be positive");
    return s;
  }
  if (tag_is("xsp:")) {
    s.family = GroupSpec::Family::xsp;
    s.p = static_cast<std::uint32_t>(c.number());
    if (!c.eat(',')) bad(c.text, c.pos, "expected ',' after p");
    s.xn = static_cast<std::uint32_t>(c.number());
    if (!c.eat(',')) bad(c.text, c.pos, "expected ',' after n");
    std::size_t start = c.pos;
    while (!c.done() && c.peek() != '*' && c.peek() != ',') ++c.pos;
    s.kind = parse_extraspecial_kind(
        std::string(c.text.substr(start, c.pos - start)), s.p);
    return s;
  }
  if (tag_is("fp:")) {
    s.family = GroupSpec::Family::fp;
    s.path = std::string(c.text.substr(c.pos));
    c.pos = c.text.size();
    if (s.path.empty()) bad(c.text, c.pos, "empty path");
    return s;
  }
  if (tag_is("prod:")) return parse_prod(c);
  bad(c.text, c.pos, "unknown family tag");
}

std::string join_numbers(const std::vector<std::uint32_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string GroupSpec::str() const {
  switch (family) {
    case Family::dic:
      return "dic:" + std::to_string(n);
    case Family::gdic:
      return "gdic:" + join_numbers(a.factors) +
             (t ? ",t=" + std::to_string(*t) : "");
    case Family::ab:
      return "ab:" + join_numbers(a.factors);
    case Family::sdp: {
      std::vector<std::uint32_t> img(images.begin(), images.end());
      return "sdp:" + join_numbers(a.factors) + ";" + join_numbers(img) +
             ";" + std::to_string(k);
    }
    case Family::xsp:
      return "xsp:" + std::to_string(p) + "," + std::to_string(xn) + "," +
             extraspecial_kind_token(kind);
    case Family::fp:
      return "fp:" + path;
    case Family::prod:
      return "prod:" + operands[0].str() + "*" + operands[1].str();
  }
  internal_fail("unknown spec family");
}

GroupSpec parse_spec(std::string_view text) {
  Cursor c{text};
  GroupSpec s = parse_at(c);
  if (!c.done()) bad(text, c.pos, "trailing input");
  return s;
}

GroupTable build_group(const GroupSpec& spec, const BuildLimits& limits) {
  // resulting order is known upfront for every family except fp, where the
  // realization enforces the bound itself
  auto guard = [&](std::uint64_t order) {
    if (order > limits.max_order)
      throw resource_error("bound exceeded: order " + std::to_string(order) +
                           " > " + std::to_string(limits.max_order));
  };
  switch (spec.family) {
    case GroupSpec::Family::dic:
      guard(std::uint64_t{4} * spec.n);
      return dicyclic(spec.n);
    case GroupSpec::Family::gdic: {
      guard(2 * spec.a.order());
      GroupTable a = abelian(spec.a);
      Elem t;
      if (spec.t) {
        t = *spec.t;
      } else {
        std::vector<Elem> inv = involutions(a);
        if (inv.empty())
          throw std::invalid_argument("gdic needs |A| even");
        // prefer a square so that Dic(Z_2n) matches dic:<n>
        t = inv.front();
        for (Elem cand : inv) {
          bool is_square = false;
          for (Elem x = 0; x < a.order() && !is_square; ++x)
            is_square = a.mul(x, x) == cand;
          if (is_square) {
            t = cand;
            break;
          }
        }
      }
      return generalized_dicyclic(spec.a, t);
    }
    case GroupSpec::Family::ab:
      guard(spec.a.order());
      return abelian(spec.a);
    case GroupSpec::Family::sdp:
      guard(spec.a.order() * spec.k);
      return semidirect_by_automorphism(spec.a, spec.images, spec.k);
    case GroupSpec::Family::xsp: {
      std::uint64_t order = 1;
      for (std::uint32_t i = 0; i < spec.xn; ++i) order *= spec.p;
      guard(order);
      return extraspecial(spec.p, spec.xn, spec.kind);
    }
    case GroupSpec::Family::fp: {
      TcOptions opts;
      opts.max_cosets = limits.tc_max_cosets;
      return load_and_realize(spec.path, limits.max_order, opts);
    }
    case GroupSpec::Family::prod: {
      GroupTable lhs = build_group(spec.operands[0], limits);
      GroupTable rhs = build_group(spec.operands[1], limits);
      guard(std::uint64_t{lhs.order()} * rhs.order());
      return direct_product(lhs, rhs);
    }
  }
  internal_fail("unknown spec family");
}

}  // namespace cdlat
