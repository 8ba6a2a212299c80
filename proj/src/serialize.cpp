#include "cdlat/serialize.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace cdlat {
namespace {

const char* shape_tag(LatticeShape::Kind k) {
  switch (k) {
    case LatticeShape::Kind::chain: return "chain";
    case LatticeShape::Kind::quasi_antichain: return "quasi-antichain";
    case LatticeShape::Kind::general: return "general";
  }
  internal_fail("unknown shape kind");
}

}  // namespace

std::string lattice_json(const GroupTable& g, const GroupAnalysis& an,
                         const std::string& spec_text, bool with_elements) {
  nlohmann::ordered_json doc;
  doc["spec"] = spec_text;
  doc["group_order"] = g.order();
  doc["center_order"] = an.zg.order;
  doc["m_star"] = an.cd.m_star;
  doc["shape"] = {{"tag", shape_tag(an.cd.shape.kind)},
                  {"param", an.cd.shape.param}};
  nlohmann::ordered_json members = nlohmann::ordered_json::array();
  for (std::uint32_t i = 0; i < an.cd.members.size(); ++i) {
    const Subgroup& m = an.cd.members[i];
    nlohmann::ordered_json jm;
    jm["id"] = i;
    jm["order"] = m.order;
    jm["measure"] = an.cd.member_measures[i];
    jm["normal"] = is_normal(g, m);
    jm["abelian"] = is_abelian_subgroup(g, m);
    if (with_elements) jm["elements"] = m.bits.indices();
    members.push_back(std::move(jm));
  }
  doc["members"] = std::move(members);
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (auto [lo, hi] : an.cd.hasse)
    edges.push_back(nlohmann::ordered_json::array({lo, hi}));
  doc["hasse"] = std::move(edges);
  doc["minimum"] = an.cd.minimum;
  doc["maximum"] = an.cd.maximum;
  return doc.dump(2) + "\n";
}

std::string lattice_dot(const GroupTable& g, const CdLattice& cd) {
  (void)g;
  std::ostringstream out;
  out << "digraph cd {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::uint32_t i = 0; i < cd.members.size(); ++i)
    out << "  n" << i << " [label=\"" << cd.members[i].order << "/"
        << cd.member_measures[i] << "\"];\n";
  for (auto [lo, hi] : cd.hasse) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string lattice_text(const GroupTable& g, const GroupAnalysis& an) {
  std::ostringstream out;
  out << "group order " << g.order() << ", center order " << an.zg.order
      << ", " << an.subgroups.size() << " subgroups\n";
  out << "m* = " << an.cd.m_star << ", " << an.cd.members.size()
      << " members, shape " << an.cd.shape.str() << "\n";
  out << std::setw(4) << "id" << std::setw(8) << "order" << std::setw(12)
      << "measure" << std::setw(8) << "normal" << std::setw(9) << "abelian"
      << "\n";
  for (std::uint32_t i = 0; i < an.cd.members.size(); ++i) {
    const Subgroup& m = an.cd.members[i];
    out << std::setw(4) << i << std::setw(8) << m.order << std::setw(12)
        << an.cd.member_measures[i] << std::setw(8)
        << (is_normal(g, m) ? "yes" : "no") << std::setw(9)
        << (is_abelian_subgroup(g, m) ? "yes" : "no") << "\n";
  }
  out << "minimum id " << an.cd.minimum << " (order "
      << an.cd.members[an.cd.minimum].order << "), maximum id "
      << an.cd.maximum << " (order " << an.cd.members[an.cd.maximum].order
      << ")\n";
  return out.str();
}

std::string measure_text(const GroupTable& g, const SubgroupSet& s,
                         const std::vector<std::uint64_t>& measures) {
  internal_check(s.size() == measures.size(), "measure table size mismatch");
  std::uint64_t m_star = 0;
  for (std::uint64_t m : measures) m_star = std::max(m_star, m);
  std::ostringstream out;
  out << std::setw(6) << "id" << std::setw(8) << "order" << std::setw(10)
      << "|C_G(H)|" << std::setw(12) << "measure"
      << "\n";
  for (std::uint32_t i = 0; i < s.size(); ++i) {
    out << std::setw(6) << i << std::setw(8) << s[i].order << std::setw(10)
        << measures[i] / s[i].order << std::setw(12) << measures[i]
        << (measures[i] == m_star ? " *" : "") << "\n";
  }
  out << "m* = " << m_star << " (group order " << g.order() << ")\n";
  return out.str();
}

std::string group_text(const GroupTable& g, const std::string& spec_text) {
  GroupPredicates p = group_predicates(g);
  Subgroup z = center(g);
  Subgroup der = derived_subgroup(g);
  std::ostringstream out;
  out << "spec " << spec_text << "\n";
  out << "order " << g.order() << ", exponent " << p.exponent << "\n";
  out << "center order " << z.order << ", derived subgroup order "
      << der.order << "\n";
  out << (p.is_abelian ? "abelian" : "non-abelian");
  if (p.nilpotency_class)
    out << ", nilpotent of class " << *p.nilpotency_class;
  if (p.is_maximal_class) out << ", maximal class";
  if (p.is_metabelian) out << ", metabelian";
  out << "\n";
  return out.str();
}

std::string report_line(const TheoremReport& r) {
  std::ostringstream out;
  out << "[" << verdict_token(r.verdict) << "] " << std::left << std::setw(10)
      << r.theorem_id << " " << std::setw(24) << r.subject << std::right;
  if (r.verdict == Verdict::not_applicable) {
    out << " not applicable: " << r.details;
  } else {
    out << " " << r.prediction;
    if (!r.details.empty()) out << " | " << r.details;
    if (r.corpus_limited) out << " [corpus-limited]";
  }
  return out.str();
}

std::string suite_summary(const SuiteResult& r) {
  std::ostringstream out;
  out << "suite " << r.suite << ": " << r.count(Verdict::pass) << " pass, "
      << r.count(Verdict::fail) << " fail, "
      << r.count(Verdict::not_applicable) << " n/a";
  return out.str();
}

}  // namespace cdlat
