#include "cdlat/corpus.hpp"

#include <algorithm>

namespace cdlat {
namespace {

GroupSpec spec_of(const std::string& text) { return parse_spec(text); }

void add(std::vector<CorpusEntry>& out, std::string name,
         const std::string& spec, std::vector<std::string> tags,
         bool long_running = false) {
  out.push_back({std::move(name), spec_of(spec), std::move(tags),
                 long_running});
}

}  // namespace

bool CorpusEntry::has_tag(const std::string& t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

std::vector<CorpusEntry> standard_corpus(const CorpusConfig& cfg) {
  std::vector<CorpusEntry> out;

  for (std::uint32_t n = 1; n <= cfg.dic_max_n; ++n)
    add(out, "Dic" + std::to_string(4 * n), "dic:" + std::to_string(n),
        {"dic"});

  // every (abelian type, involution) pair with |A| even up to the bound
  for (std::uint32_t m = 2; m <= cfg.gdic_max; m += 2) {
    for (const AbelianSpec& a : abelian_types_of_order(m)) {
      GroupTable tab = abelian(a);
      std::string factors;
      for (std::size_t i = 0; i < a.factors.size(); ++i)
        factors += (i ? "," : "") + std::to_string(a.factors[i]);
      for (Elem t : involutions(tab)) {
        CorpusEntry e;
        e.name = "Gdic(" + factors + ";t" + std::to_string(t) + ")";
        e.spec = spec_of("gdic:" + factors + ",t=" + std::to_string(t));
        e.tags = {"gdic"};
        out.push_back(std::move(e));
      }
    }
  }

  add(out, "ES32+", "xsp:2,5,d", {"xsp32"});
  add(out, "ES32-", "xsp:2,5,q", {"xsp32"});
  add(out, "D8", "xsp:2,3,d", {"p3"});
  add(out, "Q8x", "xsp:2,3,q", {"p3"});
  add(out, "Heis27", "xsp:3,3,p", {"p3", "heis"});
  add(out, "M27", "xsp:3,3,p2", {"p3"});
  add(out, "Heis125", "xsp:5,3,p", {"p3", "heis"});
  add(out, "M125", "xsp:5,3,p2", {"p3"});

  // 2-groups of maximal class, order 16..64 (order-8 cases are covered by
  // the extraspecial and dicyclic entries above)
  add(out, "D16", "sdp:8;7;2", {"twogp"});
  add(out, "D32", "sdp:16;15;2", {"twogp"});
  add(out, "D64", "sdp:32;31;2", {"twogp"});
  add(out, "SD16", "sdp:8;3;2", {"twogp"});
  add(out, "SD32", "sdp:16;7;2", {"twogp"});
  add(out, "SD64", "sdp:32;15;2", {"twogp"});
  add(out, "Q16", "dic:4", {"twogp"});
  add(out, "Q32", "dic:8", {"twogp"});
  add(out, "Q64", "dic:16", {"twogp"});

  // coprime abelian-by-abelian instances
  add(out, "Z5:Z4", "sdp:5;2;4", {"sdp33"});
  add(out, "Z7:Z3", "sdp:7;2;3", {"sdp33"});
  add(out, "Z3xZ3:Z2", "sdp:3,3;2,6;2", {"sdp33"});

  // direct products for the lattice-transfer checks
  for (const char* h : {"dic:2", "dic:3", "dic:4"})
    for (const char* z : {"ab:3", "ab:5"}) {
      std::string spec = std::string("prod:") + h + "*" + z;
      add(out, spec, spec, {"prod"});
    }

  add(out, "MaxClass3^6", "fp:" + cfg.presentations_dir + "/sg_729_99.pres",
      {"fp", "maxclass"});
  if (cfg.include_long) {
    add(out, "MaxClass5^5",
        "fp:" + cfg.presentations_dir + "/maxclass_3125_p5.pres",
        {"fp", "maxclass", "long"});
    add(out, "MaxClass5^6",
        "fp:" + cfg.presentations_dir + "/sg_15625_651.pres",
        {"fp", "maxclass", "long"}, true);
  }

  return out;
}

std::vector<CorpusEntry> corpus_with_tag(const std::vector<CorpusEntry>& all,
                                         const std::string& tag) {
  std::vector<CorpusEntry> out;
  for (const CorpusEntry& e : all)
    if (e.has_tag(tag)) out.push_back(e);
  return out;
}

}  // namespace cdlat
