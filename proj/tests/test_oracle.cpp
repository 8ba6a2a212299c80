#include <cstdio>
#include <fstream>

#include "cdlat/oracle.hpp"
#include "doctest.h"

using namespace cdlat;

namespace {

TheoremReport run21(const char* spec) {
  GroupTable g = build_group(parse_spec(spec));
  GroupAnalysis an = analyze(g);
  return check_theorem_2_1(g, an);
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("classification dispatch hits the expected branch") {
  CHECK(run21("ab:2,6").theorem_id == "thm2.1-1");
  CHECK(run21("dic:2").theorem_id == "thm2.1-2");       // |G:Z| = 4
  CHECK(run21("xsp:3,3,p").theorem_id == "thm2.1-2");   // |G:Z| = 9
  CHECK(run21("dic:3").theorem_id == "thm2.1-3");       // smallest-prime form
  CHECK(run21("dic:4").theorem_id == "thm2.1-3");       // p-power form
  CHECK(run21("xsp:2,5,d").theorem_id == "thm2.1-4b");
  CHECK(run21("sdp:5;2;4").theorem_id == "thm2.1-4d");
  for (const char* spec : {"ab:2,6", "dic:2", "xsp:3,3,p", "dic:3", "dic:4",
                           "xsp:2,5,d", "sdp:5;2;4"}) {
    CAPTURE(spec);
    CHECK(run21(spec).verdict == Verdict::pass);
  }
}

TEST_CASE("branch 4a via the binary tetrahedral group") {
  // |G:A| = 4, |G:Z| = 12 strictly between 4 and 16, smallest prime 2:
  // the two-element chain {Z, G}
  const char* path = "/tmp/cdlat_btet_test.pres";
  {
    std::ofstream out(path);
    out << "gens 2\nrel 1,1,1,-2,-2,-2\nrel 1,1,1,-2,-1,-2,-1\n";
  }
  GroupTable g = build_group(parse_spec(std::string("fp:") + path));
  std::remove(path);
  REQUIRE(g.order() == 24);
  GroupAnalysis an = analyze(g);
  TheoremReport r = check_theorem_2_1(g, an);
  CHECK(r.theorem_id == "thm2.1-4a");
  CHECK(r.verdict == Verdict::pass);
  CHECK(an.cd.members.size() == 2);
  CHECK(an.cd.m_star == 48);
}

TEST_CASE("extraspecial 32 counts in the 4b branch") {
  GroupTable g = build_group(parse_spec("xsp:2,5,q"));
  GroupAnalysis an = analyze(g);
  TheoremReport r = check_theorem_2_1(g, an);
  CHECK(r.theorem_id == "thm2.1-4b");
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.details.find("n=15") != std::string::npos);
  CHECK(r.details.find("m=34") != std::string::npos);
}

TEST_CASE("uniqueness corollary counts one witness") {
  GroupTable g = build_group(parse_spec("dic:3"));
  GroupAnalysis an = analyze(g);
  TheoremReport r = check_corollary_2_2(g, an);
  CHECK(r.theorem_id == "cor2.2-1");
  CHECK(r.verdict == Verdict::pass);

  GroupTable h = build_group(parse_spec("ab:12"));
  GroupAnalysis anh = analyze(h);
  CHECK(check_corollary_2_2(h, anh).verdict == Verdict::not_applicable);
}

TEST_CASE("generalized dicyclic cases split on the exceptional type") {
  TheoremReport a = check_theorem_3_1(AbelianSpec{{2, 6}}, 1);
  CHECK(a.theorem_id == "thm3.1-a");
  CHECK(a.verdict == Verdict::pass);

  GroupTable z24 = abelian(AbelianSpec{{2, 4}});
  for (Elem t : involutions(z24)) {
    CAPTURE(t);
    TheoremReport b = check_theorem_3_1(AbelianSpec{{2, 4}}, t);
    CHECK(b.theorem_id == "thm3.1-b");
    CHECK(b.verdict == Verdict::pass);
  }

  TheoremReport e = check_theorem_3_1(AbelianSpec{{2, 2}}, 1);
  CHECK(e.theorem_id == "thm3.1-a");
  CHECK(e.verdict == Verdict::pass);  // exponent 2: abelian, CD = {G}
}

TEST_CASE("coprime factorization formula covers the degenerate actions") {
  // trivial action: the product is abelian, C_B(A) = B
  TheoremReport t = check_theorem_3_3({{7}}, {{3}}, {{1}});
  CHECK(t.verdict == Verdict::pass);
  CHECK(t.details.find("|C_B(A)|=3") != std::string::npos);

  // inversion on one factor only
  TheoremReport s = check_theorem_3_3({{3, 3}}, {{2}}, {{2, 3}});
  CHECK(s.verdict == Verdict::pass);
  CHECK(s.details.find("|C_B(A)|=1") != std::string::npos);

  CHECK_THROWS_AS(check_theorem_3_3({{4}}, {{2}}, {{1}}),
                  std::invalid_argument);
}

TEST_CASE("central extension transport") {
  TheoremReport r = check_proposition_3_5(dicyclic(2), AbelianSpec{{3}});
  CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("witness sweep at a small bound needs no corpus") {
  TheoremReport r = check_corollary_3_4(8, {});
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.corpus_limited);
  CHECK(r.details.find("[2] exception") != std::string::npos);
  CHECK(r.details.find("[2,4] exception") != std::string::npos);
}

TEST_CASE("maximal class checks on constructor-built groups") {
  GroupTable d16 = build_group(parse_spec("sdp:8;7;2"));
  GroupAnalysis an = analyze(d16);
  TheoremReport r = check_theorem_4_1(d16, an);
  CHECK(r.theorem_id == "thm4.1-2");
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.details.find("cor4.2 iff ok") != std::string::npos);

  GroupTable h = build_group(parse_spec("xsp:3,3,p"));
  GroupAnalysis anh = analyze(h);
  TheoremReport rh = check_theorem_4_1(h, anh);
  CHECK(rh.theorem_id == "thm4.1-1");
  CHECK(rh.verdict == Verdict::pass);

  // not maximal class: hypothesis must not match
  GroupTable q = build_group(parse_spec("prod:dic:2*ab:2"));
  GroupAnalysis anq = analyze(q);
  CHECK(check_theorem_4_1(q, anq).verdict == Verdict::not_applicable);
}

TEST_CASE("suite names resolve with aliases") {
  CHECK(resolve_suite_name("THM2.1") == "thm2.1");
  CHECK(resolve_suite_name("cor3.2") == "thm3.2");
  CHECK(resolve_suite_name("cor4.2") == "thm4.1");
  CHECK(resolve_suite_name("all") == "all");
  CHECK_THROWS_AS(resolve_suite_name("thm9.9"), std::invalid_argument);
  CHECK(suite_names().size() == 9);
}

TEST_CASE("dicyclic suite honors the sweep bound") {
  SuiteOptions opts;
  opts.corpus.dic_max_n = 5;
  std::vector<SuiteResult> rs = run_suites({"thm3.2"}, opts);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].reports.size() == 5);
  CHECK(rs[0].ok());
  CHECK(rs[0].count(Verdict::pass) == 5);
}

TEST_CASE("lemma reports cover the expected instances") {
  SuiteOptions opts;
  opts.corpus.presentations_dir = CDLAT_PRESENTATIONS_DIR;
  std::vector<CorpusEntry> entries;
  for (const CorpusEntry& e : standard_corpus(opts.corpus))
    if (e.name == "Q16" || e.name == "Heis27" || e.name == "MaxClass3^6")
      entries.push_back(e);
  REQUIRE(entries.size() == 3);
  std::vector<AnalyzedEntry> corpus = analyze_corpus(entries, opts);
  std::size_t l11 = 0, l12 = 0;
  for (const TheoremReport& r : check_lemmas(corpus)) {
    CHECK(r.verdict == Verdict::pass);
    if (r.theorem_id == "lemma1.1") ++l11;
    if (r.theorem_id == "lemma1.2") ++l12;
  }
  CHECK(l11 == 1);  // Q16 has order 2^4
  CHECK(l12 == 3);  // all three are maximal class
}

}  // TEST_SUITE
