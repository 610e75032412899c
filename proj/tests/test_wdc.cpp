#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "mu2/oracles.hpp"
#include "mu2/wdc.hpp"

using namespace mu2;

namespace {

Graph ugly_cycle(int k) {
  std::vector<int> vs;
  std::vector<Edge> es;
  for (int i = 1; i <= k; ++i) {
    vs.push_back(i);
    es.push_back({i, i % k + 1});
  }
  return Graph(vs, es);
}

template <typename F>
Digraph relabel(const Digraph& g, F f) {
  std::vector<int> vs;
  std::vector<Arc> as;
  for (int v : g.vertices()) vs.push_back(f(v));
  for (const Arc& a : g.arcs()) as.push_back({f(a.first), f(a.second)});
  return Digraph(vs, as);
}

std::set<std::map<int, int>> as_set(const std::vector<std::map<int, int>>& v) {
  return {v.begin(), v.end()};
}

bool valid_iso(const Digraph& g, const Digraph& h,
               const std::map<int, int>& f) {
  if (f.size() != g.vertices().size()) return false;
  std::set<int> image;
  for (int v : g.vertices()) {
    if (!f.count(v) || !h.has_vertex(f.at(v))) return false;
    image.insert(f.at(v));
  }
  if (image.size() != h.vertices().size()) return false;
  for (const Arc& a : g.arcs())
    if (!h.has_arc(f.at(a.first), f.at(a.second))) return false;
  return g.arcs().size() == h.arcs().size();
}

}  // namespace

TEST_CASE("splitting helpers") {
  Digraph ring({1, 2, 3}, {{1, 2}, {2, 3}, {3, 1}});
  Digraph sv = split_vertex(ring, 2, 4, 5);
  CHECK(sv.has_arc(1, 4));
  CHECK(sv.has_arc(4, 5));
  CHECK(sv.has_arc(5, 3));
  CHECK(!sv.has_vertex(2));
  CHECK_THROWS_AS(split_vertex(ring, 9, 4, 5), Error);
  CHECK_THROWS_AS(split_vertex(ring, 2, 1, 5), Error);

  Digraph sa = split_arc(ring, {3, 1}, 7);
  CHECK(sa.has_arc(3, 7));
  CHECK(sa.has_arc(7, 1));
  CHECK(!sa.has_arc(3, 1));
  CHECK_THROWS_AS(split_arc(ring, {1, 3}, 7), Error);
  CHECK_THROWS_AS(split_arc(ring, {3, 1}, 2), Error);
}

TEST_CASE("build_wdc validates") {
  CHECK_THROWS_AS(build_wdc(WdcShape{{1, 0, 0}, {1, 0, 0}}), Error);
  CHECK_THROWS_AS(build_wdc(WdcShape{{1, 0, 0}, {0, 1, 0}, {1, 0, 0}}), Error);
}

TEST_CASE("doubled cycles are the section-free all-small shapes") {
  for (int m = 3; m <= 6; ++m) {
    WdcShape s(m, {1, 0, 0});
    Digraph g = build_wdc(s);
    CHECK(g.vertices().size() == static_cast<std::size_t>(m));
    CHECK(!oracle::digraph_isomorphisms(g, gtodg(ugly_cycle(m))).empty());
    auto r = recognize_wdc(g);
    REQUIRE(r.has_value());
    CHECK(r->m == m);
    CHECK(bracelet_of(*r) == std::string(m, '0'));
    CHECK(enumerate_cycles(g).size() == static_cast<std::size_t>(m + 2));
  }
}

TEST_CASE("recognition recovers built shapes") {
  std::vector<WdcShape> shapes = {
      {{2, 0, 0}, {1, 0, 0}, {1, 0, 0}},
      {{2, 1, 0}, {1, 0, 2}, {1, 3, 1}},
      {{1, 1, 1}, {2, 0, 0}, {1, 2, 0}, {1, 0, 0}},
      {{2, 0, 0}, {2, 0, 0}, {2, 0, 0}, {2, 0, 0}},
      {{1, 2, 2}, {1, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 0, 0}},
  };
  for (const WdcShape& s : shapes) {
    Digraph g = build_wdc(s);
    auto r = recognize_wdc(g);
    REQUIRE(r.has_value());
    CHECK(r->m == static_cast<int>(s.size()));
    // the re-read shape describes an isomorphic digraph
    WdcShape back = shape_of(*r);
    std::multiset<std::array<int, 3>> a(s.begin(), s.end());
    std::multiset<std::array<int, 3>> b(back.begin(), back.end());
    CHECK(g.vertices().size() ==
          static_cast<std::size_t>([&] {
            int total = 0;
            for (const auto& t : s) total += t[0] + t[1] + t[2];
            return total;
          }()));
    CHECK(!wdc_isomorphisms(build_wdc(back), g).empty());
    // structure slots partition the vertex set
    std::set<int> seen;
    int slots = 0;
    for (int i = 0; i < r->m; ++i) {
      for (int v : r->cycles[i].overlap_next) seen.insert(v), ++slots;
      for (int v : r->cycles[i].section_a) seen.insert(v), ++slots;
      for (int v : r->cycles[i].section_b) seen.insert(v), ++slots;
    }
    CHECK(slots == static_cast<int>(g.vertices().size()));
    CHECK(seen.size() == g.vertices().size());
  }
}

TEST_CASE("recognition survives relabeling") {
  WdcShape s = {{2, 1, 0}, {1, 0, 2}, {1, 3, 1}};
  Digraph g = build_wdc(s);
  Digraph h = relabel(g, [](int v) { return 3 * v + 17; });
  auto r = recognize_wdc(h);
  REQUIRE(r.has_value());
  CHECK(r->m == 3);
  CHECK(!wdc_isomorphisms(g, h).empty());
}

TEST_CASE("recognition rejects non-double-cycles") {
  // a plain ring has a single cycle
  Digraph ring({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  CHECK(!recognize_wdc(ring).has_value());
  // a doubled path is not strongly... it is, but has too few cycles
  Digraph path = gtodg(Graph({1, 2, 3}, {{1, 2}, {2, 3}}));
  CHECK(!recognize_wdc(path).has_value());
  // degree above 4
  std::vector<Edge> k5;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) k5.push_back({i, j});
  CHECK(!recognize_wdc(gtodg(Graph({1, 2, 3, 4, 5}, k5))).has_value());
  // two components
  Digraph two = gtodg(Graph({1, 2, 3, 4, 5, 6},
                            {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}}));
  CHECK(!recognize_wdc(two).has_value());
  // sink vertex
  Digraph sink({1, 2, 3}, {{1, 2}, {2, 1}, {1, 3}, {2, 3}});
  CHECK(!recognize_wdc(sink).has_value());
}

TEST_CASE("structure isomorphisms agree with the brute-force search") {
  std::vector<WdcShape> shapes = {
      {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}},
      {{2, 0, 0}, {1, 0, 0}, {1, 0, 0}},
      {{2, 1, 0}, {1, 0, 2}, {1, 3, 1}},
      {{1, 1, 0}, {1, 2, 0}, {1, 3, 0}},
      {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}},
      {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}, {1, 0, 0}},
      {{2, 0, 0}, {1, 1, 0}, {2, 0, 0}, {1, 1, 0}},
  };
  for (const WdcShape& s : shapes) {
    Digraph g = build_wdc(s);
    Digraph h = relabel(g, [](int v) { return 101 - v; });
    auto ours = wdc_isomorphisms(g, h);
    auto brute = oracle::digraph_isomorphisms(g, h);
    CHECK(as_set(ours) == as_set(brute));
    for (const auto& f : ours) CHECK(valid_iso(g, h, f));
    auto self = wdc_isomorphisms(g, g);
    CHECK(as_set(self) == as_set(oracle::digraph_isomorphisms(g, g)));
  }
}

TEST_CASE("doubled cycles have the full dihedral symmetry") {
  for (int m : {3, 4, 5}) {
    Digraph g = build_wdc(WdcShape(m, {1, 0, 0}));
    CHECK(wdc_isomorphisms(g, g).size() == static_cast<std::size_t>(2 * m));
  }
  // one long overlap breaks rotational symmetry
  Digraph g = build_wdc(WdcShape{{2, 0, 0}, {1, 0, 0}, {1, 0, 0}});
  CHECK(wdc_isomorphisms(g, g).size() == 2);
  // fully asymmetric
  Digraph a = build_wdc(WdcShape{{1, 1, 0}, {1, 2, 0}, {1, 3, 0}});
  CHECK(wdc_isomorphisms(a, a).size() == 1);
}

TEST_CASE("isomorphism needs equal ring length and shape") {
  Digraph g3 = build_wdc(WdcShape(3, {1, 0, 0}));
  Digraph g4 = build_wdc(WdcShape(4, {1, 0, 0}));
  CHECK(wdc_isomorphisms(g3, g4).empty());
  Digraph long_overlap = build_wdc(WdcShape{{2, 0, 0}, {1, 0, 0}, {1, 0, 0}});
  Digraph long_section = build_wdc(WdcShape{{1, 1, 0}, {1, 0, 0}, {1, 0, 0}});
  CHECK(wdc_isomorphisms(long_overlap, long_section).empty());
  CHECK_THROWS_AS(
      wdc_isomorphisms(g3, Digraph({1, 2}, {{1, 2}, {2, 1}})), Error);
}

TEST_CASE("cycle multigraph of the doubled triangle") {
  Digraph g = build_wdc(WdcShape(3, {1, 0, 0}));
  Multigraph cm = cycle_multigraph(g);
  CHECK(cm.vertices().size() == 5);
  std::multiset<int> loops;
  for (int v : cm.vertices()) loops.insert(cm.mult(v, v));
  CHECK(loops == std::multiset<int>{2, 2, 2, 3, 3});
  // the two orientation cycles share all three vertices
  int big_pairs = 0;
  for (int v : cm.vertices())
    for (int w : cm.vertices())
      if (v < w && cm.mult(v, w) == 3) ++big_pairs;
  CHECK(big_pairs == 1);
}

TEST_CASE("orientation reconstructs a weak double cycle from multiplicities") {
  std::vector<WdcShape> shapes = {
      {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}},
      {{2, 1, 0}, {1, 0, 2}, {1, 3, 1}},
      {{1, 1, 1}, {2, 0, 0}, {1, 2, 0}, {1, 0, 0}},
  };
  for (const WdcShape& s : shapes) {
    Digraph g = build_wdc(s);
    Digraph o = orient_multigraph(dgtomg(g));
    CHECK(dgtomg(o) == dgtomg(g));
    CHECK(!wdc_isomorphisms(g, o).empty());
  }
  CHECK_THROWS_AS(orient_multigraph(Multigraph({1, 2, 3},
                                               {{{1, 1}, 1}, {{1, 2}, 1},
                                                {{2, 3}, 1}, {{3, 1}, 1}})),
                  Error);
  CHECK_THROWS_AS(orient_multigraph(Multigraph({1, 2, 3},
                                               {{{1, 2}, 3}, {{2, 3}, 1},
                                                {{3, 1}, 1}})),
                  Error);
}

TEST_CASE("underlying graphs determine the double cycle") {
  std::vector<WdcShape> shapes = {
      {{2, 0, 0}, {1, 0, 0}, {1, 0, 0}},
      {{2, 1, 0}, {1, 0, 2}, {1, 3, 1}},
      {{1, 1, 1}, {2, 0, 0}, {1, 2, 0}, {1, 0, 0}},
      {{2, 0, 0}, {2, 0, 0}, {2, 0, 0}, {2, 0, 0}},
  };
  for (const WdcShape& s : shapes) {
    Digraph g = build_wdc(s);
    Digraph back = graph_to_wdc(dgtog(g));
    CHECK(dgtog(back) == dgtog(g));
    CHECK(!wdc_isomorphisms(g, back).empty());
  }
}

TEST_CASE("plain cycles double completely") {
  for (int k : {3, 4, 6, 8}) {
    Digraph d = graph_to_wdc(ugly_cycle(k));
    CHECK(d == gtodg(ugly_cycle(k)));
  }
}

TEST_CASE("complete graph on four vertices is a double cycle") {
  std::vector<Edge> k4;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) k4.push_back({i, j});
  Digraph d = graph_to_wdc(Graph({1, 2, 3, 4}, k4));
  auto r = recognize_wdc(d);
  REQUIRE(r.has_value());
  CHECK(r->m == 3);
}

TEST_CASE("complete bipartite graph on 3+3 is a twisted ring of squares") {
  std::vector<Edge> k33;
  for (int i = 1; i <= 3; ++i)
    for (int j = 4; j <= 6; ++j) k33.push_back({i, j});
  Digraph d = graph_to_wdc(Graph({1, 2, 3, 4, 5, 6}, k33));
  auto r = recognize_wdc(d);
  REQUIRE(r.has_value());
  CHECK(r->m == 3);
  CHECK(bracelet_of(*r) == "111");
  CHECK(dgtog(d) == Graph({1, 2, 3, 4, 5, 6}, k33));
}

TEST_CASE("prism closes as a ring of four with one doubled rung") {
  Graph prism({1, 2, 3, 4, 5, 6}, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6},
                                   {6, 4}, {1, 4}, {2, 5}, {3, 6}});
  Digraph d = graph_to_wdc(prism);
  CHECK(dgtog(d) == prism);
  auto r = recognize_wdc(d);
  REQUIRE(r.has_value());
  CHECK(r->m == 4);
  CHECK(bracelet_canon(bracelet_of(*r)) == "0011");
}

TEST_CASE("graphs that are no double cycle are rejected") {
  // star: leaves have degree 1
  CHECK_THROWS_AS(graph_to_wdc(Graph({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}})),
                  Error);
  // two triangles joined by a bridge never exceed three simple cycles
  Graph bowtie({1, 2, 3, 4, 5, 6}, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5},
                                    {5, 6}, {6, 4}});
  CHECK_THROWS_AS(graph_to_wdc(bowtie), Error);
  // two triangles sharing a vertex have only two simple cycles
  Graph butterfly({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5},
                                    {5, 3}});
  CHECK_THROWS_AS(graph_to_wdc(butterfly), Error);
  // path
  CHECK_THROWS_AS(graph_to_wdc(Graph({1, 2, 3}, {{1, 2}, {2, 3}})), Error);
}

TEST_CASE("bracelet reading requires a smoothed structure") {
  auto r = recognize_wdc(build_wdc(WdcShape{{2, 0, 0}, {1, 0, 0}, {1, 0, 0}}));
  REQUIRE(r.has_value());
  CHECK(bracelet_of(*r) == "100");
  auto with_sections =
      recognize_wdc(build_wdc(WdcShape{{1, 1, 0}, {1, 0, 0}, {1, 0, 0}}));
  REQUIRE(with_sections.has_value());
  CHECK_THROWS_AS(bracelet_of(*with_sections), Error);
  auto too_long =
      recognize_wdc(build_wdc(WdcShape{{3, 0, 0}, {1, 0, 0}, {1, 0, 0}}));
  REQUIRE(too_long.has_value());
  CHECK_THROWS_AS(bracelet_of(*too_long), Error);
}

TEST_CASE("bracelet canonicalization") {
  CHECK(bracelet_canon("10") == "01");
  CHECK(bracelet_canon("100") == "001");
  CHECK(bracelet_canon("110100") == "001011");
  CHECK(bracelet_canon("0") == "0");
  CHECK(bracelet_canon("1111") == "1111");
  // reflection matters: 00110 vs rotations only
  CHECK(bracelet_canon("01100") == "00011");
}

TEST_CASE("bracelet enumeration counts") {
  std::vector<std::size_t> expect{2, 3, 4, 6, 8, 13};
  for (int m = 1; m <= 6; ++m) {
    auto bs = enumerate_bracelets(m);
    CHECK(bs.size() == expect[m - 1]);
    CHECK(std::is_sorted(bs.begin(), bs.end()));
    for (const std::string& b : bs) {
      CHECK(b.size() == static_cast<std::size_t>(m));
      CHECK(bracelet_canon(b) == b);
    }
  }
  CHECK(enumerate_bracelets(2) ==
        std::vector<std::string>{"00", "01", "11"});
  CHECK_THROWS_AS(enumerate_bracelets(0), Error);
  CHECK_THROWS_AS(enumerate_bracelets(25), Error);
}
