#include <catch2/catch_amalgamated.hpp>

#include "graycode/graycode.hpp"

using namespace graycode;

namespace {

FlipGraph graph_of(const Instance& inst, int threads = 1) {
  return build_flip_graph(inst, threads);
}

// every subset of the instance's object list, as a fresh instance
std::vector<Instance> all_subsets(const Instance& full) {
  int m = static_cast<int>(full.objects.size());
  std::vector<Instance> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    Instance s;
    s.kind = full.kind;
    s.flip = full.flip;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) s.objects.push_back(full.objects[i]);
    validate_instance(s);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("pinned path answers") {
  SolveResult no = has_hamilton_path(graph_of(make_named_instance("abstract-no", std::nullopt)));
  REQUIRE(no.answer == Answer::no);
  REQUIRE_FALSE(no.certificate.has_value());
  REQUIRE(no.stats.pre_degree == 1);
  REQUIRE(no.stats.nodes == 0);

  Instance yes_inst = make_named_instance("abstract-yes", std::nullopt);
  SolveResult yes = has_hamilton_path(graph_of(yes_inst));
  REQUIRE(yes.answer == Answer::yes);
  REQUIRE(yes.certificate.has_value());
  REQUIRE(yes.certificate->indices == std::vector<int>{2, 1, 3});
  REQUIRE(verify_certificate(yes_inst, *yes.certificate));

  // m = 1 and m = 0 are trivially yes
  SolveResult one = has_hamilton_path(graph_of(make_instance(Kind::bitstring, FlipFamily::bitflip, {"0"})));
  REQUIRE(one.answer == Answer::yes);
  REQUIRE(one.certificate->indices == std::vector<int>{1});
  Instance empty;
  empty.kind = Kind::bitstring;
  empty.flip = FlipFamily::bitflip;
  SolveResult zero = has_hamilton_path(graph_of(empty));
  REQUIRE(zero.answer == Answer::yes);
  REQUIRE(zero.certificate->indices.empty());

  SolveResult q3 = has_hamilton_path(graph_of(make_full_bn(3)));
  REQUIRE(q3.answer == Answer::yes);
  REQUIRE(verify_certificate(make_full_bn(3), *q3.certificate));
}

TEST_CASE("pinned cycle answers") {
  REQUIRE(has_hamilton_cycle(graph_of(make_full_bn(3))).answer == Answer::yes);

  Instance path3 = make_instance(Kind::bitstring, FlipFamily::bitflip, {"000", "001", "011"});
  REQUIRE(has_hamilton_cycle(graph_of(path3)).answer == Answer::no);
  REQUIRE(has_hamilton_path(graph_of(path3)).answer == Answer::yes);

  // 00-01-11 closes up through the whole-string complement
  Instance tri = make_instance(Kind::bitstring, FlipFamily::substring_complement, {"00", "01", "11"});
  SolveResult cyc = has_hamilton_cycle(graph_of(tri));
  REQUIRE(cyc.answer == Answer::yes);
  const auto& idx = cyc.certificate->indices;
  REQUIRE(idx.size() == 3);
  for (size_t i = 0; i + 1 < idx.size(); ++i)
    REQUIRE(flip_adjacent(tri.flip, tri.objects[idx[i] - 1], tri.objects[idx[i + 1] - 1]));
  REQUIRE(flip_adjacent(tri.flip, tri.objects[idx.back() - 1], tri.objects[idx.front() - 1]));

  // cycles need at least three vertices
  REQUIRE(has_hamilton_cycle(graph_of(make_instance(Kind::bitstring, FlipFamily::bitflip, {"0"})))
              .answer == Answer::no);
  REQUIRE(has_hamilton_cycle(graph_of(make_instance(Kind::bitstring, FlipFamily::bitflip, {"0", "1"})))
              .answer == Answer::no);
  REQUIRE(has_hamilton_cycle(graph_of(make_named_instance("abstract-no", std::nullopt))).answer ==
          Answer::no);
}

TEST_CASE("pre-rule attribution") {
  SolveResult disc = has_hamilton_path(
      graph_of(make_instance(Kind::bitstring, FlipFamily::bitflip, {"000", "111"})));
  REQUIRE(disc.answer == Answer::no);
  REQUIRE(disc.stats.pre_disconnected == 1);

  // two short legs and a triangle hanging off one cut vertex: degree rule passes,
  // the articulation rule is what refuses it
  FlipGraph spider;
  spider.m = 7;
  spider.adj = {{1, 3, 5, 6}, {0, 2}, {1}, {0, 4}, {3}, {0, 6}, {0, 5}};
  SolveResult art = has_hamilton_path(spider);
  REQUIRE(art.answer == Answer::no);
  REQUIRE(art.stats.pre_degree == 0);
  REQUIRE(art.stats.pre_articulation == 1);
  REQUIRE(art.stats.nodes == 0);

  // directed: two sources kill a path before any search
  FlipGraph two_sources;
  two_sources.m = 3;
  two_sources.directed = true;
  two_sources.adj = {{2}, {2}, {}};
  two_sources.radj = {{}, {}, {0, 1}};
  SolveResult d = has_hamilton_path(two_sources);
  REQUIRE(d.answer == Answer::no);
  REQUIRE(d.stats.pre_degree == 1);
}

TEST_CASE("budget exhaustion is reported, never misanswered") {
  FlipGraph q3 = graph_of(make_full_bn(3));
  SolveResult limited = has_hamilton_path(q3, {.budget = 3, .threads = 1});
  REQUIRE(limited.answer == Answer::unknown);
  REQUIRE(limited.stats.budget_exhausted);
  REQUIRE(limited.stats.nodes == 3);
  REQUIRE_FALSE(limited.certificate.has_value());

  SolveResult none = has_hamilton_path(q3, {.budget = 0, .threads = 1});
  REQUIRE(none.answer == Answer::unknown);
  REQUIRE(none.stats.nodes == 0);

  SolveResult cyc = has_hamilton_cycle(q3, {.budget = 0, .threads = 1});
  REQUIRE(cyc.answer == Answer::unknown);

  // a generous budget still finds the answer and reports consumed nodes below it
  SolveResult full = has_hamilton_path(q3);
  REQUIRE(full.answer == Answer::yes);
  REQUIRE(full.stats.nodes < 100);
}

TEST_CASE("thread count never changes the result") {
  std::vector<Instance> cases = {
      make_full_bn(3),
      make_full_bn(4),
      make_full_sn(3),
      make_named_instance("abstract-yes", std::nullopt),
      make_named_instance("abstract-no", std::nullopt),
      make_instance(Kind::bitstring, FlipFamily::bitflip, {"000", "001", "011", "010", "110"}),
      make_full_bn(3, FlipFamily::register_shift),
  };
  for (const Instance& inst : cases) {
    FlipGraph g = graph_of(inst);
    for (bool cycle : {false, true}) {
      for (uint64_t budget : {uint64_t{100000000}, uint64_t{7}, uint64_t{1}}) {
        SolveResult base = cycle ? has_hamilton_cycle(g, {.budget = budget, .threads = 1})
                                 : has_hamilton_path(g, {.budget = budget, .threads = 1});
        for (int t : {2, 3, 8}) {
          SolveResult r = cycle ? has_hamilton_cycle(g, {.budget = budget, .threads = t})
                                : has_hamilton_path(g, {.budget = budget, .threads = t});
          REQUIRE(r.answer == base.answer);
          REQUIRE(r.certificate.has_value() == base.certificate.has_value());
          if (r.certificate) REQUIRE(r.certificate->indices == base.certificate->indices);
          REQUIRE(r.stats.nodes == base.stats.nodes);
          REQUIRE(r.stats.pre_disconnected == base.stats.pre_disconnected);
          REQUIRE(r.stats.pre_degree == base.stats.pre_degree);
          REQUIRE(r.stats.pre_articulation == base.stats.pre_articulation);
          REQUIRE(r.stats.pre_isolated == base.stats.pre_isolated);
          REQUIRE(r.stats.search_connectivity == base.stats.search_connectivity);
          REQUIRE(r.stats.search_degree == base.stats.search_degree);
          REQUIRE(r.stats.budget_exhausted == base.stats.budget_exhausted);
        }
      }
    }
  }
}

TEST_CASE("certificate checking") {
  Instance yes_inst = make_named_instance("abstract-yes", std::nullopt);
  REQUIRE(verify_certificate(yes_inst, Certificate{{3, 1, 2}}));
  REQUIRE(verify_certificate(yes_inst, Certificate{{2, 1, 3}}));
  REQUIRE_FALSE(verify_certificate(yes_inst, Certificate{{1, 2, 3}}));
  REQUIRE_FALSE(verify_certificate(yes_inst, Certificate{{1, 2}}));
  REQUIRE_FALSE(verify_certificate(yes_inst, Certificate{{1, 1, 2}}));

  Instance no_inst = make_named_instance("abstract-no", std::nullopt);
  REQUIRE_FALSE(verify_certificate(no_inst, Certificate{{1, 2, 3, 4}}));

  Instance single = make_instance(Kind::bitstring, FlipFamily::bitflip, {"0"});
  REQUIRE(verify_certificate(single, Certificate{{1}}));

  CHECK_THROWS_MATCHES(verify_certificate(yes_inst, Certificate{{1, 2, 5}}), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == errc::bad_indices; }));
  CHECK_THROWS_AS(verify_certificate(yes_inst, Certificate{{0, 1, 2}}), Error);

  // listed order must respect edge direction
  Instance shift = make_instance(Kind::bitstring, FlipFamily::register_shift, {"111", "110"});
  REQUIRE(verify_certificate(shift, Certificate{{1, 2}}));
  REQUIRE_FALSE(verify_certificate(shift, Certificate{{2, 1}}));
}

TEST_CASE("counting") {
  REQUIRE(count_hamilton_paths(graph_of(make_instance(Kind::bitstring, FlipFamily::bitflip, {"0"}))) == 1);
  REQUIRE(count_hamilton_paths(graph_of(make_named_instance("abstract-no", std::nullopt))) == 0);
  REQUIRE(count_hamilton_paths(graph_of(make_instance(Kind::bitstring, FlipFamily::bitflip,
                                                      {"000", "001", "011"}))) == 1);
  REQUIRE(count_hamilton_paths(graph_of(make_full_bn(2))) == 4);

  CHECK_THROWS_MATCHES(count_hamilton_paths(graph_of(make_full_sn(4)), 10), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == errc::bound_exceeded; }));
  REQUIRE(count_hamilton_paths(graph_of(make_full_bn(3)), 8) == 72);
}

TEST_CASE("search matches exhaustive enumeration on small universes") {
  // every subset of B_3 under bitflip, and of the shift graph; counts and answers
  for (FlipFamily f : {FlipFamily::bitflip, FlipFamily::register_shift}) {
    for (const Instance& sub : all_subsets(make_full_bn(3, f))) {
      FlipGraph g = build_flip_graph(sub);
      SolveResult r = has_hamilton_path(g);
      REQUIRE(r.answer != Answer::unknown);
      if (r.certificate) REQUIRE(verify_certificate(sub, *r.certificate));
      BruteForceResult b = brute_force_hamilton(g);
      REQUIRE(r.answer == b.answer);
      REQUIRE(count_hamilton_paths(g) == b.count);
      REQUIRE((b.count > 0) == (r.answer == Answer::yes));
    }
  }
  // every subset of S_3 under swap
  for (const Instance& sub : all_subsets(make_full_sn(3))) {
    FlipGraph g = build_flip_graph(sub);
    SolveResult r = has_hamilton_path(g);
    BruteForceResult b = brute_force_hamilton(g);
    REQUIRE(r.answer == b.answer);
    REQUIRE(count_hamilton_paths(g) == b.count);
    if (r.certificate) REQUIRE(verify_certificate(sub, *r.certificate));
  }
}

TEST_CASE("directed hamilton paths through the shift graph") {
  Instance full = make_full_bn(3, FlipFamily::register_shift);
  SolveResult r = has_hamilton_path(build_flip_graph(full));
  REQUIRE(r.answer == Answer::yes);
  REQUIRE(verify_certificate(full, *r.certificate));
}
