#include <catch2/catch_amalgamated.hpp>

#include "graycode/graycode.hpp"

using namespace graycode;

TEST_CASE("brute force enumeration") {
  BruteForceResult star = brute_force_hamilton(build_flip_graph(make_named_instance("abstract-no", std::nullopt)));
  REQUIRE(star.answer == Answer::no);
  REQUIRE(star.count == 0);

  BruteForceResult q2 = brute_force_hamilton(build_flip_graph(make_full_bn(2)));
  REQUIRE(q2.answer == Answer::yes);
  REQUIRE(q2.count == 4);

  BruteForceResult one =
      brute_force_hamilton(build_flip_graph(make_instance(Kind::bitstring, FlipFamily::bitflip, {"0"})));
  REQUIRE(one.answer == Answer::yes);
  REQUIRE(one.count == 1);

  // direction respected: one shift chain, one order
  BruteForceResult chain = brute_force_hamilton(
      build_flip_graph(make_instance(Kind::bitstring, FlipFamily::register_shift, {"111", "110"})));
  REQUIRE(chain.answer == Answer::yes);
  REQUIRE(chain.count == 1);

  CHECK_THROWS_MATCHES(brute_force_hamilton(build_flip_graph(make_full_bn(4))), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == errc::bound_exceeded; }));
}

TEST_CASE("reduction scan on the full 3-cube") {
  ReductionReport rep = check_reduction(ReductionTag::bits_to_ncpartitions, make_full_bn(3));
  REQUIRE(rep.pairs_checked == 28);
  REQUIRE(rep.adjacency_iff_violations == 0);
  REQUIRE(rep.injective);
  REQUIRE(rep.parsimony_samples.size() == 1);
  REQUIRE(rep.parsimony_samples[0].first == rep.parsimony_samples[0].second);
  REQUIRE(rep.pass());
}

TEST_CASE("a broken map is caught by the scan") {
  // dropping the padding from the reversal map: 00 and 11 are not bitflip-adjacent,
  // but their unpadded images 0101 and 1010 are one reversal apart
  Instance src = make_instance(Kind::bitstring, FlipFamily::bitflip, {"00", "11"});
  auto images = bits_to_combinations_swap({BitString{"00"}, BitString{"11"}});
  REQUIRE(images[0].bits == "0101");
  REQUIRE(images[1].bits == "1010");
  long long violations = 0;
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = i + 1; j < 2; ++j) {
      bool sadj = flip_adjacent(src.flip, src.objects[i], src.objects[j]);
      bool tadj = seq_adjacent_reversal(images[i].bits, images[j].bits);
      if (sadj != tadj) ++violations;
    }
  REQUIRE(violations == 1);
}

TEST_CASE("hypercube inducement") {
  for (ReductionTag tag :
       {ReductionTag::bits_to_ncpartitions, ReductionTag::bits_to_combos_swap,
        ReductionTag::bits_to_combos_complement, ReductionTag::bits_to_combos_reversal,
        ReductionTag::bits_to_perms_pairs, ReductionTag::bits_to_peakless,
        ReductionTag::bits_to_trees, ReductionTag::bits_to_matchings})
    for (int n = 1; n <= 4; ++n) REQUIRE(check_hypercube_inducement(tag, n));

  CHECK_THROWS_MATCHES(check_hypercube_inducement(ReductionTag::tuples_to_bits, 3), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == errc::kind_mismatch; }));
}

TEST_CASE("refusals must be backed by a brute-force no") {
  Instance gapped;
  gapped.kind = Kind::tuple;
  gapped.flip = FlipFamily::pm1_tuple;
  gapped.objects = {Object{Tuple2{1, 1}}, Object{Tuple2{3, 1}}};
  validate_instance(gapped);
  ReductionReport rep = check_reduction(ReductionTag::tuples_normalize, gapped);
  REQUIRE(rep.no_instance_sound);
  REQUIRE(rep.pairs_checked == 0);
  REQUIRE(rep.pass());
}

TEST_CASE("seeded verification runs are deterministic and pass") {
  for (ReductionTag tag : kAllReductionTags) {
    ReductionReport rep = run_reduction_verification(tag, 3, 20260819, 8);
    INFO("tag " << reduction_name(tag));
    REQUIRE(rep.pass());
    REQUIRE(rep.pairs_checked > 0);
    ReductionReport again = run_reduction_verification(tag, 3, 20260819, 8);
    REQUIRE(again.pairs_checked == rep.pairs_checked);
    REQUIRE(again.adjacency_iff_violations == rep.adjacency_iff_violations);
    REQUIRE(again.parsimony_samples == rep.parsimony_samples);
    REQUIRE(again.hypercube_checks == rep.hypercube_checks);
  }
}

TEST_CASE("solver agrees with brute force family by family") {
  // all three-element subsets of S_3 under each permutation family
  Instance s3 = make_full_sn(3);
  for (FlipFamily f : {FlipFamily::swap, FlipFamily::transposition, FlipFamily::reversal,
                       FlipFamily::rotation, FlipFamily::jump}) {
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k) {
          Instance sub;
          sub.kind = Kind::permutation;
          sub.flip = f;
          sub.objects = {s3.objects[i], s3.objects[j], s3.objects[k]};
          validate_instance(sub);
          FlipGraph g = build_flip_graph(sub);
          REQUIRE(has_hamilton_path(g).answer == brute_force_hamilton(g).answer);
        }
  }
}
