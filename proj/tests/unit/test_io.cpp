#include <gtest/gtest.h>

#include <sstream>

#include "cardrep/errors.hpp"
#include "cardrep/io.hpp"
#include "cardrep/parabolic.hpp"
#include "support.hpp"

using namespace cardrep;
using testing_support::C;
using testing_support::Q;

TEST(Io, DistributionCsv) {
  std::ostringstream out;
  write_distribution_csv(out, plancherel<Rational>(3));
  EXPECT_EQ(out.str(), "lambda,mass\n3,1/6\n\"2,1\",2/3\n\"1,1,1\",1/6\n");
  std::ostringstream dbl;
  write_distribution_csv(dbl, plancherel<double>(2), "p");
  EXPECT_EQ(dbl.str(), "lambda,p\n2,0.5\n\"1,1\",0.5\n");
}

TEST(Io, CharacterTableCsv) {
  std::ostringstream out;
  write_character_table_csv(out, CharacterTable::build(2));
  EXPECT_EQ(out.str(), "lambda,2,\"1,1\"\n2,1,1\n\"1,1\",-1,1\n");
}

TEST(Io, GroupDataRoundTrip) {
  const GroupData s4 = GroupData::symmetric(CharacterTable::build(4));
  std::stringstream buffer;
  write_group_data(buffer, s4);
  const GroupData back = read_group_data(buffer);
  EXPECT_EQ(back.group_order(), 24);
  EXPECT_EQ(back.class_labels(), s4.class_labels());
  EXPECT_EQ(back.dimensions(), s4.dimensions());
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t c = 0; c < 5; ++c) EXPECT_EQ(back.character(i, c), s4.character(i, c));
}

TEST(Io, GroupDataErrors) {
  std::istringstream missing("classes\ne 1\nchars\n1 1\n");
  EXPECT_THROW(read_group_data(missing), ParseError);
  std::istringstream bad_row("group_order 2\nclasses\ne 1\ns 1\nchars\n1 1 1\n1 1\n");
  EXPECT_THROW(read_group_data(bad_row), ParseError);
  std::istringstream not_orthogonal("group_order 2\nclasses\ne 1\ns 1\nchars\n1 1 1\n1 1 1\n");
  EXPECT_THROW(read_group_data(not_orthogonal), Error);
}

TEST(Io, ClassRatios) {
  std::istringstream in("# S_2 in S_3\nsubgroup_order 2\n3 0\n2,1 1/3\n1,1,1 1\n");
  const auto crv = read_class_ratios(in);
  EXPECT_EQ(crv.subgroup_order(), 2);
  EXPECT_EQ(crv.ratios(), (std::vector<Rational>{Q(0), Q(1, 3), Q(1)}));
  EXPECT_NO_THROW(crv.check_against(GroupData::symmetric(CharacterTable::build(3))));
  std::istringstream bad("subgroup_order 2\n3 x\n");
  EXPECT_THROW(read_class_ratios(bad), ParseError);
}

TEST(Io, ShuffleSpecRoundTrip) {
  const auto spec = ShuffleSpec::mixture({{Q(1, 3), ShuffleSpec::top_to_random(5)}, {Q(2, 3), ShuffleSpec::riffle_k_cut(5, 2)}});
  std::stringstream buffer;
  write_shuffle_spec(buffer, spec);
  EXPECT_EQ(read_shuffle_spec(buffer, 5), spec);
  std::istringstream empty_l("L=empty p=1\n");
  EXPECT_EQ(read_shuffle_spec(empty_l, 3), ShuffleSpec::single(RootSubset::none(3)));
  std::istringstream short_total("L=1 p=1/2\n");
  EXPECT_THROW(read_shuffle_spec(short_total, 3), ArgumentError);
  std::istringstream garbage("L=1 q=1\n");
  EXPECT_THROW(read_shuffle_spec(garbage, 3), ParseError);
}

TEST(Io, FormatValue) {
  EXPECT_EQ(format_value(Q(-2, 4)), "-1/2");
  EXPECT_EQ(format_value(Q(3)), "3");
  EXPECT_EQ(format_value(0.1), "0.10000000000000001");
  EXPECT_EQ(csv_field("a\"b"), "\"a\"\"b\"");
}
