#pragma once

#include <iosfwd>
#include <string>

#include "cardrep/characters.hpp"
#include "cardrep/partitions.hpp"
#include "cardrep/plancherel_chain.hpp"
#include "cardrep/shuffles.hpp"

namespace cardrep {

/// Exact values print as p/q, doubles with 17 significant digits.
std::string format_value(const Rational& v);
std::string format_value(double v);

/// Quotes a field when it holds a comma.
std::string csv_field(const std::string& text);

/// "lambda,mass" rows with a header line.
template <class T>
void write_distribution_csv(std::ostream& out, const PartitionDistribution<T>& dist, const std::string& value_name = "mass");

void write_character_table_csv(std::ostream& out, const CharacterTable& table);

/// Plain-text group description:
///
///   group_order 6
///   classes
///   e 1
///   t 3
///   c 2
///   chars
///   1 1 1 1
///   1 1 -1 1
///   2 2 0 -1
///
/// Each `chars` line is the dimension followed by the values on the classes.
/// `#` starts a comment. Throws ParseError on malformed input; the GroupData
/// constructor checks consistency.
GroupData read_group_data(std::istream& in);
GroupData read_group_data_file(const std::string& path);
void write_group_data(std::ostream& out, const GroupData& group);

/// `subgroup_order M` followed by `label p/q` lines, one per class.
ClassRatioVector read_class_ratios(std::istream& in);
ClassRatioVector read_class_ratios_file(const std::string& path);

/// Lines `L=<indices|empty> p=<rational>` for a deck of n cards.
ShuffleSpec read_shuffle_spec(std::istream& in, int n);
ShuffleSpec read_shuffle_spec_file(const std::string& path, int n);
void write_shuffle_spec(std::ostream& out, const ShuffleSpec& spec);

}  // namespace cardrep
