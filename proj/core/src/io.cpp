#include "cardrep/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "cardrep/errors.hpp"

namespace cardrep {

std::string format_value(const Rational& v) { return to_string(v); }

std::string format_value(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
void write_distribution_csv(std::ostream& out, const PartitionDistribution<T>& dist, const std::string& value_name) {
  out << "lambda," << value_name << '\n';
  for (std::size_t i = 0; i < dist.size(); ++i)
    out << csv_field(dist.labels()[i].to_string()) << ',' << format_value(dist[i]) << '\n';
}

template void write_distribution_csv<Rational>(std::ostream&, const PartitionDistribution<Rational>&,
                                               const std::string&);
template void write_distribution_csv<double>(std::ostream&, const PartitionDistribution<double>&, const std::string&);

void write_character_table_csv(std::ostream& out, const CharacterTable& table) {
  out << "lambda";
  for (const auto& mu : table.partitions()) out << ',' << csv_field(mu.to_string());
  out << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << csv_field(table.partitions()[i].to_string());
    for (std::size_t c = 0; c < table.size(); ++c) out << ',' << table.value(i, c);
    out << '\n';
  }
}

namespace {

/// Non-empty lines with comments stripped, each split on whitespace.
std::vector<std::vector<std::string>> tokenized_lines(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

Integer parse_integer(const std::string& text) {
  Integer out;
  if (text.empty() || out.set_str(text, 10) != 0) throw ParseError("malformed integer '" + text + "'");
  return out;
}

std::int64_t parse_int64(const std::string& text) {
  const Integer v = parse_integer(text);
  if (!v.fits_slong_p()) throw ParseError("integer out of range '" + text + "'");
  return v.get_si();
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  return in;
}

}  // namespace

GroupData read_group_data(std::istream& in) {
  const auto lines = tokenized_lines(in);
  Integer order = 0;
  std::vector<std::string> labels;
  std::vector<Integer> sizes;
  std::vector<Integer> dims;
  std::vector<std::vector<std::int64_t>> chars;
  enum { header, classes, characters } section = header;
  bool have_order = false;
  for (const auto& t : lines) {
    if (t[0] == "group_order") {
      if (t.size() != 2) throw ParseError("group_order takes one value");
      order = parse_integer(t[1]);
      have_order = true;
    } else if (t[0] == "classes" && t.size() == 1) {
      section = classes;
    } else if (t[0] == "chars" && t.size() == 1) {
      section = characters;
    } else if (section == classes) {
      if (t.size() != 2) throw ParseError("class lines are 'label size'");
      labels.push_back(t[0]);
      sizes.push_back(parse_integer(t[1]));
    } else if (section == characters) {
      if (t.size() != labels.size() + 1)
        throw ParseError("character lines need a dimension and one value per class");
      dims.push_back(parse_integer(t[0]));
      std::vector<std::int64_t> row;
      for (std::size_t i = 1; i < t.size(); ++i) row.push_back(parse_int64(t[i]));
      chars.push_back(std::move(row));
    } else {
      throw ParseError("unexpected line starting with '" + t[0] + "'");
    }
  }
  if (!have_order) throw ParseError("missing group_order");
  if (labels.empty() || chars.empty()) throw ParseError("missing classes or chars block");
  return GroupData(order, std::move(labels), std::move(sizes), std::move(dims), std::move(chars));
}

GroupData read_group_data_file(const std::string& path) {
  auto in = open(path);
  return read_group_data(in);
}

void write_group_data(std::ostream& out, const GroupData& group) {
  out << "group_order " << to_string(group.group_order()) << "\nclasses\n";
  for (std::size_t c = 0; c < group.class_count(); ++c)
    out << group.class_labels()[c] << ' ' << to_string(group.class_sizes()[c]) << '\n';
  out << "chars\n";
  for (std::size_t i = 0; i < group.irreducible_count(); ++i) {
    out << to_string(group.dimensions()[i]);
    for (std::size_t c = 0; c < group.class_count(); ++c) out << ' ' << group.character(i, c);
    out << '\n';
  }
}

ClassRatioVector read_class_ratios(std::istream& in) {
  const auto lines = tokenized_lines(in);
  Integer order = 0;
  bool have_order = false;
  std::vector<std::string> labels;
  std::vector<Rational> ratios;
  for (const auto& t : lines) {
    if (t.size() != 2) throw ParseError("ratio lines are 'label value'");
    if (t[0] == "subgroup_order") {
      order = parse_integer(t[1]);
      have_order = true;
    } else {
      labels.push_back(t[0]);
      ratios.push_back(parse_rational(t[1]));
    }
  }
  if (!have_order) throw ParseError("missing subgroup_order");
  return ClassRatioVector(order, std::move(labels), std::move(ratios));
}

ClassRatioVector read_class_ratios_file(const std::string& path) {
  auto in = open(path);
  return read_class_ratios(in);
}

ShuffleSpec read_shuffle_spec(std::istream& in, int n) {
  std::map<RootSubset, Rational> weights;
  for (const auto& t : tokenized_lines(in)) {
    if (t.size() != 2 || t[0].rfind("L=", 0) != 0 || t[1].rfind("p=", 0) != 0)
      throw ParseError("shuffle lines are 'L=<indices|empty> p=<rational>'");
    const RootSubset roots = RootSubset::parse(n, std::string_view(t[0]).substr(2));
    weights[roots] += parse_rational(std::string_view(t[1]).substr(2));
  }
  if (weights.empty()) throw ParseError("shuffle file has no lines");
  return ShuffleSpec(n, std::move(weights));
}

ShuffleSpec read_shuffle_spec_file(const std::string& path, int n) {
  auto in = open(path);
  return read_shuffle_spec(in, n);
}

void write_shuffle_spec(std::ostream& out, const ShuffleSpec& spec) {
  for (const auto& [roots, p] : spec.weights()) out << "L=" << roots.to_string() << " p=" << to_string(p) << '\n';
}

}  // namespace cardrep
