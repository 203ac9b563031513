#include "h4/census_report.hpp"

#include <fmt/format.h>

#include "json.hpp"

namespace h4 {

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + s + "' (expected text, csv or json)");
}

Census compute_census(const Matroid& m) {
  Census c;
  c.counts = m.flat_counts();
  c.counts[FlatClass::Point] = m.size();
  c.incidence = incidence_table(m);
  return c;
}

const std::map<FlatClass, int>& reference_flat_counts() {
  static const std::map<FlatClass, int> counts{
      {FlatClass::Point, 60}, {FlatClass::Line2, 450}, {FlatClass::Line3, 200}, {FlatClass::Line5, 72},
      {FlatClass::Pi3, 600},  {FlatClass::Pi5, 360},   {FlatClass::Pi6, 300},   {FlatClass::Pi15, 60}};
  return counts;
}

const std::map<std::pair<FlatClass, FlatClass>, int>& reference_incidence() {
  using F = FlatClass;
  static const std::map<std::pair<F, F>, int> table = [] {
    std::map<std::pair<F, F>, int> t;
    const std::map<F, std::vector<int>> rows{
        {F::Point, {15, 10, 6, 10, 6, 30, 15}},
        {F::Line2, {1, 0, 0, 4, 4, 2, 2}},
        {F::Line3, {0, 1, 0, 3, 0, 6, 3}},
        {F::Line5, {0, 0, 1, 0, 5, 0, 5}},
    };
    for (const auto& [row, values] : rows) {
      for (std::size_t j = 0; j < values.size(); ++j) t[{row, kIncidenceColumns[j]}] = values[j];
    }
    return t;
  }();
  return table;
}

namespace {

// The value compared with the reference: apex counts for a point in Pi3/Pi5.
const IncidenceCount& compared_cell(const IncidenceTable& t, FlatClass row, FlatClass col) {
  if (row == FlatClass::Point && col == FlatClass::Pi3) return t.apex_pi3;
  if (row == FlatClass::Point && col == FlatClass::Pi5) return t.apex_pi5;
  return t.at(row, col);
}

std::string cell_text(const IncidenceCount& c) {
  return c.uniform() ? std::to_string(c.min) : fmt::format("{}..{}", c.min, c.max);
}

std::string row_name(FlatClass c) {
  if (c == FlatClass::Point) return "A point is in";
  std::string name(display_name(c));
  name.pop_back();  // "2-pt lines" -> "2-pt line"
  return "A " + name + " is in";
}

}  // namespace

std::vector<std::string> census_mismatches(const Census& c) {
  std::vector<std::string> out;
  for (const auto& [cls, want] : reference_flat_counts()) {
    const auto it = c.counts.find(cls);
    const int got = it == c.counts.end() ? 0 : it->second;
    if (got != want) out.push_back(fmt::format("{}: {} (expected {})", tag(cls), got, want));
  }
  for (const auto& [cls, n] : c.counts) {
    if (!reference_flat_counts().count(cls) && n != 0) out.push_back(fmt::format("unexpected class {}: {}", tag(cls), n));
  }
  for (const auto& [key, want] : reference_incidence()) {
    const auto& cell = compared_cell(c.incidence, key.first, key.second);
    if (!cell.uniform() || cell.min != want) {
      out.push_back(fmt::format("{} in {}: {} (expected {})", tag(key.first), tag(key.second), cell_text(cell), want));
    }
  }
  const auto& p3 = c.incidence.at(FlatClass::Point, FlatClass::Pi3);
  const auto& p5 = c.incidence.at(FlatClass::Point, FlatClass::Pi5);
  if (!p3.uniform() || p3.min != kPointPi3Total) out.push_back("point in pi3 (total): " + cell_text(p3));
  if (!p5.uniform() || p5.min != kPointPi5Total) out.push_back("point in pi5 (total): " + cell_text(p5));
  if (c.bases != 0 && c.bases != kReferenceBases) out.push_back(fmt::format("bases: {}", c.bases));
  if (c.orthoframes != 0 && c.orthoframes != kReferenceOrthoframes) {
    out.push_back(fmt::format("orthoframes: {}", c.orthoframes));
  }
  return out;
}

namespace {

constexpr FlatClass kCountOrder[] = {FlatClass::Point, FlatClass::Line2, FlatClass::Line3, FlatClass::Line5,
                                     FlatClass::Pi3,   FlatClass::Pi5,   FlatClass::Pi6,   FlatClass::Pi15};

int count_of(const Census& c, FlatClass cls) {
  const auto it = c.counts.find(cls);
  return it == c.counts.end() ? 0 : it->second;
}

// Pads by code points so the Greek capitals line up.
std::string pad(const std::string& s, std::size_t width) {
  std::size_t cps = 0;
  for (unsigned char ch : s) cps += (ch & 0xC0) != 0x80;
  return s + std::string(width > cps ? width - cps : 0, ' ');
}

std::string render_text(const Census& c) {
  std::string out = "Flats by class\n";
  for (FlatClass cls : kCountOrder) {
    out += fmt::format("  {}: {}\n", display_name(cls), count_of(c, cls));
  }
  if (c.bases) out += fmt::format("  bases: {} of {}\n", c.bases, c.subsets);
  if (c.orthoframes) out += fmt::format("  orthoframes: {}\n", c.orthoframes);

  out += "\nFlats containing a given flat\n";
  out += pad("", 18);
  for (FlatClass col : kIncidenceColumns) out += pad(std::string(display_name(col)), 12);
  out += "\n";
  for (FlatClass row : kIncidenceRows) {
    out += pad(row_name(row), 18);
    for (FlatClass col : kIncidenceColumns) {
      std::string cell = cell_text(c.incidence.at(row, col));
      if (row == FlatClass::Point && (col == FlatClass::Pi3 || col == FlatClass::Pi5)) {
        cell = cell_text(compared_cell(c.incidence, row, col)) + " (" + cell + ")";
      }
      out += pad(cell, 12);
    }
    out += "\n";
  }
  out += "For a point, the Π3 and Π5 columns count planes where it is the apex;\n"
         "all containing planes are in parentheses.\n";
  return out;
}

std::string render_csv(const Census& c) {
  std::string out = "table,row,column,value\n";
  for (FlatClass cls : kCountOrder) out += fmt::format("flats,{},count,{}\n", tag(cls), count_of(c, cls));
  if (c.bases) out += fmt::format("flats,bases,count,{}\n", c.bases);
  if (c.orthoframes) out += fmt::format("flats,orthoframes,count,{}\n", c.orthoframes);
  for (FlatClass row : kIncidenceRows) {
    for (FlatClass col : kIncidenceColumns) {
      out += fmt::format("incidence,{},{},{}\n", tag(row), tag(col), cell_text(c.incidence.at(row, col)));
    }
  }
  out += fmt::format("incidence,point,pi3_apex,{}\n", cell_text(c.incidence.apex_pi3));
  out += fmt::format("incidence,point,pi5_apex,{}\n", cell_text(c.incidence.apex_pi5));
  return out;
}

std::string render_json(const Census& c) {
  nlohmann::ordered_json j;
  for (FlatClass cls : kCountOrder) j["flats"][std::string(tag(cls))] = count_of(c, cls);
  if (c.bases) j["bases"] = c.bases;
  if (c.orthoframes) j["orthoframes"] = c.orthoframes;
  auto cell_json = [](const IncidenceCount& k) {
    nlohmann::ordered_json v;
    v["min"] = k.min;
    v["max"] = k.max;
    return v;
  };
  for (FlatClass row : kIncidenceRows) {
    for (FlatClass col : kIncidenceColumns) {
      j["incidence"][std::string(tag(row))][std::string(tag(col))] = cell_json(c.incidence.at(row, col));
    }
  }
  j["incidence"]["point"]["pi3_apex"] = cell_json(c.incidence.apex_pi3);
  j["incidence"]["point"]["pi5_apex"] = cell_json(c.incidence.apex_pi5);
  const auto bad = census_mismatches(c);
  j["matches_reference"] = bad.empty();
  j["mismatches"] = bad;
  return j.dump(2) + "\n";
}

}  // namespace

std::string render_census(const Census& c, Format format) {
  switch (format) {
    case Format::Text: return render_text(c);
    case Format::Csv: return render_csv(c);
    case Format::Json: return render_json(c);
  }
  return {};
}

}  // namespace h4
