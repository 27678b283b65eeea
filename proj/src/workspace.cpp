#include "subsetmetric/workspace.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace subsetmetric {

using json = nlohmann::ordered_json;

namespace {

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const json& member(const json& object, const std::string& key, const std::string& path) {
  if (!object.is_object()) throw SchemaError(path, "expected an object");
  const auto it = object.find(key);
  if (it == object.end()) throw SchemaError(path, "missing key \"" + key + "\"");
  return *it;
}

double number(const json& value, const std::string& path) {
  if (!value.is_number()) throw SchemaError(path, "expected a number");
  return value.get<double>();
}

GroundSpace::Params parse_space(const json& doc) {
  const std::string path = "/space";
  const json& kind = member(doc, "kind", path);
  if (!kind.is_string()) throw SchemaError(path + "/kind", "expected a string");
  const std::string name = kind.get<std::string>();

  if (name == "hamming") {
    const json& alphabet = member(doc, "alphabet", path);
    if (!alphabet.is_string()) throw SchemaError(path + "/alphabet", "expected a string");
    const json& length = member(doc, "length", path);
    if (!length.is_number_unsigned()) throw SchemaError(path + "/length", "expected a positive integer");
    return HammingSpace(alphabet.get<std::string>(), length.get<std::size_t>());
  }
  if (name == "euclidean_box") {
    const json& bounds = member(doc, "bounds", path);
    if (!bounds.is_array()) throw SchemaError(path + "/bounds", "expected an array of [lo, hi]");
    std::vector<Interval> intervals;
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      const std::string at = path + "/bounds/" + std::to_string(i);
      if (!bounds[i].is_array() || bounds[i].size() != 2) throw SchemaError(at, "expected [lo, hi]");
      intervals.push_back({number(bounds[i][0], at + "/0"), number(bounds[i][1], at + "/1")});
    }
    return EuclideanBox(std::move(intervals));
  }
  if (name == "graph") {
    const json& vertices = member(doc, "vertices", path);
    if (!vertices.is_number_integer()) throw SchemaError(path + "/vertices", "expected an integer");
    std::vector<WeightedEdge> edges;
    if (const auto it = doc.find("edges"); it != doc.end()) {
      if (!it->is_array()) throw SchemaError(path + "/edges", "expected an array of [u, v, w]");
      for (std::size_t i = 0; i < it->size(); ++i) {
        const json& e = (*it)[i];
        const std::string at = path + "/edges/" + std::to_string(i);
        if (!e.is_array() || e.size() < 2 || e.size() > 3 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
          throw SchemaError(at, "expected [u, v] or [u, v, weight]");
        edges.push_back({e[0].get<int>(), e[1].get<int>(), e.size() == 3 ? number(e[2], at + "/2") : 1.0});
      }
    }
    return GraphSpace(vertices.get<int>(), std::move(edges));
  }
  throw SchemaError(path + "/kind", "unknown space kind \"" + name +
                                        "\" (expected hamming, euclidean_box or graph)");
}

Element parse_element(const GroundSpace& space, const json& value, const std::string& path) {
  switch (space.kind()) {
    case SpaceKind::hamming:
      if (!value.is_string()) throw SchemaError(path, "expected a word (string)");
      return Word{value.get<std::string>()};
    case SpaceKind::euclidean_box: {
      if (value.is_number()) return Point{{value.get<double>()}};
      if (!value.is_array()) throw SchemaError(path, "expected a point (array of numbers)");
      Point p;
      for (std::size_t i = 0; i < value.size(); ++i)
        p.coords.push_back(number(value[i], path + "/" + std::to_string(i)));
      return p;
    }
    case SpaceKind::graph:
      if (!value.is_number_integer()) throw SchemaError(path, "expected a vertex id (integer)");
      return Vertex{value.get<int>()};
  }
  throw SchemaError(path, "unsupported space");
}

MFunction parse_m(const SpaceHandle& space, const json* doc) {
  if (doc == nullptr) return MFunction::diameter(space);
  const std::string path = "/m_function";
  const json& kind = member(*doc, "kind", path);
  if (!kind.is_string()) throw SchemaError(path + "/kind", "expected a string");
  const std::string name = kind.get<std::string>();
  if (name == "constant") return MFunction::constant(space, number(member(*doc, "value", path), path + "/value"));
  if (name == "diameter") return MFunction::diameter(space);
  if (name == "eccentricity") return MFunction::eccentricity(space);
  if (name == "table") {
    const json& entries = member(*doc, "entries", path);
    if (!entries.is_array()) throw SchemaError(path + "/entries", "expected an array of [element, value]");
    std::vector<std::pair<Element, double>> table;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string at = path + "/entries/" + std::to_string(i);
      if (!entries[i].is_array() || entries[i].size() != 2) throw SchemaError(at, "expected [element, value]");
      table.emplace_back(parse_element(*space, entries[i][0], at + "/0"), number(entries[i][1], at + "/1"));
    }
    return MFunction::table(space, std::move(table));
  }
  throw SchemaError(path + "/kind", "unknown M-function \"" + name +
                                        "\" (expected constant, diameter, eccentricity or table)");
}

void note_duplicates(Workspace& ws, const NamedSet& named) {
  if (named.set.duplicates_removed() > 0)
    ws.warnings.push_back("set \"" + named.name + "\": dropped " +
                          std::to_string(named.set.duplicates_removed()) + " duplicate element(s)");
}

void check_table_covers_sets(const Workspace& ws) {
  if (ws.m.variant() != MFunction::Variant::table) return;
  for (const auto& named : ws.sets)
    for (const auto& e : named.set.elements())
      if (!ws.m.table_entries().contains(e))
        throw ValidationError("M table has no entry for " + to_string(e) + " of set \"" +
                              named.name + "\"");
}

Workspace parse_json_workspace(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, column);
  }
  if (!doc.is_object()) throw SchemaError("", "expected a JSON object at the top level");

  const auto space = make_space(parse_space(member(doc, "space", "")));
  const auto m_it = doc.find("m_function");
  Workspace ws{space, parse_m(space, m_it == doc.end() ? nullptr : &*m_it), {}, {}};

  const json& sets = member(doc, "sets", "");
  if (!sets.is_object()) throw SchemaError("/sets", "expected an object of named element lists");
  for (const auto& [name, list] : sets.items()) {
    const std::string path = "/sets/" + name;
    if (!list.is_array()) throw SchemaError(path, "expected an array of elements");
    std::vector<Element> elements;
    for (std::size_t i = 0; i < list.size(); ++i)
      elements.push_back(parse_element(*space, list[i], path + "/" + std::to_string(i)));
    ws.sets.push_back({name, PointSet(space, std::move(elements))});
    note_duplicates(ws, ws.sets.back());
  }
  check_table_covers_sets(ws);
  return ws;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

// Blank-line separated blocks of equal-length words; block k is "set_k".
// "# alphabet: XYZ" declares the alphabet, other '#' lines are comments.
Workspace parse_sequence_workspace(std::string_view text) {
  std::string alphabet;
  std::vector<std::vector<std::pair<std::string, std::size_t>>> blocks(1);
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) {
      if (!blocks.back().empty()) blocks.emplace_back();
      continue;
    }
    if (line.front() == '#') {
      const std::string body = trim(std::string_view(line).substr(1));
      constexpr std::string_view key = "alphabet:";
      if (body.rfind(key, 0) == 0) alphabet = trim(std::string_view(body).substr(key.size()));
      continue;
    }
    if (line.find_first_of(" \t") != std::string::npos)
      throw ParseError("a sequence line must hold exactly one word", line_no, 1);
    blocks.back().emplace_back(line, line_no);
  }
  if (blocks.back().empty()) blocks.pop_back();
  if (blocks.empty()) throw SchemaError("line 1", "no sequences found");

  const std::size_t length = blocks.front().front().first.size();
  std::set<char> letters;
  for (const auto& block : blocks)
    for (const auto& [word, at] : block) {
      if (word.size() != length)
        throw ParseError("word \"" + word + "\" has length " + std::to_string(word.size()) +
                             ", expected " + std::to_string(length),
                         at, 1);
      letters.insert(word.begin(), word.end());
    }
  if (alphabet.empty()) {
    const bool dna = std::all_of(letters.begin(), letters.end(),
                                 [](char c) { return std::string_view("ACGT").find(c) != std::string_view::npos; });
    alphabet = dna ? "ACGT" : std::string(letters.begin(), letters.end());
  }

  const auto space = make_space(HammingSpace(alphabet, length));
  Workspace ws{space, MFunction::constant(space, static_cast<double>(length)), {}, {}};
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    std::vector<Element> elements;
    for (const auto& [word, at] : blocks[k]) elements.emplace_back(Word{word});
    ws.sets.push_back({"set_" + std::to_string(k + 1), PointSet(space, std::move(elements))});
    note_duplicates(ws, ws.sets.back());
  }
  return ws;
}

}  // namespace

const PointSet& Workspace::set(std::string_view name) const {
  for (const auto& named : sets)
    if (named.name == name) return named.set;
  throw UsageError("no set named \"" + std::string(name) + "\"");
}

Workspace parse_workspace(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json_workspace(text);
  return parse_sequence_workspace(text);
}

Workspace load_workspace(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_workspace(buffer.str());
}

MFunction parse_m_option(const SpaceHandle& space, std::string_view option) {
  if (option == "diameter") return MFunction::diameter(space);
  if (option == "eccentricity") return MFunction::eccentricity(space);
  constexpr std::string_view prefix = "constant:";
  if (option.substr(0, prefix.size()) == prefix) {
    const std::string_view digits = option.substr(prefix.size());
    double value = 0.0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty())
      throw UsageError("--m constant:<v> needs a number, got \"" + std::string(digits) + "\"");
    return MFunction::constant(space, value);
  }
  throw UsageError("--m must be constant:<v>, diameter or eccentricity, got \"" +
                   std::string(option) + "\"");
}

std::vector<Element> m_check_sample(const Workspace& ws) {
  std::set<Element> pool;
  for (const auto& [e, value] : ws.m.table_entries()) pool.insert(e);
  for (const auto& named : ws.sets) pool.insert(named.set.elements().begin(), named.set.elements().end());
  return {pool.begin(), pool.end()};
}

void certify_m(const Workspace& ws) {
  if (ws.m.variant() != MFunction::Variant::table) return;
  const auto sample = m_check_sample(ws);
  const auto report = validate_condition2(*ws.space, ws.m, sample);
  if (!report.passed()) {
    const auto& v = report.violations.front();
    throw ValidationError("M table violates condition (2): " +
                          std::to_string(report.violations.size()) + " violation(s), first at x = " +
                          to_string(v.x) + ", other = " + to_string(v.other) + " (" +
                          std::to_string(v.lhs) + " > " + std::to_string(v.rhs) + ")");
  }
}

json element_to_json(const Element& e) {
  if (const auto* w = std::get_if<Word>(&e)) return w->letters;
  if (const auto* p = std::get_if<Point>(&e)) return p->coords;
  return std::get<Vertex>(e).id;
}

json to_json(const Workspace& ws) {
  json space;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HammingSpace>) {
          space = {{"kind", "hamming"}, {"alphabet", s.alphabet()}, {"length", s.length()}};
        } else if constexpr (std::is_same_v<T, EuclideanBox>) {
          json bounds = json::array();
          for (const auto& b : s.bounds()) bounds.push_back({b.lo, b.hi});
          space = {{"kind", "euclidean_box"}, {"bounds", bounds}};
        } else {
          json edges = json::array();
          for (const auto& e : s.edges()) edges.push_back({e.u, e.v, e.weight});
          space = {{"kind", "graph"}, {"vertices", s.vertex_count()}, {"edges", edges}};
        }
      },
      ws.space->params());

  json m = {{"kind", to_string(ws.m.variant())}};
  if (ws.m.variant() == MFunction::Variant::constant) m["value"] = *ws.m.constant_value();
  if (ws.m.variant() == MFunction::Variant::table) {
    json entries = json::array();
    for (const auto& [e, value] : ws.m.table_entries()) entries.push_back({element_to_json(e), value});
    m["entries"] = entries;
  }

  json sets = json::object();
  for (const auto& named : ws.sets) {
    json list = json::array();
    for (const auto& e : named.set.elements()) list.push_back(element_to_json(e));
    sets[named.name] = list;
  }
  return {{"space", space}, {"m_function", m}, {"sets", sets}};
}

}  // namespace subsetmetric
