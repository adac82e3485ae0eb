#include "fcw/io.hpp"

#include <sstream>

#include <json.hpp>

#include "fcw/error.hpp"

namespace fcw {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

std::vector<std::string> parse_chain(const json& chain, const std::string& where) {
  if (!chain.is_object()) throw ParseError(where + ": boundary must be an object");
  std::vector<std::string> out;
  for (const auto& [id, coeff] : chain.items()) {
    if (!coeff.is_number_integer()) {
      throw ParseError(where + ": boundary coefficient of '" + id + "' must be an integer");
    }
    if (coeff.get<long long>() % 2 != 0) out.push_back(id);
  }
  return out;
}

Exponent parse_weight(const json& w, const std::string& where) {
  if (!w.is_string()) throw ParseError(where + ": weight must be a string");
  Exponent e = parse_extended(w.get<std::string>());
  if (e.is_pos_inf()) throw ParseError(where + ": weight cannot be +inf");
  return e;
}

}  // namespace

FilteredComplex parse_complex_unvalidated(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("document must be a JSON object");

  const json& format = field(doc, "format", "document");
  if (!format.is_string() || format.get<std::string>() != kFormatTag) {
    throw ParseError("unsupported format tag, expected \"" + std::string(kFormatTag) + "\"");
  }
  const json& base = field(doc, "basepoint", "document");
  if (!base.is_string()) throw ParseError("basepoint must be a string");
  const json& cell_list = field(doc, "cells", "document");
  if (!cell_list.is_array()) throw ParseError("cells must be an array");

  std::vector<Cell> cells;
  for (std::size_t i = 0; i < cell_list.size(); ++i) {
    const json& entry = cell_list[i];
    const std::string where = "cells[" + std::to_string(i) + "]";
    if (!entry.is_object()) throw ParseError(where + ": must be an object");
    const json& id = field(entry, "id", where);
    const json& dim = field(entry, "dim", where);
    if (!id.is_string()) throw ParseError(where + ": id must be a string");
    if (!dim.is_number_integer()) throw ParseError(where + ": dim must be an integer");
    Cell c;
    c.id = id.get<std::string>();
    c.dim = dim.get<int>();
    c.weight = parse_weight(field(entry, "weight", where), where);
    if (auto it = entry.find("boundary"); it != entry.end()) c.boundary = parse_chain(*it, where);
    cells.push_back(std::move(c));
  }

  return FilteredComplex(base.get<std::string>(), std::move(cells));
}

FilteredComplex parse_complex(std::string_view text) {
  FilteredComplex x = parse_complex_unvalidated(text);
  if (auto violations = validate(x); !violations.empty()) {
    std::string message;
    for (const auto& v : violations) {
      if (!message.empty()) message += "; ";
      message += std::string(name(v.kind)) + " at '" + v.cell + "': " + v.message;
    }
    throw ValidationError(message);
  }
  return x;
}

std::string serialize_complex(const FilteredComplex& x) {
  json cells = json::array();
  for (const auto& c : x.cells()) {
    json chain = json::object();
    for (const auto& b : c.boundary) chain[b] = 1;
    cells.push_back({{"id", c.id}, {"dim", c.dim}, {"weight", to_string(c.weight)}, {"boundary", chain}});
  }
  json doc = {{"format", kFormatTag}, {"basepoint", x.basepoint()}, {"cells", cells}};
  return doc.dump(2) + "\n";
}

MorseDatum parse_morse_datum(std::string_view text) {
  std::vector<CriticalPoint> points;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string value;
    std::string index;
    if (!(fields >> value)) continue;
    std::string extra;
    if (!(fields >> index) || (fields >> extra)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected `value<TAB>index`");
    }
    CriticalPoint p;
    p.value = parse_rational(value);
    try {
      std::size_t used = 0;
      p.index = std::stoi(index, &used);
      if (used != index.size()) throw std::invalid_argument(index);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_no) + ": bad Morse index '" + index + "'");
    }
    points.push_back(std::move(p));
  }
  return MorseDatum(std::move(points));
}

BoundaryMap parse_boundary_map(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("boundary map must be a JSON object");
  BoundaryMap out;
  for (const auto& [id, chain] : doc.items()) out[id] = parse_chain(chain, "boundary of '" + id + "'");
  return out;
}

}  // namespace fcw
