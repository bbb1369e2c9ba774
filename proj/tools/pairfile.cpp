#include "pairfile.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pauli::cli {

using json = nlohmann::ordered_json;

namespace {

double parse_double(std::string_view s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    throw UsageError("not a number: '" + std::string(s) + "'");
  return v;
}

// Structural errors in a document are I/O failures from the caller's view.
[[noreturn]] void bad_file(const std::string& what) { throw IoError("malformed file: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_file(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number()) bad_file(std::string("field '") + key + "' is not a number");
  return v.get<double>();
}

complex complex_from(const json& v) {
  if (!v.is_string()) bad_file("complex value is not a string");
  try {
    return parse_complex(v.get<std::string>());
  } catch (const UsageError& e) {
    bad_file(e.what());
  }
}

json complex_array(std::span<const complex> zs) {
  json a = json::array();
  for (const auto& z : zs) a.push_back(format_complex(z));
  return a;
}

std::vector<complex> complex_vector(const json& a) {
  if (!a.is_array()) bad_file("expected an array of complex values");
  std::vector<complex> out;
  out.reserve(a.size());
  for (const auto& v : a) out.push_back(complex_from(v));
  return out;
}

json grid_json(const Grid& g) {
  return json{{"lo", g.lo()}, {"hi", g.hi()}, {"count", g.count()}, {"offset", g.offset()}};
}

Grid grid_from(const json& j) {
  const auto& c = field(j, "count");
  if (!c.is_number_unsigned()) bad_file("grid count is not a non-negative integer");
  return Grid(number(j, "lo"), number(j, "hi"), c.get<std::size_t>(), number(j, "offset"));
}

json sampled_json(const SampledFunction& f) {
  json j{{"grid", grid_json(f.grid())}};
  j["support"] = f.support() ? json::array({f.support()->lo, f.support()->hi}) : json(nullptr);
  j["values"] = complex_array(f.values());
  return j;
}

SampledFunction sampled_from(const json& j) {
  const Grid g = grid_from(field(j, "grid"));
  std::optional<Interval> support;
  const auto& s = field(j, "support");
  if (!s.is_null()) {
    if (!s.is_array() || s.size() != 2 || !s[0].is_number() || !s[1].is_number())
      bad_file("support must be null or [lo, hi]");
    support = Interval{s[0].get<double>(), s[1].get<double>()};
  }
  return SampledFunction(g, complex_vector(field(j, "values")), support);
}

json signal_json(const Signal& s) {
  json j{{"space", sampled_json(s.space)}};
  j["spectrum"] = s.spectrum ? sampled_json(*s.spectrum) : json(nullptr);
  return j;
}

Signal signal_from(const json& j) {
  Signal s{sampled_from(field(j, "space")), std::nullopt};
  const auto& sp = field(j, "spectrum");
  if (!sp.is_null()) s.spectrum = sampled_from(sp);
  return s;
}

json parameters_json(const Provenance& p) {
  json j = json::object();
  for (const auto& [k, v] : p.parameters) {
    if (const auto* d = std::get_if<double>(&v))
      j[k] = *d;
    else
      j[k] = std::get<std::string>(v);
  }
  return j;
}

Provenance provenance_from(const json& doc) {
  Provenance p;
  const auto& c = field(doc, "construction");
  if (!c.is_string()) bad_file("construction is not a string");
  p.construction = c.get<std::string>();
  const auto& params = field(doc, "parameters");
  if (!params.is_object()) bad_file("parameters is not an object");
  for (const auto& [k, v] : params.items()) {
    if (v.is_number())
      p.parameters[k] = v.get<double>();
    else if (v.is_string())
      p.parameters[k] = v.get<std::string>();
    else
      bad_file("parameter '" + k + "' is neither number nor text");
  }
  return p;
}

json header(const char* kind, const Provenance& p) {
  return json{{"schema_version", kSchemaVersion},
              {"kind", kind},
              {"construction", p.construction},
              {"parameters", parameters_json(p)}};
}

json parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad_file(e.what());
  }
  const auto& v = field(doc, "schema_version");
  if (!v.is_number_integer() || v.get<int>() != kSchemaVersion)
    bad_file("unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
  if (!field(doc, "kind").is_string()) bad_file("kind is not a string");
  return doc;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(complex z) { return format_double(z.real()) + ":" + format_double(z.imag()); }

complex parse_complex(std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) return {parse_double(s), 0.0};
  return {parse_double(s.substr(0, colon)), parse_double(s.substr(colon + 1))};
}

std::vector<complex> parse_complex_list(std::string_view s) {
  std::vector<complex> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    auto item = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(parse_complex(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("error writing '" + path + "'");
}

std::string pair_to_json(const FunctionPair& pair) {
  const bool step = pair.kind() == PairKind::step;
  json doc = header(step ? "step" : "sampled", pair.provenance());
  json data;
  if (step) {
    data["left"] = complex_array(pair.steps().left.span());
    data["right"] = complex_array(pair.steps().right.span());
  } else {
    data["left"] = signal_json(pair.left_signal());
    data["right"] = signal_json(pair.right_signal());
  }
  doc["data"] = std::move(data);
  return dump(doc);
}

FunctionPair pair_from_json(const std::string& text) {
  const json doc = parse_document(text);
  const auto kind = doc.at("kind").get<std::string>();
  const auto& data = field(doc, "data");
  auto prov = provenance_from(doc);
  try {
    if (kind == "step")
      return FunctionPair(StepVector(complex_vector(field(data, "left"))),
                          StepVector(complex_vector(field(data, "right"))), std::move(prov));
    if (kind == "sampled")
      return FunctionPair(signal_from(field(data, "left")), signal_from(field(data, "right")), std::move(prov));
  } catch (const ContractError& e) {
    bad_file(e.what());
  }
  bad_file("unknown pair kind '" + kind + "'");
}

std::string set_to_json(const SetFile& set) {
  const bool step = set.kind == SetKind::step;
  json doc = header(step ? "step-set" : "uzd-set", set.provenance);
  json members = json::array();
  if (step)
    for (const auto& v : set.steps) members.push_back(complex_array(v.span()));
  else
    for (const auto& s : set.signals) members.push_back(signal_json(s));
  doc["data"] = json{{"members", std::move(members)}};
  return dump(doc);
}

SetFile set_from_json(const std::string& text) {
  const json doc = parse_document(text);
  const auto kind = doc.at("kind").get<std::string>();
  SetFile set;
  set.provenance = provenance_from(doc);
  const auto& members = field(field(doc, "data"), "members");
  if (!members.is_array()) bad_file("members is not an array");
  try {
    if (kind == "step-set") {
      set.kind = SetKind::step;
      for (const auto& m : members) set.steps.emplace_back(complex_vector(m));
    } else if (kind == "uzd-set") {
      set.kind = SetKind::uzd;
      for (const auto& m : members) set.signals.push_back(signal_from(m));
    } else {
      bad_file("unknown set kind '" + kind + "'");
    }
  } catch (const ContractError& e) {
    bad_file(e.what());
  }
  return set;
}

}  // namespace pauli::cli
