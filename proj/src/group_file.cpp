#include "sylowlens/group_file.hpp"
#include "sylowlens/error.hpp"

#include <fstream>
#include <sstream>

namespace sylowlens {

namespace {

using nlohmann::json;

Error parse_error(const std::string& what) { return Error(ErrorKind::Parse, what); }

std::string line_column(std::string_view bytes, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < bytes.size(); ++i) {
    if (bytes[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Perm parse_generator(const json& value, std::size_t degree, std::size_t position) {
  const std::string field = "generators[" + std::to_string(position) + "]";
  try {
    if (value.is_string()) return Perm::from_cycles(degree, value.get<std::string>());
    if (!value.is_array()) throw parse_error(field + ": expected an image array or cycle string");
    if (value.size() != degree) {
      throw parse_error(field + ": has " + std::to_string(value.size()) +
                        " images but degree is " + std::to_string(degree));
    }
    std::vector<Point> images;
    images.reserve(degree);
    for (const json& v : value) {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        throw parse_error(field + ": images must be non-negative integers");
      }
      images.push_back(v.get<Point>());
    }
    return Perm(std::move(images));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    throw parse_error(field + ": " + e.what());
  }
}

}  // namespace

Group GroupSpec::to_group() const { return Group(degree, generators, name); }

GroupSpec GroupSpec::from_group(const Group& g) {
  GroupSpec spec;
  spec.name = g.name();
  spec.degree = g.degree();
  spec.generators.assign(g.generators().begin(), g.generators().end());
  return spec;
}

GroupSpec parse_group_file(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw parse_error("malformed JSON at " + line_column(bytes, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!doc.is_object()) throw parse_error("group file must be a JSON object");

  GroupSpec spec;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw parse_error("name: expected a string");
    spec.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("degree")) throw parse_error("degree: missing required field");
  const json& degree = doc["degree"];
  if (!degree.is_number_integer() || degree.get<std::int64_t>() < 1) {
    throw parse_error("degree: expected a positive integer");
  }
  spec.degree = degree.get<std::size_t>();
  if (!doc.contains("generators")) throw parse_error("generators: missing required field");
  const json& gens = doc["generators"];
  if (!gens.is_array()) throw parse_error("generators: expected an array");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    spec.generators.push_back(parse_generator(gens[i], spec.degree, i));
  }
  if (doc.contains("metadata")) spec.metadata = doc["metadata"];
  return spec;
}

std::string emit_group_file(const GroupSpec& spec) {
  json doc = json::object();
  if (!spec.name.empty()) doc["name"] = spec.name;
  doc["degree"] = spec.degree;
  json gens = json::array();
  for (const Perm& g : spec.generators) {
    gens.push_back(std::vector<Point>(g.images().begin(), g.images().end()));
  }
  doc["generators"] = std::move(gens);
  if (!spec.metadata.is_null()) doc["metadata"] = spec.metadata;
  return doc.dump() + "\n";
}

GroupSpec load_group_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open group file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_group_file(buffer.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

}  // namespace sylowlens
