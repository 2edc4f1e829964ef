#include "blendstat/problem_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace blendstat {

namespace {

std::vector<double> number_array(const nlohmann::json& doc, const char* key,
                                 std::size_t expected) {
  if (!doc.contains(key)) {
    throw StructuralError(std::string("problem file: missing key \"") + key + "\"");
  }
  const auto& node = doc.at(key);
  if (!node.is_array()) {
    throw StructuralError(std::string("problem file: \"") + key + "\" must be an array");
  }
  std::vector<double> out;
  out.reserve(node.size());
  for (const auto& v : node) {
    if (!v.is_number()) {
      throw StructuralError(std::string("problem file: \"") + key +
                            "\" must contain only numbers");
    }
    out.push_back(v.get<double>());
  }
  if (out.size() != expected) {
    std::ostringstream msg;
    msg << "problem file: \"" << key << "\" has " << out.size()
        << " entries, expected " << expected;
    throw StructuralError(msg.str());
  }
  return out;
}

}  // namespace

GameProblem parse_problem_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StructuralError(std::string("problem file: ") + e.what());
  }
  if (!doc.is_object()) {
    throw StructuralError("problem file: top level must be a JSON object");
  }
  if (!doc.contains("atoms") || !doc.at("atoms").is_array()) {
    throw StructuralError("problem file: missing \"atoms\" array");
  }
  std::vector<std::string> atoms;
  for (const auto& a : doc.at("atoms")) {
    if (!a.is_string()) {
      throw StructuralError("problem file: \"atoms\" must contain only strings");
    }
    atoms.push_back(a.get<std::string>());
  }
  const std::size_t n = atoms.size();
  auto benchmark = number_array(doc, "benchmark", n);
  auto lower = number_array(doc, "lower", n);
  auto upper = number_array(doc, "upper", n);
  return GameProblem{ConstraintSet(atoms, std::move(lower), std::move(upper)),
                     FiniteDistribution(atoms, std::move(benchmark))};
}

GameProblem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::ios_base::failure("cannot open problem file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_json(buf.str());
}

}  // namespace blendstat
