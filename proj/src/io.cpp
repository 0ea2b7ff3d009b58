#include "permahank/io.hpp"

#include <fstream>
#include <stdexcept>

#include "permahank/format.hpp"

namespace permahank {

namespace {

template <typename T>
T require(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw std::invalid_argument(std::string("ideal file lacks \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(std::string("ideal file field \"") + key + "\" has the wrong type");
  }
}

}  // namespace

IdealFile ideal_file_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("ideal file must be a JSON object");
  const long vars = require<long>(doc, "vars");
  const long characteristic = require<long>(doc, "char");
  if (vars < 1 || vars >= static_cast<long>(kMaxVars)) {
    throw std::invalid_argument("\"vars\" must be between 1 and " + std::to_string(kMaxVars - 1));
  }
  if (characteristic < 0 || characteristic > 0xffffffffL) {
    throw std::invalid_argument("\"char\" must be 0 or a prime");
  }
  IdealFile file;
  file.ring = RingContext::make(static_cast<std::size_t>(vars),
                                static_cast<std::uint32_t>(characteristic));
  const std::string order = doc.contains("order") ? require<std::string>(doc, "order") : "lex";
  if (order != "lex" && order != "deglex") {
    throw std::invalid_argument("\"order\" must be \"lex\" or \"deglex\"");
  }
  file.order = MonomialOrder::parse(order);
  for (const auto& text : require<std::vector<std::string>>(doc, "generators")) {
    file.generators.push_back(parse(text, file.ring, file.order));
  }
  if (doc.contains("groebner")) {
    const auto& g = doc.at("groebner");
    file.is_minimal = require<bool>(g, "is_minimal");
    file.is_reduced = require<bool>(g, "is_reduced");
  }
  return file;
}

IdealFile read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return ideal_file_from_json(doc);
}

nlohmann::json ideal_to_json(const Ring& ring, const MonomialOrder& order,
                             const std::vector<Polynomial>& generators) {
  std::vector<std::string> texts;
  for (const auto& g : generators) texts.push_back(format(g.with_order(order)));
  return nlohmann::json{{"vars", ring->num_vars() - ring->num_aux()},
                        {"char", ring->characteristic()},
                        {"order", order.name()},
                        {"generators", texts}};
}

nlohmann::json basis_to_json(const Ring& ring, const GroebnerBasis& basis) {
  nlohmann::json doc = ideal_to_json(ring, basis.order, basis.elements);
  doc["groebner"] = {{"is_minimal", basis.is_minimal}, {"is_reduced", basis.is_reduced}};
  return doc;
}

}  // namespace permahank
