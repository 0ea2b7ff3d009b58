#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "permahank/groebner.hpp"
#include "permahank/ideal.hpp"

namespace permahank {

/// The shared ideal file: {"vars": N, "char": c, "order": "lex"|"deglex",
/// "generators": [...]}. Bases carry an extra "groebner" object with the
/// is_minimal and is_reduced flags.
struct IdealFile {
  Ring ring;
  MonomialOrder order = MonomialOrder::lex();
  std::vector<Polynomial> generators;
  std::optional<bool> is_minimal;
  std::optional<bool> is_reduced;

  Ideal ideal() const { return Ideal(ring, generators); }
};

/// Validates and parses; throws std::invalid_argument (or ParseError) on a
/// malformed document.
IdealFile ideal_file_from_json(const nlohmann::json& doc);
IdealFile read_ideal_file(const std::string& path);

nlohmann::json ideal_to_json(const Ring& ring, const MonomialOrder& order,
                             const std::vector<Polynomial>& generators);
nlohmann::json basis_to_json(const Ring& ring, const GroebnerBasis& basis);

}  // namespace permahank
