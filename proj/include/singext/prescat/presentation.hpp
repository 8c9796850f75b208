#pragma once

#include "singext/abgrp/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace singext::prescat {

using abgrp::Int;

struct Arrow {
  std::string name, src, dst;
  bool operator==(const Arrow&) const = default;
};

/// A path is written left to right in composition order: {"xi", "delta"}
/// means delta first, then xi. The identity on X is spelled {"id(X)"}.
struct Term {
  Int coef;
  std::vector<std::string> path;
  bool operator==(const Term&) const = default;
};

/// Sum of terms set equal to zero.
using Relation = std::vector<Term>;

struct QuiverPresentation {
  std::string name;
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  std::optional<long> torsion;

  std::size_t object_index(const std::string& o) const;
  std::size_t arrow_index(const std::string& a) const;
  /// (source, target) of a written path; throws InvalidInput if not composable.
  std::pair<std::string, std::string> path_ends(const std::vector<std::string>& path) const;
  /// Checks names, composability and parallelism of every relation.
  void validate() const;

  bool operator==(const QuiverPresentation&) const = default;
};

std::string identity_name(const std::string& object);
/// Returns the object if the symbol is of the form id(X).
std::optional<std::string> parse_identity(const std::string& symbol);

QuiverPresentation parse_presentation(const std::string& json_text);
std::string serialize_presentation(const QuiverPresentation& p);

/// R, R1, R2, F4 (one object with endomorphisms Z/4), F2.
QuiverPresentation builtin(const std::string& name);
std::vector<std::string> builtin_names();

/// The extra relations of R1 over R and of R2 over R1.
std::vector<Relation> muro_r1_relations();
std::vector<Relation> muro_r2_relations();

} // namespace singext::prescat
