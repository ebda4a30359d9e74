#ifndef GELFAND_RELATIONS_HPP_
#define GELFAND_RELATIONS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gelfand/matrix.hpp"
#include "gelfand/scalars.hpp"

namespace gelfand {

// Named generator matrices of a representation, e.g. T1, T2, P1.
struct GeneratorSet {
  std::vector<std::string> names;
  std::vector<QPolyMatrix> matrices;

  std::size_t dimension() const {
    return matrices.empty() ? 0 : matrices.front().rows();
  }
  // Throws std::invalid_argument for an unknown name.
  std::size_t index_of(std::string_view name) const;
};

// coefficient * M[word[0]] * M[word[1]] * ...; the empty word is the identity.
struct WordTerm {
  QPoly                    coefficient;
  std::vector<std::size_t> word;
};

using WordSum = std::vector<WordTerm>;

struct RelationResult {
  bool                           passed;
  std::optional<Mismatch<QPoly>> witness;  // first differing entry on failure
};

// Evaluates a linear combination of generator words. Throws
// std::invalid_argument if a word refers to a missing generator.
QPolyMatrix evaluate(GeneratorSet const& gens, WordSum const& expr);

// Parses and evaluates an expression such as "P1*T1*P1 - (q-1)*P1" or
// "(T1 - q)*(T1 + 1)". Scalars are integers and powers of q; a scalar added
// to a matrix means scalar times the identity. Throws std::invalid_argument
// on malformed input or unknown generators.
QPolyMatrix evaluate(GeneratorSet const& gens, std::string_view expr);

RelationResult check_relation(GeneratorSet const& gens,
                              WordSum const&      lhs,
                              WordSum const&      rhs);

RelationResult check_relation(GeneratorSet const& gens,
                              std::string_view    lhs,
                              std::string_view    rhs);

// One instance of a defining relation, as text.
struct RelationInstance {
  std::string label;  // e.g. "braid i=2"
  std::string lhs;
  std::string rhs;
};

// Instances of the quadratic, commuting and braid relations for T1..T{n-1}.
std::vector<RelationInstance> hecke_relations(std::size_t n);

// The remaining q-rook monoid relations for T1..T{n-1}, P1..Pn.
std::vector<RelationInstance> qrook_extra_relations(std::size_t n);

}  // namespace gelfand

#endif  // GELFAND_RELATIONS_HPP_
