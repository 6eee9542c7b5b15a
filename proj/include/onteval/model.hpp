#ifndef ONTEVAL_MODEL_HPP
#define ONTEVAL_MODEL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "onteval/iri.hpp"
#include "onteval/rdf.hpp"

namespace onteval {

/// An assertion object: an individual or a literal value.
using Object = std::variant<Iri, Literal>;

/// One (subject, object) pair of an instantiated property.
using Assertion = std::pair<Iri, Object>;

/// Domain/range signature entry of a property. Either side may be
/// undeclared.
struct PropertySignature {
  std::optional<Iri> domain;
  std::optional<Iri> range;  // class or datatype IRI
  auto operator<=>(const PropertySignature&) const = default;
};

/// Raised by graph queries when the argument is not part of the model.
class UnknownEntityError : public ModelError {
 public:
  explicit UnknownEntityError(const std::string& what) : ModelError(what) {}
};

/// The terminological part of an ontology: named classes, properties,
/// the asserted subsumption hierarchy, property signatures and comment
/// annotations on schema entities.
struct OntologySchema {
  std::set<Iri> concepts;
  std::set<Iri> properties;
  /// Explicit (child, parent) subsumptions between named classes. Edges
  /// to the implicit top concept are never stored.
  std::set<std::pair<Iri, Iri>> hierarchy;
  std::map<Iri, std::set<PropertySignature>> prop_map;
  /// (subject, text) comment annotations on classes and properties.
  std::set<std::pair<Iri, std::string>> annotations;
};

/// Schema plus instance data, immutable once constructed. Construction
/// validates the model invariants (disjoint name sets, hierarchy between
/// known classes, acyclicity, membership/assertion well-formedness) and
/// precomputes the indexes the queries need, so all member queries are
/// read-only and safe to call concurrently.
class KnowledgeBase {
 public:
  struct Data {
    OntologySchema schema;
    std::set<Iri> instances;
    std::set<Literal> literals;
    std::map<Iri, std::set<Iri>> concept_inst;
    std::map<Iri, std::set<Assertion>> property_inst;
    /// Display names (rdfs:label); not part of the metric model.
    std::map<Iri, std::string> labels;
    /// Comments on individuals, kept out of the schema annotation set.
    std::set<std::pair<Iri, std::string>> instance_comments;
  };

  explicit KnowledgeBase(Data data);

  const OntologySchema& schema() const { return data_.schema; }
  const std::set<Iri>& instances() const { return data_.instances; }
  const std::set<Literal>& literals() const { return data_.literals; }
  const std::map<Iri, std::set<Iri>>& concept_inst() const { return data_.concept_inst; }
  const std::map<Iri, std::set<Assertion>>& property_inst() const { return data_.property_inst; }
  const std::map<Iri, std::string>& labels() const { return data_.labels; }
  const std::set<std::pair<Iri, std::string>>& instance_comments() const {
    return data_.instance_comments;
  }

  /// Classes with at least one asserted instance.
  const std::set<Iri>& populated_concepts() const { return populated_; }

  /// Instances asserted for `c`; empty set if none.
  const std::set<Iri>& instances_of(const Iri& c) const;

  /// Classes the instance `i` is asserted to belong to.
  const std::set<Iri>& classes_of(const Iri& i) const;

  /// Classes sharing an immediate asserted parent with `c`. Parentless
  /// classes are not siblings of each other.
  std::set<Iri> siblings_of(const Iri& c) const;

  /// Edges from `c` to the implicit top concept along the shortest
  /// child-to-parent path; a parentless class has depth 1.
  int concept_depth(const Iri& c) const;

  /// All (property, object) assertions made by instance `i`, sorted.
  const std::vector<std::pair<Iri, Object>>& out_assertions(const Iri& i) const;

  /// Direct asserted parents / children of a class.
  const std::set<Iri>& parents_of(const Iri& c) const;
  const std::set<Iri>& children_of(const Iri& c) const;

  /// Proper ancestors of `c` under the asserted hierarchy.
  const std::set<Iri>& ancestors_of(const Iri& c) const;

  /// Total number of property assertion pairs.
  size_t assertion_count() const { return assertion_count_; }

  /// Display name: label when present, else the IRI local name.
  std::string render(const Iri& iri) const;
  std::string render(const Object& o) const;

 private:
  void validate() const;
  void build_indexes();

  Data data_;
  std::set<Iri> populated_;
  std::map<Iri, std::set<Iri>> parents_;
  std::map<Iri, std::set<Iri>> children_;
  std::map<Iri, std::set<Iri>> ancestors_;
  std::map<Iri, int> depth_;
  std::map<Iri, std::vector<std::pair<Iri, Object>>> out_;
  std::map<Iri, std::set<Iri>> classes_of_;
  size_t assertion_count_ = 0;
};

}  // namespace onteval

#endif
