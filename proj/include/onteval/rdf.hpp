#ifndef ONTEVAL_RDF_HPP
#define ONTEVAL_RDF_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "onteval/iri.hpp"

namespace onteval {

namespace vocab {
inline const std::string rdf_type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline const std::string rdf_first = "http://www.w3.org/1999/02/22-rdf-syntax-ns#first";
inline const std::string rdf_rest = "http://www.w3.org/1999/02/22-rdf-syntax-ns#rest";
inline const std::string rdf_nil = "http://www.w3.org/1999/02/22-rdf-syntax-ns#nil";
inline const std::string rdf_property = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property";
inline const std::string rdf_lang_string = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline const std::string rdfs_class = "http://www.w3.org/2000/01/rdf-schema#Class";
inline const std::string rdfs_subclass_of = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline const std::string rdfs_domain = "http://www.w3.org/2000/01/rdf-schema#domain";
inline const std::string rdfs_range = "http://www.w3.org/2000/01/rdf-schema#range";
inline const std::string rdfs_comment = "http://www.w3.org/2000/01/rdf-schema#comment";
inline const std::string rdfs_label = "http://www.w3.org/2000/01/rdf-schema#label";
inline const std::string owl_class = "http://www.w3.org/2002/07/owl#Class";
inline const std::string owl_thing = "http://www.w3.org/2002/07/owl#Thing";
inline const std::string owl_object_property = "http://www.w3.org/2002/07/owl#ObjectProperty";
inline const std::string owl_datatype_property = "http://www.w3.org/2002/07/owl#DatatypeProperty";
inline const std::string owl_annotation_property = "http://www.w3.org/2002/07/owl#AnnotationProperty";
inline const std::string owl_ontology = "http://www.w3.org/2002/07/owl#Ontology";
inline const std::string owl_imports = "http://www.w3.org/2002/07/owl#imports";
inline const std::string xsd_string = "http://www.w3.org/2001/XMLSchema#string";
inline const std::string xsd_integer = "http://www.w3.org/2001/XMLSchema#integer";
inline const std::string xsd_decimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline const std::string xsd_double = "http://www.w3.org/2001/XMLSchema#double";
inline const std::string xsd_boolean = "http://www.w3.org/2001/XMLSchema#boolean";
}  // namespace vocab

/// A literal value: lexical form plus datatype tag, optionally language-tagged.
struct Literal {
  std::string lexical;
  Iri datatype{std::string(vocab::xsd_string)};
  std::string language;  // non-empty implies datatype rdf:langString

  auto operator<=>(const Literal&) const = default;
};

/// A blank node label, scoped to one document.
struct BlankNode {
  std::string label;
  auto operator<=>(const BlankNode&) const = default;
};

/// One position of a triple: IRI, blank node or literal.
using Term = std::variant<Iri, BlankNode, Literal>;

inline bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline bool is_blank(const Term& t) { return std::holds_alternative<BlankNode>(t); }
inline bool is_literal(const Term& t) { return std::holds_alternative<Literal>(t); }

/// A single asserted RDF triple. The predicate is always an IRI; the
/// subject is never a literal.
struct Triple {
  Term subject;
  Iri predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
};

/// Renders a term in N-Triples syntax (used for diagnostics and dumps).
std::string to_ntriples(const Term& t);
std::string to_ntriples(const Triple& t);

/// The raw parse result of one document: deduplicated triples plus the
/// prefix and base declarations seen while parsing.
struct TripleSet {
  std::vector<Triple> triples;  // sorted, no duplicates
  std::optional<Iri> base;
  std::map<std::string, std::string> prefixes;

  bool operator==(const TripleSet&) const = default;

  /// Sorts and deduplicates `triples` in place.
  void normalize();
};

enum class RdfSyntax { turtle, ntriples };

/// Raised on malformed input or on constructs outside the supported
/// grammar (e.g. RDF-star). Carries a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  enum class Code { syntax_error, unsupported_construct };

  ParseError(Code code, size_t line, size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        code_(code),
        line_(line),
        column_(column) {}

  Code code() const { return code_; }
  size_t line() const { return line_; }
  size_t column() const { return column_; }

 private:
  Code code_;
  size_t line_;
  size_t column_;
};

/// Parses a complete Turtle or N-Triples document.
TripleSet parse_document(std::string_view text, RdfSyntax syntax);

/// Reads and parses a file, deriving the syntax from its extension
/// (`.nt` means N-Triples, everything else Turtle).
TripleSet parse_file(const std::string& path);

/// Serializes a TripleSet as Turtle, preserving base and prefix
/// declarations so that parsing the output reproduces the input set.
std::string serialize_turtle(const TripleSet& ts);

}  // namespace onteval

#endif
