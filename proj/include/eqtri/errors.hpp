#pragma once
// Error model: a single exception type with a machine-checkable kind.

#include <stdexcept>
#include <string>

namespace eqtri {

enum class ErrorKind {
  MalformedFacet,    // duplicate vertex in a facet, empty facet, bad token
  AbsentFace,        // queried face is not in the complex
  UnknownVertex,     // vertex token not in the complex
  VertexOverlap,     // join/cone operands share vertices
  Purity,            // operation requires a pure complex of a given dimension
  Involution,        // group generator is not an involution
  Commutativity,     // group generators do not commute
  Precondition,      // other violated operation precondition
  NotABipyramid,     // link is a 2-sphere but not a bipyramid over a cycle
  ApexEdgePresent,   // candidate apex edge already in the complex
  InducedLink,       // star-connected-sum induced-link condition fails
  IsoMismatch,       // no simplicial isomorphism where one is required
  FixedVertex,       // equivariant surgery at a non-fixed vertex
  Equivariance,      // action does not preserve the complex / psi not equivariant
  Geometry,          // embedded-complex geometry violated (origin, reflection, ...)
  NonComplex,        // folded simplices do not form a simplicial complex
  Range,             // argument out of the documented range
  Parse,             // file or token syntax error
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace eqtri
