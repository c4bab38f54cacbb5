#pragma once

#include <stdexcept>
#include <string>

namespace equifacet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: out-of-range vertices, inconsistent sizes, bad groupings.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A search would exceed its configured dimension or element bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class NotVertexUniform : public Error {
 public:
  NotVertexUniform() : Error("colouring is not vertex-uniform") {}
};

class NotSplittable : public Error {
 public:
  using Error::Error;
};

class NotTransitive : public Error {
 public:
  NotTransitive() : Error("generated group is not transitive on vertices") {}
};

/// More than one target degree vector fits a facet extension.
class AmbiguousExtension : public Error {
 public:
  using Error::Error;
};

class NotRealizable : public Error {
 public:
  NotRealizable() : Error("edge lengths are not realizable by a simplex") {}
};

/// Raised for vertex sets that do not span a simplex of the expected dimension.
class DegenerateSimplex : public Error {
 public:
  using Error::Error;
};

/// Edge lengths lie too close to the clustering threshold to be grouped reliably.
class AmbiguousClustering : public Error {
 public:
  using Error::Error;
};

}  // namespace equifacet
