#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "primeiasi/types.hpp"

namespace primeiasi {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when a prime AIASI is requested on a graph that contains an odd
// cycle. The cycle is carried as a closed vertex sequence (first vertex not
// repeated).
class NonBipartite : public Error {
 public:
  explicit NonBipartite(std::vector<Vertex> odd_cycle)
      : Error("graph is not bipartite (odd cycle of length " +
              std::to_string(odd_cycle.size()) + ")"),
        odd_cycle_(std::move(odd_cycle)) {}

  const std::vector<Vertex>& odd_cycle() const noexcept { return odd_cycle_; }

 private:
  std::vector<Vertex> odd_cycle_;
};

class InvalidWitness : public Error {
 public:
  using Error::Error;
};

class MissingVertexLabel : public Error {
 public:
  explicit MissingVertexLabel(Vertex vertex)
      : Error("vertex " + std::to_string(vertex) + " has no label"),
        vertex_(vertex) {}

  Vertex vertex() const noexcept { return vertex_; }

 private:
  Vertex vertex_;
};

class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownFamily : public Error {
 public:
  using Error::Error;
};

}  // namespace primeiasi
