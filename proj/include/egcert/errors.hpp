#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "egcert/trace.hpp"

namespace egcert {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph6 / edge-list input. `offset` is a byte offset for graph6
// and a 1-based line number for edge lists.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset) : Error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Input violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CompleteGraphError : public PreconditionError {
 public:
  CompleteGraphError() : PreconditionError("graph is complete: no vertex cut exists") {}
};

class DisconnectedError : public PreconditionError {
 public:
  DisconnectedError() : PreconditionError("graph is disconnected") {}
};

class MinDegreeError : public PreconditionError {
 public:
  // The empty graph has no vertices at all.
  MinDegreeError() : PreconditionError("minimum degree below 3: graph has no vertices") {}
  MinDegreeError(int vertex, int degree)
      : PreconditionError("minimum degree below 3: vertex " + std::to_string(vertex) + " has degree " +
                          std::to_string(degree)),
        vertex_(vertex),
        degree_(degree) {}
  int vertex() const { return vertex_; }
  int degree() const { return degree_; }

 private:
  int vertex_ = -1;
  int degree_ = 0;
};

class OrderTooLargeError : public PreconditionError {
 public:
  OrderTooLargeError(int n, int limit)
      : PreconditionError("order " + std::to_string(n) + " exceeds the limit " + std::to_string(limit) +
                          " for this operation") {}
};

// A state the proofs rule out was reached. Carries the trace up to that point.
class InternalInvariantError : public Error {
 public:
  InternalInvariantError(const std::string& what, ExtractionTrace trace)
      : Error("internal invariant violated: " + what), trace_(std::move(trace)) {}
  const ExtractionTrace& trace() const { return trace_; }

 private:
  ExtractionTrace trace_;
};

}  // namespace egcert
