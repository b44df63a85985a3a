#pragma once

#include <stdexcept>
#include <string>

namespace semwidth {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SignatureMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownVertexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UncoverableVertexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotReducedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAHomomorphismError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidDecompositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAnEdgeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HypergraphMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NameCollisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace semwidth
