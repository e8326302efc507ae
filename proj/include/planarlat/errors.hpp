#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace planarlat {

using Element = std::size_t;
using ElementPair = std::pair<Element, Element>;

// Base of every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a result the theory guarantees fails to materialize. Seeing one
// means a bug in this library, not bad input.
class InternalDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CycleDetected : public Error {
 public:
  explicit CycleDetected(Element e)
      : Error("order relation has a cycle through element " +
              std::to_string(e)),
        element(e) {}
  Element element;
};

class NotALattice : public Error {
 public:
  explicit NotALattice(std::string what,
                       std::optional<ElementPair> pair = std::nullopt)
      : Error(std::move(what)), witness(pair) {}
  std::optional<ElementPair> witness;
};

class NotPlanar : public Error {
 public:
  using Error::Error;
};

class NotIncomparable : public Error {
 public:
  NotIncomparable(Element a, Element b)
      : Error("elements " + std::to_string(a) + " and " + std::to_string(b) +
              " are comparable"),
        pair(a, b) {}
  ElementPair pair;
};

class WrongSide : public Error {
 public:
  WrongSide(Element p, Element q)
      : Error("element " + std::to_string(p) + " lies to the right of " +
              std::to_string(q)),
        pair(p, q) {}
  ElementPair pair;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

class NotComplementary : public Error {
 public:
  using Error::Error;
};

class NotAnIntersection : public Error {
 public:
  using Error::Error;
};

class NotAnEmbedding : public Error {
 public:
  using Error::Error;
};

class MismatchedCarrier : public Error {
 public:
  using Error::Error;
};

class InvalidBlocks : public Error {
 public:
  using Error::Error;
};

class BlockHasNoTop : public Error {
 public:
  explicit BlockHasNoTop(std::size_t block)
      : Error("congruence block " + std::to_string(block) +
              " has no greatest element"),
        block_index(block) {}
  std::size_t block_index;
};

class NotCompatible : public Error {
 public:
  NotCompatible(Element x, Element y, Element z)
      : Error("blocks are not compatible: x=" + std::to_string(x) +
              " y=" + std::to_string(y) + " z=" + std::to_string(z)),
        x(x),
        y(y),
        z(z) {}
  Element x, y, z;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line(line),
        column(column),
        message(message) {}
  std::size_t line;
  std::size_t column;
  std::string message;
};

}  // namespace planarlat
