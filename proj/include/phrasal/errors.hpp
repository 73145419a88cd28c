// errors.hpp: exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace phrasal {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A relation name that no category maps to. Aborts network loads.
class UnknownRelationError : public Error {
 public:
  explicit UnknownRelationError(const std::string& relation, long line = 0)
      : Error(line > 0 ? "unknown relation '" + relation + "' at line " +
                             std::to_string(line)
                       : "unknown relation '" + relation + "'"),
        relation_(relation),
        line_(line) {}
  const std::string& relation() const { return relation_; }
  long line() const { return line_; }

 private:
  std::string relation_;
  long line_;
};

// Malformed input line in an edge file, count file, or dataset.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, long line)
      : Error(msg + " at line " + std::to_string(line)), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

class InvalidLabelError : public Error {
 public:
  InvalidLabelError() : Error("node label must be non-empty") {}
};

class InvalidNodeError : public Error {
 public:
  explicit InvalidNodeError(const std::string& msg) : Error(msg) {}
};

class SelfLoopError : public Error {
 public:
  explicit SelfLoopError(const std::string& label)
      : Error("self-loop on node '" + label + "'") {}
};

class EndpointKindMismatchError : public Error {
 public:
  EndpointKindMismatchError(const std::string& relation, const std::string& msg)
      : Error("relation '" + relation + "': " + msg) {}
};

// A lookup label that does not resolve to a word node. Callers use this to
// fall back to the distributional model.
class WordNotInNetworkError : public Error {
 public:
  explicit WordNotInNetworkError(const std::string& label)
      : Error("word '" + label + "' is not in the network"), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

class EmptyPhraseError : public Error {
 public:
  EmptyPhraseError() : Error("phrase must contain at least one word") {}
};

class EmptyInputError : public Error {
 public:
  explicit EmptyInputError(const std::string& msg) : Error(msg) {}
};

// Training data with fewer than two classes.
class DegenerateTrainingError : public Error {
 public:
  explicit DegenerateTrainingError(const std::string& msg) : Error(msg) {}
};

class EmptyDatasetError : public Error {
 public:
  EmptyDatasetError() : Error("dataset contains no instances") {}
  explicit EmptyDatasetError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& path)
      : Error("cannot open '" + path + "'") {}
};

}  // namespace phrasal
