#pragma once

#include <stdexcept>
#include <string>

namespace lpgraph {

enum class ErrorKind {
  InvalidInput,   // malformed file, bad vertex id, violated precondition on user data
  ResourceLimit,  // enumeration cap or budget exceeded
  Precondition,   // operation called outside its domain
  Internal,       // a computed identity failed; indicates a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lpgraph
