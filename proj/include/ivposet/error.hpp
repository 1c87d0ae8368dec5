#ifndef IVPOSET_ERROR_HPP
#define IVPOSET_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace ivposet {

enum class ErrorCode {
  parse_error,
  not_a_bijection,
  empty_input,
  arity_mismatch,
  not_an_element,
  already_closed,
  not_closed,
  not_a_lattice,
  depth_conflict,
  not_an_interval_poset,
  not_a_binary_tree,
  json_error,
  io_error,
  verification_failure,
  bad_argument,
  unsupported,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, std::string message) {
  throw Error(code, std::move(message));
}

}  // namespace ivposet

#endif
