#pragma once

#include <stdexcept>
#include <string>

namespace spl {

// Every recoverable failure in the library carries one of these codes so that
// callers (and the CLI exit-status mapping) can dispatch without string
// matching.
enum class Errc {
  out_of_range,
  self_loop,
  empty_query,
  empty_graph,
  domain_error,
  not_prime,
  too_small,
  not_connected,
  not_in_triangle,
  hypothesis_unmet,
  overlap,
  precondition_violated,
  not_triangle_connected,
  too_large,
  sigma_condition_fails,
  not_a_path,
  no_triangle,
  length_unreachable,
  five,
  not_a_walk,
  bad_orientation,
  construction_stuck,
  parse_error,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace spl
