#pragma once

#include <stdexcept>
#include <string>

namespace spin7 {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct not_bar_invariant : error {
  using error::error;
};
struct not_divisible : error {
  using error::error;
};
struct division_by_zero : error {
  using error::error;
};
struct pole_at_point : error {
  using error::error;
};
struct index_out_of_range : error {
  using error::error;
};
struct mismatched_context : error {
  using error::error;
};
struct rank_deficient : error {
  using error::error;
};
struct order_violation : error {
  using error::error;
};
struct non_termination : error {
  using error::error;
};
struct singular_system : error {
  using error::error;
};
struct strip_failure : error {
  using error::error;
};
struct bound_violation : error {
  using error::error;
};
struct no_match : error {
  using error::error;
};
struct oracle_mismatch : error {
  using error::error;
};
struct non_integral : error {
  using error::error;
};
struct parity_error : error {
  using error::error;
};

struct parse_error : error {
  std::size_t position;
  parse_error(const std::string& msg, std::size_t pos)
      : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace spin7
