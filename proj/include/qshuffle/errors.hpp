#pragma once

#include <stdexcept>
#include <string>

namespace qshuffle {

/// Bad input: malformed arguments, unsupported data, violated preconditions.
class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A computation contradicted a fact the theory guarantees. Seeing one of
/// these means there is a bug, not a bad argument.
class theory_violation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class inexact_division : public theory_violation {
public:
  using theory_violation::theory_violation;
};

class not_a_perfect_square : public theory_violation {
public:
  using theory_violation::theory_violation;
};

class straightening_failure : public theory_violation {
public:
  using theory_violation::theory_violation;
};

class unsupported_rank : public usage_error {
public:
  using usage_error::usage_error;
};

class unsupported_family : public usage_error {
public:
  using usage_error::usage_error;
};

class datum_mismatch : public usage_error {
public:
  using usage_error::usage_error;
};

class empty_word : public usage_error {
public:
  using usage_error::usage_error;
};

class not_lyndon : public usage_error {
public:
  using usage_error::usage_error;
};

class too_short : public usage_error {
public:
  using usage_error::usage_error;
};

class zero_element : public usage_error {
public:
  using usage_error::usage_error;
};

class not_good_lyndon : public usage_error {
public:
  using usage_error::usage_error;
};

class not_in_u : public usage_error {
public:
  using usage_error::usage_error;
};

class not_simply_laced : public usage_error {
public:
  using usage_error::usage_error;
};

class shape_constraint_violated : public usage_error {
public:
  using usage_error::usage_error;
};

class parse_error : public usage_error {
public:
  using usage_error::usage_error;
};

} // namespace qshuffle
