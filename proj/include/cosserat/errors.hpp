#pragma once

#include <stdexcept>
#include <string>

namespace cosserat {

struct NotSkew : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Degenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateChart : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateSurface : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfDomain : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotARotation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NyeViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParams : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LineSearchStalled : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cosserat
