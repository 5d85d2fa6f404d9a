#pragma once

#include <stdexcept>
#include <string>

namespace coskel {

// Error taxonomy mirrored by the CLI exit codes:
//   input_error       -> 2  (malformed spec, out-of-range parameter)
//   resource_error    -> 3  (a configured guard refused the computation)
//   consistency_error -> 4  (two computation paths disagreed; always a bug)

class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

class consistency_error : public std::runtime_error {
public:
  explicit consistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace coskel
