#pragma once

#include <stdexcept>
#include <string>

namespace hyperstar {

/// Thrown when a computation would exceed a configured size or order cap.
/// Callers can usually either raise the cap or fall back to an arithmetic
/// certificate (see the Cayley divisibility filter).
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyperstar
