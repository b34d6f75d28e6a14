#pragma once

#include <stdexcept>
#include <string>

namespace hfh {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a request exceeds a configured enumeration/compute bound.
class BoundError : public Error {
public:
    explicit BoundError(const std::string& what) : Error(what) {}
};

}  // namespace hfh
