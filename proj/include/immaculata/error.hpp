#ifndef IMMACULATA_ERROR_HPP
#define IMMACULATA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace immaculata {

// Raised when a basis change has no route in the conversion graph
// (e.g. anything into Psi).
class no_conversion_path : public std::invalid_argument {
public:
    no_conversion_path(const std::string &from, const std::string &to)
        : std::invalid_argument("no conversion path from " + from + " to " + to)
    {
    }
};

class basis_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace immaculata

#endif
