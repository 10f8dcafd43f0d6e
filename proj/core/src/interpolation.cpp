#include "boltzkit/interpolation.hpp"

#include <stdexcept>
#include <string>

namespace boltzkit {

InterpScheme parse_scheme(const std::string& name) {
    if (name == "linear") return InterpScheme::linear;
    if (name == "cubic") return InterpScheme::cubic;
    throw std::invalid_argument("unknown interpolation scheme '" + name +
                                "' (expected linear or cubic)");
}

const char* scheme_name(InterpScheme scheme) {
    return scheme == InterpScheme::linear ? "linear" : "cubic";
}

}  // namespace boltzkit
