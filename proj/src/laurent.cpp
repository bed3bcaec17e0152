#include "taulab/laurent.hpp"

#include <sstream>

namespace taulab {

std::string LaurentPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : t_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        if (e != 0) os << "*L^" << e;
        first = false;
    }
    return os.str();
}

} // namespace taulab
