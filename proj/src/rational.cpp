#include "tropext/rational.hpp"

namespace tropext {

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw KernelError("PARSE", "zero denominator in rational '" + s + "'");
        return Rat(n, d);
    } catch (const KernelError&) {
        throw;
    } catch (const std::exception&) {
        throw KernelError("PARSE", "malformed rational '" + s + "'");
    }
}

std::string format_rat(const Rat& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace tropext
