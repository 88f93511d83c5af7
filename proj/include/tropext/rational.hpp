#ifndef TROPEXT_RATIONAL_HPP
#define TROPEXT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropext {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using QVec = std::vector<Rat>;

// Error carrying a machine-readable code ("DIMENSION_MISMATCH", "NON_INTEGRAL", ...).
class KernelError : public std::runtime_error {
public:
    KernelError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline bool is_integral(const Rat& q) { return denominator(q) == 1; }

inline Int rat_to_int(const Rat& q) {
    if (!is_integral(q))
        throw KernelError("NON_INTEGRAL", "expected integer, got " + q.str());
    return numerator(q);
}

// Parses "p/q" or "p"; denominator must be nonzero.
Rat parse_rat(const std::string& s);

// Canonical "p/q" form (reduced, q > 0), always with explicit denominator.
std::string format_rat(const Rat& q);

}  // namespace tropext

#endif
