#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>

namespace braidforge {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Cplx = std::complex<double>;

// Precondition violations (bad user input, wrong closure, pole under substitution).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& w) : std::runtime_error(w) {}
};

// Violations of invariants the algebra guarantees; reaching one means a bug upstream.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& w) : std::runtime_error(w) {}
};

inline double to_double(const Int& v) { return v.convert_to<double>(); }
inline double to_double(const Rat& v) { return v.convert_to<double>(); }

} // namespace braidforge
