#pragma once

#include <stdexcept>
#include <string>
#include <boost/multiprecision/cpp_int.hpp>

namespace pctk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Semantically invalid input (well-formed syntax, impossible mathematics).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Work refused because it would exceed a configured budget.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pctk

// Internal cross-checks: dual-route agreement assertions that stay active in
// test builds. They throw std::logic_error so a disagreement can never be
// mistaken for a domain-level failure.
#if defined(PCTK_ENABLE_INTERNAL_CHECKS)
#define PCTK_CHECK(cond, msg)                                                        \
    do {                                                                             \
        if (!(cond)) throw std::logic_error(std::string("internal check: ") + (msg)); \
    } while (0)
#else
#define PCTK_CHECK(cond, msg) ((void)0)
#endif
