#pragma once

#include <stdexcept>
#include <string>

namespace diffnev {

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by the zero element") {}
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

// bezout() on inputs sharing a nontrivial factor (resultant vanishes).
struct CommonFactor : std::runtime_error {
    explicit CommonFactor(const std::string& what = "inputs share a common factor")
        : std::runtime_error(what) {}
};

// spread_sequence() on a map whose two-step composite is a polynomial in w.
struct PolynomialComposite : std::runtime_error {
    explicit PolynomialComposite(const std::string& what = "two-step composite is a polynomial in w")
        : std::runtime_error(what) {}
};

// classify() found a polynomial two-step composite but the inverse-power
// normal form failed to reconstruct; this indicates a bug, not a data case.
struct MalformedInversePower : std::runtime_error {
    explicit MalformedInversePower(const std::string& what)
        : std::runtime_error(what) {}
};

struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

struct NonConvergent : std::runtime_error {
    explicit NonConvergent(const std::string& what) : std::runtime_error(what) {}
};

struct OracleUnavailable : std::runtime_error {
    explicit OracleUnavailable(const std::string& what) : std::runtime_error(what) {}
};

struct WindingUnstable : std::runtime_error {
    explicit WindingUnstable(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

}  // namespace diffnev
