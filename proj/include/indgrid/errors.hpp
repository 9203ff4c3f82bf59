#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace indgrid {

/// Face enumeration or elimination would exceed a configured size budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t budget, std::size_t graph_order)
        : std::runtime_error(what), budget_(budget), graph_order_(graph_order) {}

    std::uint64_t budget() const noexcept { return budget_; }
    /// Order of the graph being enumerated (the reduction kernel in pipelines).
    std::size_t graph_order() const noexcept { return graph_order_; }

private:
    std::uint64_t budget_;
    std::size_t graph_order_;
};

/// No closed-form homotopy type is known for the requested family.
class UnsupportedSpec : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed text input (graph files, family specs, traces).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A chain complex violated the boundary-of-boundary identity.
class InconsistentComplex : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace indgrid
