#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "mixmetrics/bigcount.hpp"
#include "mixmetrics/errors.hpp"
#include "mixmetrics/limits.hpp"

namespace mixmetrics {

// A polynomial in a fixed number of variables, stored sparsely in the
// monomial basis: exponent vector -> exact coefficient. Zero coefficients
// are never stored. This is the literal generating-function route; the
// counting engine never goes through it, which is what makes coefficient
// extraction here an independent check on the engine.
class MonomialPoly {
public:
    using Exponents = std::vector<int>;

    explicit MonomialPoly(int vars) : vars_(vars) {
        if (vars < 1) throw NonPositiveEntry("polynomial over " + std::to_string(vars) + " variables");
    }

    // The constant polynomial 1.
    static MonomialPoly one(int vars) {
        MonomialPoly p(vars);
        p.terms_[Exponents(static_cast<std::size_t>(vars), 0)] = 1;
        return p;
    }

    int vars() const { return vars_; }
    std::uint64_t term_count() const { return terms_.size(); }
    const std::map<Exponents, BigCount>& terms() const { return terms_; }

    void add_term(const Exponents& exps, BigCount coeff) {
        if (static_cast<int>(exps.size()) != vars_)
            throw VariableCountMismatch("term has " + std::to_string(exps.size()) +
                                        " exponents, polynomial has " + std::to_string(vars_) +
                                        " variables");
        BigCount& slot = terms_[exps];
        slot += coeff;
        if (slot == 0) terms_.erase(exps);
    }

    // Coefficient of the given monomial; zero when absent.
    BigCount coefficient(const Exponents& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? BigCount(0) : it->second;
    }

private:
    int vars_;
    std::map<Exponents, BigCount> terms_;
};

// Complete homogeneous symmetric polynomial h_degree in `vars` variables:
// the sum of all monomials of that total degree, each with coefficient 1.
// Term count is C(degree + vars - 1, vars - 1), checked against the budget
// before anything is allocated.
inline MonomialPoly homogeneous(int degree, int vars,
                                std::uint64_t max_terms = kDefaultTermBudget) {
    if (degree < 0) throw NonPositiveEntry("homogeneous of negative degree");
    if (vars < 1) throw NonPositiveEntry("homogeneous over no variables");
    const BigCount predicted = binomial(degree + vars - 1, vars - 1);
    if (predicted > max_terms)
        throw SizeBudgetExceeded("h_" + std::to_string(degree) + " in " + std::to_string(vars) +
                                 " variables has " + predicted.str() + " terms, budget " +
                                 std::to_string(max_terms));
    MonomialPoly p(vars);
    std::vector<int> exps(static_cast<std::size_t>(vars), 0);
    // walk compositions of `degree` into `vars` ordered slots
    auto fill = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == vars - 1) {
            exps[static_cast<std::size_t>(slot)] = remaining;
            p.add_term(exps, 1);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exps[static_cast<std::size_t>(slot)] = e;
            self(self, slot + 1, remaining - e);
        }
    };
    fill(fill, 0, degree);
    return p;
}

inline MonomialPoly poly_multiply(const MonomialPoly& a, const MonomialPoly& b,
                                  std::uint64_t max_terms = kDefaultTermBudget) {
    if (a.vars() != b.vars())
        throw VariableCountMismatch("multiplying polynomials over " + std::to_string(a.vars()) +
                                    " and " + std::to_string(b.vars()) + " variables");
    MonomialPoly out(a.vars());
    std::vector<int> exps(static_cast<std::size_t>(a.vars()));
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
            out.add_term(exps, ca * cb);
            if (out.term_count() > max_terms)
                throw SizeBudgetExceeded("product exceeds term budget " +
                                         std::to_string(max_terms));
        }
    }
    return out;
}

}  // namespace mixmetrics
