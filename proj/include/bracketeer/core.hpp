#pragma once

// Core symbolic data model: summation indices, symbolic constants,
// scale parameters, exact affine forms over them, and value bindings.

#include "bracketeer/errors.hpp"
#include "bracketeer/rational.hpp"

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace bracketeer {

// Summation index over the nonnegative integers. Identity is the id;
// the name is for display only.
struct IndexVar {
    int id = 0;
    std::string name;

    friend bool operator==(const IndexVar& a, const IndexVar& b) { return a.id == b.id; }
    friend std::strong_ordering operator<=>(const IndexVar& a, const IndexVar& b) {
        return a.id <=> b.id;
    }
};

// Value bindings supplied at evaluation time. Params are multiplicative
// scales (a, b, ...); consts are exponent/order constants (s, al, nu, ...).
// Both are exact rationals; unbound use is an error, never a default.
struct Bindings {
    std::map<std::string, Rational> params;
    std::map<std::string, Rational> consts;

    const Rational& param(const std::string& name) const {
        auto it = params.find(name);
        if (it == params.end())
            throw Error(ErrorCode::UnboundParameter, "unbound parameter: " + name);
        return it->second;
    }
    const Rational& symconst(const std::string& name) const {
        auto it = consts.find(name);
        if (it == consts.end())
            throw Error(ErrorCode::UnboundParameter, "unbound symbolic constant: " + name);
        return it->second;
    }
};

// Exact rational affine expression over summation indices and symbolic
// constants: sum(coeff_i * n_i) + sum(coeff_s * c_s) + const. Zero
// coefficients are never stored, so structural equality is canonical.
class AffineForm {
  public:
    AffineForm() = default;
    explicit AffineForm(Rational c) : const_(std::move(c)) {}
    explicit AffineForm(long long c) : const_(c) {}

    static AffineForm index(const IndexVar& iv, Rational coeff = Rational(1));
    static AffineForm sym(const std::string& name, Rational coeff = Rational(1));

    const std::map<IndexVar, Rational>& index_coeffs() const { return idx_; }
    const std::map<std::string, Rational>& sym_coeffs() const { return sym_; }
    const Rational& const_part() const { return const_; }

    bool is_constant() const { return idx_.empty() && sym_.empty(); }
    bool has_indices() const { return !idx_.empty(); }
    bool depends_on(const IndexVar& iv) const { return idx_.count(iv) != 0; }
    Rational index_coeff(const IndexVar& iv) const;

    // Sum of all index coefficients: the first-order response of the form
    // when every index is perturbed by a shared epsilon.
    Rational index_coeff_sum() const;

    AffineForm& operator+=(const AffineForm& o);
    AffineForm& operator-=(const AffineForm& o);
    AffineForm& operator*=(const Rational& k);
    friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
    friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
    friend AffineForm operator*(AffineForm a, const Rational& k) { return a *= k; }
    friend AffineForm operator*(const Rational& k, AffineForm a) { return a *= k; }
    AffineForm operator-() const;

    // Replaces each index in `subs` by its image; other indices are kept.
    AffineForm substitute(const std::map<IndexVar, AffineForm>& subs) const;

    // Exact evaluation at a lattice point with const bindings.
    Rational eval(const std::map<IndexVar, long long>& point, const Bindings& bindings) const;

    // Evaluation with indices resolved but consts kept requires no bindings;
    // throws UnboundParameter when a symbolic constant remains.
    Rational eval_consts(const Bindings& bindings) const;

    friend bool operator==(const AffineForm& a, const AffineForm& b) {
        return a.idx_ == b.idx_ && a.sym_ == b.sym_ && a.const_ == b.const_;
    }
    friend bool operator<(const AffineForm& a, const AffineForm& b);

    std::string to_string() const;

  private:
    std::map<IndexVar, Rational> idx_;
    std::map<std::string, Rational> sym_;
    Rational const_ = 0;

    void prune();
};

}  // namespace bracketeer
