#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace spcurv {

// Multivariate polynomials over the integers with graded variables. All
// arithmetic is exact; coefficient overflow throws instead of wrapping.

struct PolyVar {
    std::string name;
    int degree;  // cohomological degree, even
};

class PolyRing {
public:
    explicit PolyRing(std::vector<PolyVar> vars) : vars_{std::move(vars)} {}

    int nvars() const { return static_cast<int>(vars_.size()); }
    const PolyVar& var(int i) const { return vars_[static_cast<size_t>(i)]; }
    int index_of(const std::string& name) const;

    bool same(const PolyRing& o) const;

private:
    std::vector<PolyVar> vars_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;
PolyRingPtr make_ring(std::vector<PolyVar> vars);

// Exponent tuple, one entry per ring variable.
using Monomial = std::vector<int>;

class GradedIntPoly {
public:
    explicit GradedIntPoly(PolyRingPtr ring) : ring_{std::move(ring)} {}

    static GradedIntPoly zero(PolyRingPtr ring) { return GradedIntPoly(std::move(ring)); }
    static GradedIntPoly constant(PolyRingPtr ring, long long c);
    static GradedIntPoly variable(PolyRingPtr ring, const std::string& name);

    const PolyRingPtr& ring() const { return ring_; }
    const std::map<Monomial, long long>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Total cohomological degree of a monomial.
    int monomial_degree(const Monomial& m) const;
    bool is_homogeneous() const;
    // Degree of a homogeneous polynomial; throws otherwise (0 for zero).
    int degree() const;

    void add_term(const Monomial& m, long long c);

    GradedIntPoly& operator+=(const GradedIntPoly& o);
    GradedIntPoly& operator-=(const GradedIntPoly& o);
    GradedIntPoly operator-() const;

    bool operator==(const GradedIntPoly& o) const;

    GradedIntPoly pow(int k) const;

    // Terms sorted with exponent tuples in descending lexicographic order,
    // rendered like "3*u^4 - 3*y1^2*u^2 + y1^4".
    std::string str() const;

private:
    PolyRingPtr ring_;
    std::map<Monomial, long long> terms_;
};

GradedIntPoly operator+(GradedIntPoly a, const GradedIntPoly& b);
GradedIntPoly operator-(GradedIntPoly a, const GradedIntPoly& b);
GradedIntPoly operator*(const GradedIntPoly& a, const GradedIntPoly& b);
GradedIntPoly operator*(long long c, const GradedIntPoly& a);

// Degree-preserving substitution homomorphism between rings.
class RingMap {
public:
    RingMap(PolyRingPtr source, PolyRingPtr target,
            std::vector<GradedIntPoly> images);

    const PolyRingPtr& source() const { return source_; }

    GradedIntPoly apply(const GradedIntPoly& p) const;

private:
    PolyRingPtr source_, target_;
    std::vector<GradedIntPoly> images_;
};

// Replace var^2 by the given polynomial of the same ring (degree-matched);
// every exponent of var must be even.
GradedIntPoly substitute_square(const GradedIntPoly& p, const std::string& var,
                                const GradedIntPoly& replacement);

// k-th elementary symmetric polynomial in the squares of the listed
// variables.
GradedIntPoly elementary_symmetric_squares(int k, PolyRingPtr ring,
                                           const std::vector<std::string>& vars);

// All monomials of the ring with the given cohomological degree.
std::vector<Monomial> monomials_of_degree(const PolyRingPtr& ring, int degree);

// Exact degree-bounded ideal membership over the integers: searches for
// integer multiplier polynomials h_i with p = sum h_i g_i, where p and all
// generators are homogeneous and deg h_i = deg p - deg g_i. Returns the
// multipliers, or nothing if no integer combination exists at this degree.
std::optional<std::vector<GradedIntPoly>> ideal_member(
    const GradedIntPoly& p, const std::vector<GradedIntPoly>& generators,
    int degree_bound);

}  // namespace spcurv
