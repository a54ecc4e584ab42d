#pragma once

#include <string>

#include "spcurv/intpoly.hpp"
#include "spcurv/snf.hpp"

namespace spcurv {

// The two circle quotients distinguished by their first Pontryagin class.
enum class CircleQuotient { Q2, R2 };

// Rings used throughout: Z[x1,x2,x3] for the big torus, Z[y1,y2,u] for the
// quotient-specific torus data, Z[y1,u] for the reduced presentations.
PolyRingPtr ring_x3();
PolyRingPtr ring_yu3();
PolyRingPtr ring_yu2();

// Sum of the squares of the positive roots 2*x_i and x_i +- x_j; equals
// 8*(x1^2+x2^2+x3^2).
GradedIntPoly sum_root_squares();
bool sigma_root_identity();

// Defining ideals of the two cohomology presentations in Z[y1,y2,u], and
// their two-variable reductions in Z[y1,u] after eliminating y2^2.
std::vector<GradedIntPoly> presentation_ideal(CircleQuotient space);
std::vector<GradedIntPoly> reduced_ideal(CircleQuotient space);

// The involution y1^2 -> u^2 - y1^2 exchanging the two reduced ideals;
// verified exactly together with the required ideal memberships.
GradedIntPoly presentation_involution(const GradedIntPoly& p);
bool check_presentation_isomorphism();

// First Pontryagin class in the canonical reduced degree-4 form (an element
// of Z[y1,u]): 4*u^2 for Q2, 12*u^2 for R2.
GradedIntPoly pontryagin_p1(CircleQuotient space);

struct QuotientReport {
    QuotientGroup computed;
    std::vector<long long> claimed;  // published invariant factors
    bool matches;
};

// Degree-4 cohomology with Z/24 coefficients modulo the class p1, computed
// by exact Smith normal form in the basis (y1^2, u^2).
QuotientReport quotient_mod_p1(CircleQuotient space);

struct TopologyReport {
    bool sigma_check{false};
    bool prop54{false};
    std::string p1_q2, p1_r2;
    QuotientReport quotient_q2, quotient_r2;
};

TopologyReport topology_report();
std::string topology_report_json(const TopologyReport& report);

}  // namespace spcurv
