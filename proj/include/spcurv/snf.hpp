#pragma once

#include <optional>
#include <vector>

namespace spcurv {

using IntMatrix = std::vector<std::vector<long long>>;

// Smith decomposition U * A * V = D with U, V unimodular and D diagonal
// with each diagonal entry dividing the next. Exact; throws on overflow.
struct SmithResult {
    IntMatrix d, u, v;
    std::vector<long long> diagonal() const;
};

SmithResult smith_normal_form(const IntMatrix& a);

// Integer solution of A x = b, if one exists.
std::optional<std::vector<long long>> solve_integer_linear(
    const IntMatrix& a, const std::vector<long long>& b);

// Finitely generated abelian group Z^rank / (row lattice of `relations`),
// with every generator additionally killed by `modulus` when present.
struct AbelianPresentation {
    int rank{0};
    IntMatrix relations;
    std::optional<long long> modulus;
};

struct QuotientGroup {
    std::vector<long long> torsion;  // invariant factors > 1, each dividing the next
    int free_rank{0};
};

QuotientGroup quotient_group(const AbelianPresentation& pres);

}  // namespace spcurv
