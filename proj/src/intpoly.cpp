#include "spcurv/intpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "spcurv/snf.hpp"

namespace spcurv {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer polynomial coefficient overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer polynomial coefficient overflow");
    return r;
}

}  // namespace

int PolyRing::index_of(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars_[static_cast<size_t>(i)].name == name) return i;
    throw std::invalid_argument("PolyRing: unknown variable " + name);
}

bool PolyRing::same(const PolyRing& o) const {
    if (nvars() != o.nvars()) return false;
    for (int i = 0; i < nvars(); ++i)
        if (var(i).name != o.var(i).name || var(i).degree != o.var(i).degree)
            return false;
    return true;
}

PolyRingPtr make_ring(std::vector<PolyVar> vars) {
    return std::make_shared<const PolyRing>(std::move(vars));
}

GradedIntPoly GradedIntPoly::constant(PolyRingPtr ring, long long c) {
    GradedIntPoly p(std::move(ring));
    p.add_term(Monomial(static_cast<size_t>(p.ring_->nvars()), 0), c);
    return p;
}

GradedIntPoly GradedIntPoly::variable(PolyRingPtr ring, const std::string& name) {
    GradedIntPoly p(ring);
    Monomial m(static_cast<size_t>(ring->nvars()), 0);
    m[static_cast<size_t>(ring->index_of(name))] = 1;
    p.add_term(m, 1);
    return p;
}

int GradedIntPoly::monomial_degree(const Monomial& m) const {
    int d = 0;
    for (int i = 0; i < ring_->nvars(); ++i)
        d += m[static_cast<size_t>(i)] * ring_->var(i).degree;
    return d;
}

bool GradedIntPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = monomial_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m) != d) return false;
    return true;
}

int GradedIntPoly::degree() const {
    if (terms_.empty()) return 0;
    if (!is_homogeneous())
        throw std::logic_error("GradedIntPoly: degree of a non-homogeneous polynomial");
    return monomial_degree(terms_.begin()->first);
}

void GradedIntPoly::add_term(const Monomial& m, long long c) {
    if (c == 0) return;
    if (static_cast<int>(m.size()) != ring_->nvars())
        throw std::invalid_argument("GradedIntPoly: monomial arity mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

GradedIntPoly& GradedIntPoly::operator+=(const GradedIntPoly& o) {
    if (!ring_->same(*o.ring_)) throw std::invalid_argument("polynomial ring mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedIntPoly& GradedIntPoly::operator-=(const GradedIntPoly& o) {
    if (!ring_->same(*o.ring_)) throw std::invalid_argument("polynomial ring mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

GradedIntPoly GradedIntPoly::operator-() const {
    GradedIntPoly r(ring_);
    for (const auto& [m, c] : terms_) r.add_term(m, -c);
    return r;
}

bool GradedIntPoly::operator==(const GradedIntPoly& o) const {
    return ring_->same(*o.ring_) && terms_ == o.terms_;
}

GradedIntPoly operator+(GradedIntPoly a, const GradedIntPoly& b) { return a += b; }
GradedIntPoly operator-(GradedIntPoly a, const GradedIntPoly& b) { return a -= b; }

GradedIntPoly operator*(const GradedIntPoly& a, const GradedIntPoly& b) {
    if (!a.ring()->same(*b.ring())) throw std::invalid_argument("polynomial ring mismatch");
    GradedIntPoly r(a.ring());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m(ma.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, checked_mul(ca, cb));
        }
    return r;
}

GradedIntPoly operator*(long long c, const GradedIntPoly& a) {
    GradedIntPoly r(a.ring());
    for (const auto& [m, co] : a.terms()) r.add_term(m, checked_mul(c, co));
    return r;
}

GradedIntPoly GradedIntPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("GradedIntPoly: negative power");
    GradedIntPoly r = constant(ring_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::string GradedIntPoly::str() const {
    if (terms_.empty()) return "0";
    // Descending lexicographic order over exponent tuples.
    std::vector<const std::pair<const Monomial, long long>*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto* a, const auto* b) { return a->first > b->first; });

    std::string out;
    bool first = true;
    for (const auto* t : sorted) {
        const long long c = t->second;
        const long long abs_c = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono;
        for (int i = 0; i < ring_->nvars(); ++i) {
            const int e = t->first[static_cast<size_t>(i)];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->var(i).name;
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += std::to_string(abs_c);
        } else if (abs_c == 1) {
            out += mono;
        } else {
            out += std::to_string(abs_c) + "*" + mono;
        }
    }
    return out;
}

RingMap::RingMap(PolyRingPtr source, PolyRingPtr target,
                 std::vector<GradedIntPoly> images)
    : source_{std::move(source)}, target_{std::move(target)}, images_{std::move(images)} {
    if (static_cast<int>(images_.size()) != source_->nvars())
        throw std::invalid_argument("RingMap: one image per source variable required");
    for (int i = 0; i < source_->nvars(); ++i) {
        const GradedIntPoly& img = images_[static_cast<size_t>(i)];
        if (!img.ring()->same(*target_))
            throw std::invalid_argument("RingMap: image in wrong ring");
        if (!img.is_zero() &&
            (!img.is_homogeneous() || img.degree() != source_->var(i).degree))
            throw std::invalid_argument("RingMap: image degree mismatch");
    }
}

GradedIntPoly RingMap::apply(const GradedIntPoly& p) const {
    if (!p.ring()->same(*source_)) throw std::invalid_argument("RingMap: wrong source ring");
    GradedIntPoly out(target_);
    for (const auto& [m, c] : p.terms()) {
        GradedIntPoly term = GradedIntPoly::constant(target_, c);
        for (int i = 0; i < source_->nvars(); ++i) {
            const int e = m[static_cast<size_t>(i)];
            if (e > 0) term = term * images_[static_cast<size_t>(i)].pow(e);
        }
        out += term;
    }
    return out;
}

GradedIntPoly substitute_square(const GradedIntPoly& p, const std::string& var,
                                const GradedIntPoly& replacement) {
    const PolyRingPtr ring = p.ring();
    if (!replacement.ring()->same(*ring))
        throw std::invalid_argument("substitute_square: ring mismatch");
    const int vi = ring->index_of(var);
    GradedIntPoly out(ring);
    for (const auto& [m, c] : p.terms()) {
        const int e = m[static_cast<size_t>(vi)];
        if (e % 2 != 0)
            throw std::invalid_argument("substitute_square: odd exponent of " + var);
        Monomial rest = m;
        rest[static_cast<size_t>(vi)] = 0;
        GradedIntPoly term(ring);
        term.add_term(rest, c);
        out += term * replacement.pow(e / 2);
    }
    return out;
}

GradedIntPoly elementary_symmetric_squares(int k, PolyRingPtr ring,
                                           const std::vector<std::string>& vars) {
    const int nv = static_cast<int>(vars.size());
    if (k < 1 || k > nv)
        throw std::invalid_argument("elementary_symmetric_squares: k out of range");
    GradedIntPoly out(ring);
    // Iterate over k-subsets of the variable list.
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
        GradedIntPoly term = GradedIntPoly::constant(ring, 1);
        for (int i : idx)
            term = term * GradedIntPoly::variable(ring, vars[static_cast<size_t>(i)]).pow(2);
        out += term;
        int j = k - 1;
        while (j >= 0 && idx[static_cast<size_t>(j)] == nv - k + j) --j;
        if (j < 0) break;
        ++idx[static_cast<size_t>(j)];
        for (int l = j + 1; l < k; ++l)
            idx[static_cast<size_t>(l)] = idx[static_cast<size_t>(l - 1)] + 1;
    }
    return out;
}

std::vector<Monomial> monomials_of_degree(const PolyRingPtr& ring, int degree) {
    std::vector<Monomial> out;
    Monomial cur(static_cast<size_t>(ring->nvars()), 0);
    const auto rec = [&](auto&& self, int vi, int remaining) -> void {
        if (vi == ring->nvars()) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        const int vd = ring->var(vi).degree;
        for (int e = 0; e * vd <= remaining; ++e) {
            cur[static_cast<size_t>(vi)] = e;
            self(self, vi + 1, remaining - e * vd);
        }
        cur[static_cast<size_t>(vi)] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

std::optional<std::vector<GradedIntPoly>> ideal_member(
    const GradedIntPoly& p, const std::vector<GradedIntPoly>& generators,
    int degree_bound) {
    const PolyRingPtr ring = p.ring();
    if (!p.is_homogeneous())
        throw std::invalid_argument("ideal_member: polynomial must be homogeneous");
    const int d = p.degree();
    if (d > degree_bound)
        throw std::invalid_argument("ideal_member: degree exceeds the bound");
    if (p.is_zero()) return std::vector<GradedIntPoly>(
        generators.size(), GradedIntPoly::zero(ring));

    // Column layout: for each generator, one column per multiplier monomial.
    const std::vector<Monomial> target_monos = monomials_of_degree(ring, d);
    std::map<Monomial, int> mono_index;
    for (size_t i = 0; i < target_monos.size(); ++i)
        mono_index[target_monos[i]] = static_cast<int>(i);

    struct Column {
        size_t gen;
        Monomial multiplier;
    };
    std::vector<Column> columns;
    std::vector<std::vector<long long>> cols;
    for (size_t gi = 0; gi < generators.size(); ++gi) {
        const GradedIntPoly& g = generators[gi];
        if (!g.is_homogeneous() || !g.ring()->same(*ring))
            throw std::invalid_argument("ideal_member: bad generator");
        const int hd = d - g.degree();
        if (hd < 0) continue;
        for (const Monomial& hm : monomials_of_degree(ring, hd)) {
            GradedIntPoly hmono(ring);
            hmono.add_term(hm, 1);
            const GradedIntPoly prod = hmono * g;
            std::vector<long long> col(target_monos.size(), 0);
            for (const auto& [m, c] : prod.terms())
                col[static_cast<size_t>(mono_index.at(m))] = c;
            cols.push_back(std::move(col));
            columns.push_back({gi, hm});
        }
    }
    if (cols.empty()) return std::nullopt;

    IntMatrix mat(target_monos.size(), std::vector<long long>(cols.size(), 0));
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r = 0; r < target_monos.size(); ++r) mat[r][c] = cols[c][r];
    std::vector<long long> rhs(target_monos.size(), 0);
    for (const auto& [m, c] : p.terms())
        rhs[static_cast<size_t>(mono_index.at(m))] = c;

    const auto sol = solve_integer_linear(mat, rhs);
    if (!sol) return std::nullopt;

    std::vector<GradedIntPoly> mults(generators.size(), GradedIntPoly::zero(ring));
    for (size_t c = 0; c < columns.size(); ++c)
        if ((*sol)[c] != 0)
            mults[columns[c].gen].add_term(columns[c].multiplier, (*sol)[c]);
    return mults;
}

}  // namespace spcurv
