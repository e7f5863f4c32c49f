#include "tfr/cone.hpp"

#include "tfr/lp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tfr {

namespace {

void sort_unique(IMat& rows) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

// All size-k index subsets of {0,...,n-1}, visited in lex order.
template <typename F>
void for_each_subset(size_t n, size_t k, F&& fn) {
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        fn(idx);
        size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

}  // namespace

Cone Cone::zero(size_t ambient_dim) {
    Cone c;
    c.ambient_dim_ = ambient_dim;
    c.dim_ = 0;
    for (size_t i = 0; i < ambient_dim; ++i) {
        IVec e(ambient_dim, Int(0));
        e[i] = 1;
        c.span_equations_.push_back(std::move(e));
    }
    return c;
}

Cone Cone::from_generators(const IMat& gens_in, size_t ambient_dim) {
    IMat gens;
    for (const auto& g : gens_in) {
        if (g.size() != ambient_dim)
            throw Error("DimensionMismatch", "generator has wrong length");
        if (!tfr::is_zero(g)) gens.push_back(primitive(g));
    }
    sort_unique(gens);
    if (gens.empty()) return zero(ambient_dim);

    if (!strictly_positive_functional(gens, ambient_dim))
        throw Error("NotPointed", "generating set spans a line");

    Cone c;
    c.ambient_dim_ = ambient_dim;
    c.dim_ = rank(gens);
    c.span_equations_ = kernel_primitive(gens);

    if (c.dim_ == 1) {
        c.rays_ = {gens[0]};
        c.facet_forms_ = {gens[0]};  // positive on the ray, zero on {0}
        return c;
    }

    // Candidate facet forms: kernels through (dim-1)-subsets of generators,
    // constrained to the row space of the generators.
    const size_t r = c.dim_;
    IMat forms;
    for_each_subset(gens.size(), r - 1, [&](const std::vector<size_t>& idx) {
        IMat sys;
        for (size_t i : idx) sys.push_back(gens[i]);
        for (const auto& z : c.span_equations_) sys.push_back(z);
        IMat ker = kernel_primitive(sys);
        if (ker.size() != 1) return;
        IVec w = ker[0];
        bool has_pos = false, has_neg = false;
        for (const auto& g : gens) {
            const int s = sign(dot(w, g));
            if (s > 0) has_pos = true;
            if (s < 0) has_neg = true;
        }
        if (has_pos && has_neg) return;
        if (has_neg) w = tfr::negated(w);
        // facet test: the tight generators must span a hyperplane of the cone
        IMat tight;
        for (const auto& g : gens)
            if (dot(w, g) == 0) tight.push_back(g);
        if (rank(tight) == r - 1) forms.push_back(std::move(w));
    });
    sort_unique(forms);
    c.facet_forms_ = std::move(forms);

    // Extreme rays: generators whose tight facet set cuts out a line.
    for (const auto& g : gens) {
        IMat sys = c.span_equations_;
        for (const auto& f : c.facet_forms_)
            if (dot(f, g) == 0) sys.push_back(f);
        if (kernel_primitive(sys).size() == 1) c.rays_.push_back(g);
    }
    sort_unique(c.rays_);
    return c;
}

Cone Cone::from_constraints(const IMat& eqs, const IMat& ineqs, size_t ambient_dim) {
    IMat eq = eqs;
    const size_t eq_rank = rank(eq);
    if (eq_rank + 1 > ambient_dim) {
        // the solution space of the equalities is at most a point
        return zero(ambient_dim);
    }
    const size_t subset_size = ambient_dim - eq_rank - 1;
    IMat rays;
    for_each_subset(ineqs.size(), subset_size, [&](const std::vector<size_t>& idx) {
        IMat sys = eq;
        for (size_t i : idx) sys.push_back(ineqs[i]);
        IMat ker = kernel_primitive(sys);
        if (ker.size() != 1) return;
        for (const IVec& cand : {ker[0], tfr::negated(ker[0])}) {
            bool ok = true;
            for (const auto& a : ineqs)
                if (dot(a, cand) < 0) {
                    ok = false;
                    break;
                }
            if (ok) rays.push_back(cand);
        }
    });
    sort_unique(rays);
    return from_generators(rays, ambient_dim);
}

bool Cone::contains(const IVec& a) const {
    for (const auto& z : span_equations_)
        if (dot(z, a) != 0) return false;
    for (const auto& f : facet_forms_)
        if (dot(f, a) < 0) return false;
    return true;
}

bool Cone::contains(const QVec& a) const {
    for (const auto& z : span_equations_)
        if (dot(a, z) != 0) return false;
    for (const auto& f : facet_forms_)
        if (dot(a, f) < 0) return false;
    return true;
}

bool Cone::contains(const Cone& other) const {
    for (const auto& r : other.rays_)
        if (!contains(r)) return false;
    return true;
}

bool Cone::relint_contains(const IVec& a) const {
    for (const auto& z : span_equations_)
        if (dot(z, a) != 0) return false;
    for (const auto& f : facet_forms_)
        if (dot(f, a) <= 0) return false;
    return true;
}

IVec Cone::relint_point() const {
    IVec p(ambient_dim_, Int(0));
    for (const auto& r : rays_) p = add(p, r);
    return p;
}

std::vector<Cone> Cone::faces() const {
    std::map<std::string, Cone> found;
    const size_t nf = facet_forms_.size();
    if (nf > 24) throw Error("TooManyFacets", "face enumeration limit exceeded");
    for (size_t mask = 0; mask < (size_t(1) << nf); ++mask) {
        IMat tight_rays;
        for (const auto& r : rays_) {
            bool tight = true;
            for (size_t i = 0; i < nf && tight; ++i)
                if ((mask >> i) & 1)
                    if (dot(facet_forms_[i], r) != 0) tight = false;
            if (tight) tight_rays.push_back(r);
        }
        Cone f = from_generators(tight_rays, ambient_dim_);
        found.emplace(f.key(), std::move(f));
    }
    found.emplace(zero(ambient_dim_).key(), zero(ambient_dim_));
    std::vector<Cone> out;
    out.reserve(found.size());
    for (auto& [k, c] : found) out.push_back(std::move(c));
    return out;
}

Cone Cone::intersect(const Cone& other) const {
    IMat eqs = span_equations_;
    for (const auto& z : other.span_equations_) eqs.push_back(z);
    IMat ineqs = facet_forms_;
    for (const auto& f : other.facet_forms_) ineqs.push_back(f);
    return from_constraints(eqs, ineqs, ambient_dim_);
}

bool Cone::is_face_of(const Cone& other) const {
    if (!other.contains(*this)) return false;
    if (is_zero()) return true;
    // the smallest face of `other` containing us is cut by the facets of
    // `other` tight at one of our relative interior points
    const IVec p = relint_point();
    IMat tight_rays;
    for (const auto& r : other.rays_) {
        bool tight = true;
        for (const auto& f : other.facet_forms_)
            if (dot(f, p) == 0 && dot(f, r) != 0) {
                tight = false;
                break;
            }
        if (tight) tight_rays.push_back(r);
    }
    return *this == from_generators(tight_rays, ambient_dim_);
}

Cone Cone::negated() const {
    Cone c = *this;
    IMat rays;
    for (const auto& r : rays_) rays.push_back(tfr::negated(r));
    IMat forms;
    for (const auto& f : facet_forms_) forms.push_back(tfr::negated(f));
    std::sort(rays.begin(), rays.end());
    std::sort(forms.begin(), forms.end());
    c.rays_ = std::move(rays);
    if (dim_ != 1) c.facet_forms_ = std::move(forms);
    else c.facet_forms_ = {c.rays_[0]};
    return c;
}

bool Cone::operator==(const Cone& other) const {
    return ambient_dim_ == other.ambient_dim_ && dim_ == other.dim_ && rays_ == other.rays_;
}

std::string Cone::key() const {
    std::string s = "d" + std::to_string(dim_);
    for (const auto& r : rays_) s += "|" + to_string(r);
    return s;
}

}  // namespace tfr
