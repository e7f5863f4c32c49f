#include "tfr/shelling.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tfr {

namespace {

enum class Tri { yes, no, maybe };

struct SearchCtx {
    unsigned long long budget;
    unsigned long long nodes = 0;
    bool exhausted = false;
    std::map<std::string, bool> memo;  // exhaustive answers only

    bool tick() {
        ++nodes;
        if (nodes > budget) {
            exhausted = true;
            return false;
        }
        return true;
    }
};

std::string fan_signature(const Fan& f) {
    std::string s;
    for (const auto& c : f.cones()) s += c.key() + ";";
    return s;
}

// Facets of the union-of-intersections subfan against cone j, or nullopt
// when that subfan is not pure codimension 1 inside cone j.
std::optional<std::vector<size_t>> intersection_facets(const Fan& f,
                                                       const std::vector<size_t>& earlier,
                                                       size_t j, const Fan& boundary) {
    Fan pi = Fan::empty(f.ambient_dim());
    for (size_t i : earlier)
        pi = pi.fan_union(Fan::of_cone(f.cone(i).intersect(f.cone(j))));
    if (pi.is_empty()) return std::nullopt;
    std::vector<size_t> facets;
    for (size_t m : pi.maximal()) {
        auto idx = boundary.index_of(pi.cone(m));
        if (!idx) return std::nullopt;
        bool is_max = false;
        for (size_t b : boundary.maximal()) is_max = is_max || (b == *idx);
        if (!is_max) return std::nullopt;  // lower-dimensional piece
        facets.push_back(*idx);
    }
    std::sort(facets.begin(), facets.end());
    return facets;
}

Tri shelling_with_prefix(const Fan& b, const std::vector<size_t>& required_first,
                         SearchCtx& ctx, std::vector<size_t>* found);

// Can `cone_idx` legally extend `chosen` as the next shelling element of b?
Tri step_ok(const Fan& b, const std::vector<size_t>& chosen, size_t cone_idx,
            SearchCtx& ctx) {
    const Cone& c = b.cone(cone_idx);
    if (c.dim() == 0) return chosen.empty() ? Tri::yes : Tri::no;
    Fan boundary = boundary_fan(c);
    if (chosen.empty())  // the first facet only needs a shellable boundary
        return shelling_with_prefix(boundary, {}, ctx, nullptr);
    auto facets = intersection_facets(b, chosen, cone_idx, boundary);
    if (!facets) return Tri::no;
    return shelling_with_prefix(boundary, *facets, ctx, nullptr);
}

// Is there a shelling of b whose first |required_first| elements are
// exactly that set? Exhaustive backtracking under the node budget.
Tri shelling_with_prefix(const Fan& b, const std::vector<size_t>& required_first,
                         SearchCtx& ctx, std::vector<size_t>* found) {
    std::string key = fan_signature(b) + "#";
    for (size_t i : required_first) key += b.cone(i).key() + ",";
    if (auto it = ctx.memo.find(key); it != ctx.memo.end() && !found)
        return it->second ? Tri::yes : Tri::no;

    const auto& maxc = b.maximal();
    std::set<size_t> required(required_first.begin(), required_first.end());
    bool hit_budget = false;

    std::vector<size_t> chosen;
    std::vector<bool> used(maxc.size(), false);

    // depth-first over positions; lexicographic by maximal-cone list order
    std::function<Tri()> dfs = [&]() -> Tri {
        if (!ctx.tick()) return Tri::maybe;
        if (chosen.size() == maxc.size()) return Tri::yes;
        bool any_maybe = false;
        for (size_t k = 0; k < maxc.size(); ++k) {
            if (used[k]) continue;
            const size_t idx = maxc[k];
            const bool in_req = required.count(idx) > 0;
            if (chosen.size() < required.size() ? !in_req : in_req) continue;
            Tri ok = step_ok(b, chosen, idx, ctx);
            if (ok == Tri::maybe) {
                any_maybe = true;
                continue;
            }
            if (ok == Tri::no) continue;
            used[k] = true;
            chosen.push_back(idx);
            Tri sub = dfs();
            if (sub == Tri::yes) return Tri::yes;
            if (sub == Tri::maybe) any_maybe = true;
            chosen.pop_back();
            used[k] = false;
        }
        return any_maybe ? Tri::maybe : Tri::no;
    };

    Tri res = dfs();
    if (res == Tri::yes && found) *found = chosen;
    if (res == Tri::maybe) hit_budget = true;
    if (!hit_budget) ctx.memo[key] = (res == Tri::yes);
    return res;
}

ShellingResult run_order(const Fan& f, const std::vector<size_t>& order,
                         SearchCtx& ctx) {
    ShellingResult out;
    ShellingCertificate cert;
    cert.order = order;
    for (size_t j = 0; j < order.size(); ++j) {
        const Cone& c = f.cone(order[j]);
        ShellingStep step;
        if (c.dim() == 0) {
            if (order.size() != 1) {
                out.outcome = ShellingOutcome::not_shellable;
                return out;
            }
            cert.steps.push_back(step);
            continue;
        }
        Fan boundary = boundary_fan(c);
        std::vector<size_t> required;
        if (j > 0) {
            std::vector<size_t> earlier(order.begin(), order.begin() + j);
            auto facets = intersection_facets(f, earlier, order[j], boundary);
            if (!facets) {
                out.outcome = ShellingOutcome::not_shellable;
                return out;
            }
            required = *facets;
        }
        std::vector<size_t> border;
        Tri ok = shelling_with_prefix(boundary, required, ctx, &border);
        if (ok != Tri::yes) {
            out.outcome = ok == Tri::no ? ShellingOutcome::not_shellable
                                        : ShellingOutcome::inconclusive;
            return out;
        }
        for (size_t i : required) step.intersection_facets.push_back(boundary.cone(i).key());
        for (size_t i : border) step.boundary_order.push_back(boundary.cone(i).key());
        step.prefix_len = required.size();
        cert.steps.push_back(std::move(step));
    }
    out.outcome = ShellingOutcome::shellable;
    out.certificate = std::move(cert);
    return out;
}

}  // namespace

ShellingResult verify_shelling(const Fan& f, const std::vector<size_t>& order,
                               unsigned long long budget) {
    std::vector<size_t> sorted = order, maxc = f.maximal();
    std::sort(sorted.begin(), sorted.end());
    std::sort(maxc.begin(), maxc.end());
    if (sorted != maxc)
        throw Error("NotMaximalPermutation", "order must list each maximal cone once");
    SearchCtx ctx{budget};
    ShellingResult out = run_order(f, order, ctx);
    out.nodes = ctx.nodes;
    return out;
}

ShellingResult find_shelling(const Fan& f, unsigned long long budget) {
    SearchCtx ctx{budget};
    const auto& maxc = f.maximal();
    ShellingResult out;
    if (maxc.empty()) {
        out.outcome = ShellingOutcome::not_shellable;  // nothing to shell
        return out;
    }

    std::vector<size_t> order;
    std::vector<bool> used(maxc.size(), false);
    bool any_maybe = false;

    std::function<bool()> dfs = [&]() -> bool {
        if (!ctx.tick()) {
            any_maybe = true;
            return false;
        }
        if (order.size() == maxc.size()) return true;
        for (size_t k = 0; k < maxc.size(); ++k) {
            if (used[k]) continue;
            Tri ok = step_ok(f, order, maxc[k], ctx);
            if (ok == Tri::maybe) {
                any_maybe = true;
                continue;
            }
            if (ok == Tri::no) continue;
            used[k] = true;
            order.push_back(maxc[k]);
            if (dfs()) return true;
            order.pop_back();
            used[k] = false;
        }
        return false;
    };

    if (dfs()) {
        SearchCtx vctx{budget};
        out = run_order(f, order, vctx);
        out.nodes = ctx.nodes + vctx.nodes;
        return out;
    }
    out.nodes = ctx.nodes;
    out.outcome = any_maybe ? ShellingOutcome::inconclusive : ShellingOutcome::not_shellable;
    return out;
}

ShellingCertificate rearrange_decreasing(const Fan& f, const ShellingCertificate& cert,
                                         unsigned long long budget) {
    std::vector<size_t> order = cert.order;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return f.cone(a).dim() > f.cone(b).dim();
    });
    ShellingResult res = verify_shelling(f, order, budget);
    if (res.outcome != ShellingOutcome::shellable || !res.certificate)
        throw Error("RearrangementFailed", "decreasing reorder is not a shelling");
    return *res.certificate;
}

}  // namespace tfr
