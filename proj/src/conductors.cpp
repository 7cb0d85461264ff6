#include "ramlab/conductors.hpp"

#include <algorithm>
#include <sstream>

namespace ramlab {

// --- GroupRepresentation -----------------------------------------------------

GroupRepresentation GroupRepresentation::character(const GroupView& view,
                                                   std::vector<long long> values,
                                                   long long modulus) {
    if (modulus < 1) throw DomainError("character modulus must be positive");
    if ((long long)values.size() != view.size)
        throw DomainError("character needs one value per group element");
    for (auto& v : values) v = ((v % modulus) + modulus) % modulus;
    if (view.identity < 0) throw DomainError("character needs a valid group");
    for (int i = 0; i < view.size; ++i)
        for (int j = 0; j < view.size; ++j) {
            int k = view.table[(size_t)i][(size_t)j];
            if (k < 0) throw DomainError("character needs a closed group");
            if ((values[(size_t)i] + values[(size_t)j]) % modulus != values[(size_t)k])
                throw DomainError("character values are not a homomorphism");
        }
    GroupRepresentation r;
    r.kind_ = Kind::abelian_character;
    r.dim_ = 1;
    r.group_size_ = view.size;
    r.values_ = std::move(values);
    r.modulus_ = modulus;
    return r;
}

GroupRepresentation GroupRepresentation::trivial_character(const GroupView& view) {
    return character(view, std::vector<long long>((size_t)view.size, 0), view.size);
}

GroupRepresentation GroupRepresentation::permutation(const GroupView& view,
                                                     std::vector<std::vector<int>> images) {
    if ((long long)images.size() != view.size)
        throw DomainError("permutation action needs one map per group element");
    size_t N = images.empty() ? 0 : images[0].size();
    if (N == 0) throw DomainError("permutation action needs a nonempty set");
    for (const auto& img : images) {
        if (img.size() != N) throw DomainError("permutation maps must share one set");
        std::vector<bool> seen(N, false);
        for (int x : img) {
            if (x < 0 || (size_t)x >= N || seen[(size_t)x])
                throw DomainError("permutation map is not a bijection");
            seen[(size_t)x] = true;
        }
    }
    for (int i = 0; i < view.size; ++i)
        for (int j = 0; j < view.size; ++j) {
            int k = view.table[(size_t)i][(size_t)j];
            if (k < 0) throw DomainError("permutation action needs a closed group");
            for (size_t x = 0; x < N; ++x)
                if (images[(size_t)k][x] != images[(size_t)i][(size_t)images[(size_t)j][x]])
                    throw DomainError("permutation action does not respect composition");
        }
    GroupRepresentation r;
    r.kind_ = Kind::permutation;
    r.dim_ = (long long)N;
    r.group_size_ = view.size;
    r.images_ = std::move(images);
    return r;
}

GroupRepresentation GroupRepresentation::regular(const GroupView& view) {
    GroupRepresentation r;
    r.kind_ = Kind::regular;
    r.dim_ = view.size;
    r.group_size_ = view.size;
    return r;
}

GroupRepresentation GroupRepresentation::direct_sum(std::vector<GroupRepresentation> parts) {
    if (parts.empty()) throw DomainError("direct sum needs at least one part");
    GroupRepresentation r;
    r.kind_ = Kind::direct_sum;
    r.group_size_ = parts[0].group_size_;
    r.dim_ = 0;
    for (const auto& p : parts) {
        if (p.group_size_ != r.group_size_)
            throw DomainError("direct sum parts must share one group");
        r.dim_ += p.dim_;
    }
    r.parts_ = std::move(parts);
    return r;
}

long long GroupRepresentation::fixed_dim(const GroupView& view, uint64_t subgroup_mask) const {
    if (!view.is_subgroup(subgroup_mask))
        throw DomainError("fixed_dim needs a subgroup of the representation's group");
    switch (kind_) {
        case Kind::abelian_character: {
            for (int i = 0; i < view.size; ++i)
                if ((subgroup_mask >> i & 1) && values_[(size_t)i] % modulus_ != 0) return 0;
            return 1;
        }
        case Kind::permutation: {
            // orbits of the subgroup on the permuted set
            size_t N = images_[0].size();
            std::vector<bool> seen(N, false);
            long long orbits = 0;
            for (size_t start = 0; start < N; ++start) {
                if (seen[start]) continue;
                ++orbits;
                std::vector<size_t> stack{start};
                seen[start] = true;
                while (!stack.empty()) {
                    size_t x = stack.back();
                    stack.pop_back();
                    for (int g = 0; g < view.size; ++g) {
                        if (!(subgroup_mask >> g & 1)) continue;
                        size_t y = (size_t)images_[(size_t)g][x];
                        if (!seen[y]) { seen[y] = true; stack.push_back(y); }
                    }
                }
            }
            return orbits;
        }
        case Kind::regular:
            return (long long)view.size / GroupView::mask_size(subgroup_mask);
        case Kind::direct_sum: {
            long long s = 0;
            for (const auto& p : parts_) s += p.fixed_dim(view, subgroup_mask);
            return s;
        }
    }
    throw DomainError("unknown representation kind");
}

std::string GroupRepresentation::describe() const {
    switch (kind_) {
        case Kind::abelian_character: {
            std::ostringstream os;
            os << "character(";
            for (size_t i = 0; i < values_.size(); ++i) {
                if (i) os << ",";
                os << values_[i];
            }
            os << " mod " << modulus_ << ")";
            return os.str();
        }
        case Kind::permutation: return "permutation(dim " + std::to_string(dim_) + ")";
        case Kind::regular: return "regular(dim " + std::to_string(dim_) + ")";
        case Kind::direct_sum: return "direct_sum(dim " + std::to_string(dim_) + ")";
    }
    return "?";
}

// --- conductors ---------------------------------------------------------------

Rational swan_conductor(const UpperFiltration& u, const GroupRepresentation& rep) {
    const GroupView& view = u.datum->group_view();
    if (u.group_size != view.size)
        throw DomainError("filtration and representation group sizes differ");
    Rational sw(0);
    for (size_t i = 0; i < u.breaks.size(); ++i) {
        if (!(u.breaks[i] > Rational(0))) continue;
        uint64_t at = u.subgroups[i];
        uint64_t succ = i + 1 < u.breaks.size() ? u.subgroups[i + 1] : u.identity_mask();
        long long jump = rep.fixed_dim(view, succ) - rep.fixed_dim(view, at);
        if (jump < 0)
            throw InternalInconsistencyError("fixed spaces are not nested along the filtration");
        sw += u.breaks[i] * Rational(jump);
    }
    if (!sw.is_integer())
        throw InternalInconsistencyError("Swan conductor integrality violated: Sw = " + sw.str());
    return sw;
}

ConductorReport artin_conductor(const UpperFiltration& u, const GroupRepresentation& rep) {
    const GroupView& view = u.datum->group_view();
    ConductorReport r;
    r.swan = swan_conductor(u, rep);
    r.epsilon = rep.dim() - rep.fixed_dim(view, u.level(Rational(0)));
    r.artin = Rational(r.epsilon) + r.swan;
    return r;
}

SwanBoundReport check_swan_dim_bound(const UpperFiltration& u, const GroupRepresentation& rep,
                                     const Rational& lambda) {
    auto mx = u.max_break();
    if (mx && *mx > lambda)
        throw DomainError("filtration is not bounded by lambda = " + lambda.str());
    SwanBoundReport report;
    report.swan = swan_conductor(u, rep);
    report.dim_times_lambda = Rational(rep.dim()) * lambda;
    report.ok = report.swan <= report.dim_times_lambda;
    if (!report.ok)
        throw InternalInconsistencyError("Swan-dimension bound violated: " + report.swan.str() +
                                         " > " + report.dim_times_lambda.str());
    return report;
}

std::vector<GroupRepresentation> character_group(const GroupView& view) {
    if (view.identity < 0) throw DomainError("character group needs a valid group");
    if (!view.is_abelian()) throw DomainError("character enumeration needs an abelian group");
    const long long N = view.size;

    // grow from the trivial subgroup, extending every character in all
    // possible ways each time a new generator is adjoined
    std::vector<int> members{view.identity};
    uint64_t mask = 1ull << view.identity;
    std::vector<std::vector<long long>> chars{std::vector<long long>((size_t)N, -1)};
    chars[0][(size_t)view.identity] = 0;

    while ((long long)members.size() < N) {
        int g = -1;
        for (int i = 0; i < N; ++i)
            if (!(mask >> i & 1)) { g = i; break; }
        // order of g modulo the current subgroup
        long long d = 1;
        int gk = g;
        while (!(mask >> gk & 1)) {
            gk = view.compose(gk, g);
            ++d;
        }
        // gk = g^d is in the subgroup
        std::vector<std::vector<long long>> next;
        for (const auto& chi : chars) {
            long long c = chi[(size_t)gk];
            for (long long v = 0; v < N; ++v) {
                if ((d * v) % N != c) continue;
                std::vector<long long> ext = chi;
                // fill values on h * g^k
                int gpow = view.identity;
                for (long long k = 0; k < d; ++k) {
                    for (int h : members) {
                        int x = view.compose(h, gpow);
                        ext[(size_t)x] = (chi[(size_t)h] + k * v) % N;
                    }
                    gpow = view.compose(gpow, g);
                }
                next.push_back(std::move(ext));
            }
        }
        chars = std::move(next);
        // enlarge the subgroup
        std::vector<int> grown;
        int gpow = view.identity;
        for (long long k = 0; k < d; ++k) {
            for (int h : members) grown.push_back(view.compose(h, gpow));
            gpow = view.compose(gpow, g);
        }
        members = std::move(grown);
        mask = 0;
        for (int h : members) mask |= 1ull << h;
    }
    if ((long long)chars.size() != N)
        throw InternalInconsistencyError("character count != |G|");
    std::sort(chars.begin(), chars.end());
    std::vector<GroupRepresentation> out;
    out.reserve(chars.size());
    for (auto& values : chars)
        out.push_back(GroupRepresentation::character(view, std::move(values), N));
    return out;
}

} // namespace ramlab
